#pragma once

// Command-line front end. run() parses argv, calls the library and writes
// the report to `out`; diagnostics go to `err`.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bwtruns/bwt.hpp"
#include "bwtruns/closed_forms.hpp"
#include "bwtruns/io.hpp"
#include "bwtruns/rho_search.hpp"
#include "bwtruns/standard_words.hpp"
#include "bwtruns/word.hpp"

namespace bwtruns::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Lengths above this are long-running in `table rho` and need --force.
inline constexpr std::size_t kQuickTableLimit = 22;
// `table rho` prints a runtime estimate above this length.
inline constexpr std::size_t kEstimateThreshold = 26;

enum class OutputFormat { plain, json, csv };

struct CliConfig {
  std::string subcommand;
  OutputFormat format = OutputFormat::plain;
  std::size_t jobs = 1;
  std::size_t cap = kDefaultSearchCap;
  std::uint64_t seed = 1;
};

inline std::size_t cap_from_env() {
  if (const char* v = std::getenv("BWTRUNS_CAP"); v != nullptr && *v != '\0') {
    try {
      const unsigned long parsed = std::stoul(v);
      if (parsed >= 1) return parsed;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSearchCap;
}

namespace detail {

inline void print_word_plain(std::ostream& out, const Word& w) {
  const auto res = bwt_fast(w);
  out << "word      " << w << '\n'
      << "bwt       " << res.transformed << '\n'
      << "rle       " << rle(res.transformed) << '\n'
      << "bw_array ";
  for (auto i : res.bw_array) out << ' ' << i;
  out << '\n' << "r         " << count_runs(res.transformed) << '\n';
}

inline void print_generated(std::ostream& out, OutputFormat fmt, const std::string& family, const std::string& params,
                            const Word& w) {
  if (fmt == OutputFormat::json) {
    out << json{{"family", family}, {"params", params}, {"word", w.str()}, {"length", w.size()}}.dump() << '\n';
  } else if (fmt == OutputFormat::csv) {
    out << "family,params,length,word\n" << family << ",\"" << params << "\"," << w.size() << ',' << w << '\n';
  } else {
    out << w << '\n';
  }
}

inline void print_rho_table(std::ostream& out, OutputFormat fmt, const std::vector<RhoReport>& reps) {
  if (fmt == OutputFormat::json) {
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else if (fmt == OutputFormat::csv) {
    out << kRhoCsvHeader << '\n';
    for (const auto& r : reps) out << to_csv_row(r) << '\n';
  } else {
    out << std::left << std::setw(4) << "n" << std::setw(7) << "rho" << std::setw(7) << "exact"
        << std::setw(12) << "scanned" << std::setw(10) << "seconds" << "witness" << '\n';
    for (const auto& r : reps) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(2) << r.seconds;
      out << std::setw(4) << r.n << std::setw(7) << r.rho.decimal() << std::setw(7) << r.rho.exact()
          << std::setw(12) << r.words_scanned << std::setw(10) << secs.str()
          << (r.witnesses.empty() ? "" : r.witnesses.front()) << '\n';
    }
    out << std::right;
  }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  cfg.cap = cap_from_env();
  cfg.jobs = 1;

  CLI::App app{"Burrows-Wheeler transform run counts and runs-ratio workbench", "bwtruns"};
  app.require_subcommand(1);
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads for searches and sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string word_arg;
  auto* bwt_cmd = app.add_subcommand("bwt", "BWT, BW-array and run count of a word");
  bwt_cmd->add_option("word", word_arg, "Word over {a,b}")->required();

  auto* rho_cmd = app.add_subcommand("rho", "r(w), r(w^rev) and the runs-ratio of a word");
  rho_cmd->add_option("word", word_arg, "Word over {a,b}")->required();

  auto* invert_cmd = app.add_subcommand("invert", "Least word (Lyndon representative) with the given BWT");
  invert_cmd->add_option("bwt", word_arg, "BWT image over {a,b}")->required();

  std::size_t render_limit = kDefaultRenderLimit;
  auto* matrix_cmd = app.add_subcommand("matrix", "Sorted rotation matrix of a word");
  matrix_cmd->add_option("word", word_arg, "Word over {a,b}")->required();
  matrix_cmd->add_option("--limit", render_limit, "Largest word length rendered")->capture_default_str();

  auto* gen_cmd = app.add_subcommand("gen", "Generate words of the standard families");
  gen_cmd->require_subcommand(1);
  std::size_t index_arg = 0;
  std::string directive_arg;
  bool odd = false;
  auto* gen_fib = gen_cmd->add_subcommand("fib", "Fibonacci word s_i");
  gen_fib->add_option("i", index_arg, "Order")->required();
  auto* gen_std = gen_cmd->add_subcommand("std", "Standard word of a directive sequence");
  gen_std->add_option("directive", directive_arg, "Comma-separated d0,d1,...")->required();
  auto* gen_fibplus = gen_cmd->add_subcommand("fibplus", "Fibonacci-plus word s_{2k}b (or s_{2k+1}a with --odd)");
  gen_fibplus->add_option("k", index_arg, "k >= 2")->required();
  gen_fibplus->add_flag("--odd", odd, "Odd order");
  auto* gen_stdplus = gen_cmd->add_subcommand("stdplus", "Standard-plus word of a directive sequence");
  gen_stdplus->add_option("directive", directive_arg, "Comma-separated d0,d1,... with d0 >= 1")->required();

  auto* table_cmd = app.add_subcommand("table", "Reproduce the rho(n) tables");
  table_cmd->require_subcommand(1);
  std::size_t from = 0, to = 0, alphabet = 2;
  bool force = false;
  auto* table_rho = table_cmd->add_subcommand("rho", "Exhaustive rho(n) over all words of length n");
  table_rho->add_option("--from", from, "First length")->required();
  table_rho->add_option("--to", to, "Last length")->required();
  table_rho->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  table_rho->add_flag("--force", force, "Allow long-running lengths");
  table_rho->add_option("--alphabet", alphabet, "Alphabet size (3 is experimental)")
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  auto* table_stdplus = table_cmd->add_subcommand("stdplus", "Maximum rho over standard-plus words of length n");
  table_stdplus->add_option("--from", from, "First length")->required();
  table_stdplus->add_option("--to", to, "Last length")->required();
  std::string parity_name = "even";
  table_stdplus->add_option("--parity", parity_name, "Orders searched")
      ->check(CLI::IsMember({"even", "odd", "both"}))
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check the closed forms against the engine");
  verify_cmd->require_subcommand(1);
  std::size_t kmax = 12;
  DirectiveSampler sampler;
  auto* verify_fib = verify_cmd->add_subcommand("fibplus", "Fibonacci-plus BWT closed forms, both parities");
  verify_fib->add_option("--kmax", kmax, "Largest k")->capture_default_str();
  verify_fib->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* verify_std = verify_cmd->add_subcommand("stdplus", "Run-count predictions on random standard-plus words");
  verify_std->add_option("--trials", sampler.trials, "Number of random directives")->capture_default_str();
  verify_std->add_option("--seed", sampler.seed, "Generator seed")->capture_default_str();
  verify_std->add_option("--max-entry", sampler.max_entry, "Directive entries are drawn from 1..max")
      ->capture_default_str();
  verify_std->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::size_t catastrophe_k = 0;
  auto* catastrophe_cmd = app.add_subcommand("catastrophe", "r before and after prepending b to reverse(s_{2k})");
  catastrophe_cmd->add_option("--k", catastrophe_k, "k >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  cfg.format = format_name == "json" ? OutputFormat::json : format_name == "csv" ? OutputFormat::csv : OutputFormat::plain;
  cfg.seed = sampler.seed;
  const auto fmt = cfg.format;

  try {
    if (*bwt_cmd) {
      cfg.subcommand = "bwt";
      const Word w(word_arg);
      if (w.empty()) throw contract_error("empty word");
      if (fmt == OutputFormat::plain) {
        detail::print_word_plain(out, w);
      } else if (fmt == OutputFormat::json) {
        out << word_record(w).dump() << '\n';
      } else {
        const auto rec = word_record(w);
        out << "word,bwt,r\n" << w << ',' << rec["bwt"].get<std::string>() << ',' << rec["r"].get<std::size_t>() << '\n';
      }
      return kExitOk;
    }

    if (*rho_cmd) {
      cfg.subcommand = "rho";
      const Word w(word_arg);
      if (w.empty()) throw contract_error("empty word");
      const auto rec = word_record(w);
      const RhoValue value(rec["rho_num"].get<std::uint64_t>(), rec["rho_den"].get<std::uint64_t>());
      if (fmt == OutputFormat::json) {
        out << rec.dump() << '\n';
      } else if (fmt == OutputFormat::csv) {
        out << "word,r,r_rev,rho_exact,rho_decimal\n"
            << w << ',' << rec["r"] << ',' << rec["r_rev"] << ',' << value.exact() << ',' << value.decimal() << '\n';
      } else {
        out << "word   " << w << '\n'
            << "r      " << rec["r"] << '\n'
            << "r_rev  " << rec["r_rev"] << '\n'
            << "rho    " << value.exact() << " (" << value.decimal() << ")\n";
      }
      return kExitOk;
    }

    if (*invert_cmd) {
      cfg.subcommand = "invert";
      const Word t(word_arg);
      if (t.empty()) throw contract_error("empty BWT");
      const Word w = bwt_invert(t);
      if (fmt == OutputFormat::json) {
        out << json{{"bwt", t.str()}, {"word", w.str()}, {"representative", "least conjugate"}}.dump() << '\n';
      } else if (fmt == OutputFormat::csv) {
        out << "bwt,word\n" << t << ',' << w << '\n';
      } else {
        out << w << '\n';
      }
      return kExitOk;
    }

    if (*matrix_cmd) {
      cfg.subcommand = "matrix";
      const Word w(word_arg);
      if (fmt == OutputFormat::json) {
        json rows = json::array();
        for (const auto& row : bwt_matrix(w, render_limit)) {
          rows.push_back({{"rank", row.rank},
                          {"rotation_index", row.rotation_index},
                          {"rotation", row.rotation.str()},
                          {"last", std::string(1, row.rotation.str().back())}});
        }
        out << rows.dump(2) << '\n';
      } else if (fmt == OutputFormat::csv) {
        out << "rank,rotation_index,rotation,last\n";
        for (const auto& row : bwt_matrix(w, render_limit)) {
          out << row.rank << ',' << row.rotation_index << ',' << row.rotation << ',' << row.rotation.str().back() << '\n';
        }
      } else {
        out << render_matrix(w, render_limit);
      }
      return kExitOk;
    }

    if (*gen_cmd) {
      cfg.subcommand = "gen";
      if (*gen_fib) {
        detail::print_generated(out, fmt, "fib", std::to_string(index_arg), fibonacci_word(index_arg));
      } else if (*gen_std) {
        const auto d = DirectiveSequence::parse(directive_arg);
        detail::print_generated(out, fmt, "std", d.to_string(), standard_word(d));
      } else if (*gen_fibplus) {
        detail::print_generated(out, fmt, "fibplus", std::to_string(index_arg) + (odd ? ",odd" : ",even"),
                                fibonacci_plus(index_arg, odd ? Parity::odd : Parity::even));
      } else {
        const auto d = DirectiveSequence::parse(directive_arg);
        detail::print_generated(out, fmt, "stdplus", d.to_string(), standard_plus(d));
      }
      return kExitOk;
    }

    if (*table_cmd) {
      cfg.subcommand = "table";
      if (from < 1 || from > to) throw contract_error("--from must be >= 1 and <= --to");
      if (*table_rho) {
        if (to > kQuickTableLimit && !force) {
          err << "error: lengths above " << kQuickTableLimit << " take long; pass --force to run them\n";
          return kExitUsage;
        }
        if (to > cfg.cap && !force) {
          err << "error: n = " << to << " exceeds the cap " << cfg.cap << "; pass --force\n";
          return kExitUsage;
        }
        SearchOptions opt;
        opt.jobs = cfg.jobs;
        opt.cap = cfg.cap;
        opt.force = force;
        opt.alphabet = alphabet;
        std::vector<RhoReport> reps;
        for (std::size_t n = from; n <= to; ++n) {
          if (n > kEstimateThreshold) {
            err << "n = " << n << ": estimated " << std::fixed << std::setprecision(0)
                << estimate_search_seconds(n, cfg.jobs, alphabet) << " s\n";
          }
          reps.push_back(rho_max(n, opt));
        }
        detail::print_rho_table(out, fmt, reps);
        return kExitOk;
      }
      // stdplus
      const OrderParity parity = parity_name == "odd"    ? OrderParity::odd
                                 : parity_name == "both" ? OrderParity::both
                                                         : OrderParity::even;
      if (from < 6) throw contract_error("standard-plus words have length >= 6");
      json arr = json::array();
      if (fmt == OutputFormat::csv) out << "n,rho_decimal,rho_exact,witness_directive,family_size\n";
      if (fmt == OutputFormat::plain) out << std::left << std::setw(4) << "n" << std::setw(7) << "rho" << std::setw(7) << "exact" << std::setw(8) << "family" << "witness" << '\n';
      for (std::size_t n = from; n <= to; ++n) {
        const auto best = stdplus_rho_max(n, parity);
        if (fmt == OutputFormat::json) {
          arr.push_back(best ? json{{"n", n},
                                    {"rho_decimal", best->rho.decimal()},
                                    {"rho_exact", best->rho.exact()},
                                    {"witness_directive", best->witness.to_string()},
                                    {"family_size", best->family_size}}
                             : json{{"n", n}, {"rho_decimal", nullptr}, {"rho_exact", nullptr}, {"family_size", 0}});
        } else if (fmt == OutputFormat::csv) {
          if (best) {
            out << n << ',' << best->rho.decimal() << ',' << best->rho.exact() << ",\"" << best->witness.to_string()
                << "\"," << best->family_size << '\n';
          } else {
            out << n << ",,,,0\n";
          }
        } else {
          if (best) {
            out << std::setw(4) << n << std::setw(7) << best->rho.decimal() << std::setw(7) << best->rho.exact()
                << std::setw(8) << best->family_size << best->witness.to_string() << '\n';
          } else {
            out << std::setw(4) << n << "undefined (no standard-plus word of this length)\n";
          }
        }
      }
      if (fmt == OutputFormat::json) out << arr.dump(2) << '\n';
      out << std::right;
      return kExitOk;
    }

    if (*verify_cmd) {
      cfg.subcommand = "verify";
      VerificationReport rep;
      std::string summary;
      if (*verify_fib) {
        rep = verify_closed_forms(kmax, {Parity::even, Parity::odd}, {}, cfg.jobs);
        summary = std::to_string(rep.matches()) + "/" + std::to_string(rep.cases.size()) + " closed forms match";
      } else {
        const auto directives = sample_even_directives(sampler);
        rep = verify_closed_forms(2, {}, directives, cfg.jobs);
        summary = std::to_string(rep.matches()) + "/" + std::to_string(rep.cases.size()) +
                  " standard-plus predictions match (seed " + std::to_string(sampler.seed) + ")";
      }
      if (fmt == OutputFormat::json) {
        json j = to_json(rep);
        if (*verify_std) j["seed"] = sampler.seed;
        out << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::csv) {
        out << "family,params,predicted_r,predicted_r_rev,computed_r,computed_r_rev,match\n";
        for (const auto& c : rep.cases) {
          const bool fib = c.family == ClosedFormCase::Family::fibplus;
          out << (fib ? "fibplus" : "stdplus") << ",\""
              << (fib ? std::to_string(c.k) + "," + to_string(c.parity) : c.directive.to_string()) << "\","
              << c.predicted_r << ',' << c.predicted_r_rev << ',' << c.computed_r << ',' << c.computed_r_rev << ','
              << (c.match ? "true" : "false") << '\n';
        }
      } else {
        for (const auto& c : rep.cases) {
          if (c.family == ClosedFormCase::Family::fibplus) {
            out << (c.match ? "ok   " : "FAIL ") << "k=" << c.k << ' ' << to_string(c.parity) << "  r=" << c.computed_r
                << " r_rev=" << c.computed_r_rev << '\n';
            if (!c.match) {
              out << "     predicted " << c.predicted_rle << " | " << c.predicted_rle_rev << '\n'
                  << "     computed  " << c.computed_rle << " | " << c.computed_rle_rev << '\n';
            }
          } else if (!c.match) {
            out << "FAIL directive " << c.directive.to_string() << "  predicted r=" << c.predicted_r
                << " r_rev=" << c.predicted_r_rev << "  computed r=" << c.computed_r << " r_rev=" << c.computed_r_rev
                << (c.structure_ok ? "" : "  (b-run structure)") << '\n';
          }
        }
        out << summary << '\n';
      }
      return rep.all_match() ? kExitOk : kExitMismatch;
    }

    if (*catastrophe_cmd) {
      cfg.subcommand = "catastrophe";
      const auto rep = one_bit_catastrophe(catastrophe_k);
      if (fmt == OutputFormat::json) {
        out << json{{"k", rep.k},
                    {"base_word", rep.base_word.str()},
                    {"r_base", rep.r_base},
                    {"extended", rep.extended.str()},
                    {"r_extended", rep.r_extended},
                    {"ratio", rep.ratio.exact()}}
                   .dump()
            << '\n';
      } else if (fmt == OutputFormat::csv) {
        out << "k,length,r_base,r_extended,ratio\n"
            << rep.k << ',' << rep.base_word.size() << ',' << rep.r_base << ',' << rep.r_extended << ','
            << rep.ratio.exact() << '\n';
      } else {
        out << "k            " << rep.k << '\n'
            << "|u|          " << rep.base_word.size() << '\n'
            << "r(u)         " << rep.r_base << '\n'
            << "r(b.u)       " << rep.r_extended << '\n'
            << "ratio        " << rep.ratio.decimal() << '\n';
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bwtruns::cli
