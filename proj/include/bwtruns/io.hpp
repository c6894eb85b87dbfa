#pragma once

// JSON and CSV renderings of the library's reports, and the fixed-width
// text rendering of a sorted rotation matrix.

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bwtruns/bwt.hpp"
#include "bwtruns/closed_forms.hpp"
#include "bwtruns/rho_search.hpp"
#include "bwtruns/word.hpp"

namespace bwtruns {

using json = nlohmann::json;

// {word, bwt, bw_array, r, r_rev, rho_num, rho_den}
inline json word_record(const Word& w) {
  const auto res = bwt_fast(w);
  const std::size_t r_fwd = count_runs(res.transformed);
  const std::size_t r_rev = r(reverse(w));
  const RhoValue value = RhoValue::ratio(r_fwd, r_rev);
  return json{{"word", w.str()},
              {"bwt", res.transformed.str()},
              {"bw_array", res.bw_array},
              {"r", r_fwd},
              {"r_rev", r_rev},
              {"rho_num", value.numerator()},
              {"rho_den", value.denominator()}};
}

inline json to_json(const ClosedFormCase& c) {
  json j;
  if (c.family == ClosedFormCase::Family::fibplus) {
    j["family"] = "fibplus";
    j["params"] = {{"k", c.k}, {"parity", to_string(c.parity)}};
    j["predicted_rle"] = {{"v", c.predicted_rle}, {"v_rev", c.predicted_rle_rev}};
  } else {
    j["family"] = "stdplus";
    j["params"] = {{"directive", c.directive.to_string()}, {"order", c.directive.order()}};
    j["predicted_rle"] = nullptr;
    j["structure_ok"] = c.structure_ok;
  }
  j["computed_rle"] = {{"v", c.computed_rle}, {"v_rev", c.computed_rle_rev}};
  j["predicted_r"] = {{"v", c.predicted_r}, {"v_rev", c.predicted_r_rev}};
  j["computed_r"] = {{"v", c.computed_r}, {"v_rev", c.computed_r_rev}};
  j["match"] = c.match;
  return j;
}

inline json to_json(const VerificationReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases) cases.push_back(to_json(c));
  return json{{"cases", cases}, {"matches", rep.matches()}, {"mismatches", rep.mismatches()}};
}

inline json to_json(const RhoReport& rep) {
  return json{{"n", rep.n},
              {"rho_decimal", rep.rho.decimal()},
              {"rho_exact", rep.rho.exact()},
              {"witness", rep.witnesses.empty() ? std::string() : rep.witnesses.front()},
              {"witnesses", rep.witnesses},
              {"witness_count", rep.witness_count},
              {"necklaces", rep.necklaces},
              {"words_scanned", rep.words_scanned},
              {"seconds", rep.seconds}};
}

inline constexpr const char* kRhoCsvHeader = "n,rho_decimal,rho_exact,witness,words_scanned,seconds";

inline std::string to_csv_row(const RhoReport& rep) {
  std::ostringstream os;
  os << rep.n << ',' << rep.rho.decimal() << ',' << rep.rho.exact() << ','
     << (rep.witnesses.empty() ? std::string() : rep.witnesses.front()) << ',' << rep.words_scanned << ','
     << std::fixed << std::setprecision(3) << rep.seconds;
  return os.str();
}

// Columns: rank | rotation index | rotation | last letter.
inline std::string render_matrix(const Word& w, std::size_t render_limit = kDefaultRenderLimit) {
  const auto rows = bwt_matrix(w, render_limit);
  const std::size_t width = std::to_string(w.size()).size();
  std::ostringstream os;
  os << std::setw(static_cast<int>(width)) << "#" << "  " << std::setw(static_cast<int>(width)) << "i"
     << "  " << std::left << std::setw(static_cast<int>(w.size())) << "rotation" << std::right << "  L\n";
  for (const auto& row : rows) {
    os << std::setw(static_cast<int>(width)) << row.rank << "  " << std::setw(static_cast<int>(width))
       << row.rotation_index << "  " << row.rotation.str() << "  " << row.rotation.str().back() << '\n';
  }
  return os.str();
}

}  // namespace bwtruns
