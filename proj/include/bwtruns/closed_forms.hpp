#pragma once

// Closed-form BWTs of Fibonacci-plus words and their reverses, run-count
// predictions for standard-plus words, and the structural facts about the
// sorted matrix of reverse(s_{2k} b) that those forms rest on. Everything
// here is computed from the formulas alone and is compared against
// bwt_fast by verify_closed_forms().

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bwtruns/bwt.hpp"
#include "bwtruns/errors.hpp"
#include "bwtruns/parallel.hpp"
#include "bwtruns/standard_words.hpp"
#include "bwtruns/word.hpp"

namespace bwtruns {

// even: b^{F_{2k-2}} a^{F_{2k-1}-1} b a
// odd:  b a b^{F_{2k-1}-1} a^{F_{2k}}
inline RleString predicted_bwt_fibplus(std::size_t k, Parity parity) {
  if (k < 2) throw contract_error("Fibonacci-plus closed forms need k >= 2");
  RleString out;
  if (parity == Parity::even) {
    out.append('b', fibonacci_number(2 * k - 2)).append('a', fibonacci_number(2 * k - 1) - 1).append('b', 1).append('a', 1);
  } else {
    out.append('b', 1).append('a', 1).append('b', fibonacci_number(2 * k - 1) - 1).append('a', fibonacci_number(2 * k));
  }
  return out;
}

// Three parts of bwt(reverse(s_{2k} b)), in matrix order.
inline RleString predicted_rev_top(std::size_t k) {
  return RleString{}.append('b', fibonacci_number(2 * k - 2) - k + 1);
}
inline RleString predicted_rev_mid(std::size_t k) {
  RleString out;
  for (std::size_t j = 0; j + 2 <= k; ++j) out.append('a', fibonacci_number(2 * j)).append('b', 1);
  return out;
}
inline RleString predicted_rev_bot(std::size_t k) {
  return RleString{}.append('b', 1).append('a', fibonacci_number(2 * k - 2));
}

// even: b^{F_{2k-2}-k+1} a^{F_0} b a^{F_2} b ... a^{F_{2k-4}} b . b a^{F_{2k-2}}
//       (the b closing the middle part and the b opening the bottom part form one run)
// odd:  b^{F_{2k-2}} aa b^{F_{2k-4}} a b^{F_{2k-6}} a ... b^{F_2} a b^{F_0} a^{F_{2k}-k+1}
inline RleString predicted_bwt_fibplus_rev(std::size_t k, Parity parity) {
  if (k < 2) throw contract_error("Fibonacci-plus closed forms need k >= 2");
  RleString out;
  if (parity == Parity::even) {
    out.append(predicted_rev_top(k)).append(predicted_rev_mid(k)).append(predicted_rev_bot(k));
  } else {
    for (std::size_t j = 0; j < k; ++j) {
      out.append('b', fibonacci_number(2 * (k - 1 - j)));
      if (j + 1 == k) {
        out.append('a', fibonacci_number(2 * k) - k + 1);
      } else {
        out.append('a', j == 0 ? 2 : 1);
      }
    }
  }
  return out;
}

namespace detail {
inline void require_even_stdplus(const DirectiveSequence& d) {
  if (d.size() == 0 || d[0] < 1) throw contract_error("standard-plus predictions need d_0 >= 1");
  if (d.order() < 4) throw contract_error("standard-plus predictions need order >= 4");
  if (d.order() % 2 != 0) {
    throw unsupported_order_error("run-count predictions are proven for even order only (order " +
                                  std::to_string(d.order()) + " given)");
  }
}
}  // namespace detail

inline std::size_t predicted_r_stdplus(const DirectiveSequence& d) {
  detail::require_even_stdplus(d);
  return 4;
}

// Order 2k: 2k when d_0 = 1, otherwise 2k + 2.
inline std::size_t predicted_r_stdplus_rev(const DirectiveSequence& d) {
  detail::require_even_stdplus(d);
  return d[0] == 1 ? d.order() : d.order() + 2;
}

// Soft structural check on bwt(v^rev) for an even standard-plus word v:
// the lengths of its b-runs contain d_3, d_5, ..., d_{2k-3} as a sub-multiset.
inline bool stdplus_rev_b_runs_contain_odd_directives(const DirectiveSequence& d, const Word& bwt_rev) {
  detail::require_even_stdplus(d);
  std::vector<std::uint64_t> b_runs;
  for (const auto& run : rle(bwt_rev).runs()) {
    if (run.letter == 'b') b_runs.push_back(run.exponent);
  }
  std::vector<std::uint64_t> wanted;
  for (std::size_t i = 3; i + 1 < d.size(); i += 2) wanted.push_back(d[i]);
  std::sort(b_runs.begin(), b_runs.end());
  std::sort(wanted.begin(), wanted.end());
  return std::includes(b_runs.begin(), b_runs.end(), wanted.begin(), wanted.end());
}

// Position of the three boundary rotations in the sorted matrix of
// reverse(s_{2k} b) = b b a x_{2k}:
//   conj_3 = a x bb   first row of the top part
//   conj_4 = x bba    first row of the middle part
//   conj_2 = b a x b  first row of the bottom part
// Ranges are 1-based and inclusive.
struct MatrixPartition {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t top_first = 0, top_last = 0;
  std::size_t mid_first = 0, mid_last = 0;
  std::size_t bot_first = 0, bot_last = 0;
  Word top_boundary, mid_boundary, bot_boundary;
  Word top_bwt, mid_bwt, bot_bwt;
  // a x bb < x bba < b a x b < bb a x, the last being the final row.
  bool chain_holds = false;
  // Bottom part is exactly the rotations starting with b.
  bool bottom_is_b_block = false;

  bool matches_prediction() const {
    return chain_holds && bottom_is_b_block && rle(top_bwt) == predicted_rev_top(k) &&
           rle(mid_bwt) == predicted_rev_mid(k) && rle(bot_bwt) == predicted_rev_bot(k);
  }
};

inline MatrixPartition partition_rev_matrix(std::size_t k) {
  if (k < 2) throw contract_error("partition_rev_matrix needs k >= 2");
  const Word v_rev = reverse(fibonacci_plus(k, Parity::even));
  const std::size_t n = v_rev.size();
  const auto res = bwt_fast(v_rev);
  std::vector<std::size_t> rank_of(n + 1);
  for (std::size_t i = 0; i < n; ++i) rank_of[res.bw_array[i]] = i + 1;

  MatrixPartition p;
  p.k = k;
  p.n = n;
  p.top_boundary = conjugate(v_rev, 3);
  p.mid_boundary = conjugate(v_rev, 4);
  p.bot_boundary = conjugate(v_rev, 2);
  p.top_first = rank_of[3];
  p.mid_first = rank_of[4];
  p.bot_first = rank_of[2];
  p.top_last = p.mid_first - 1;
  p.mid_last = p.bot_first - 1;
  p.bot_last = n;
  p.chain_holds = p.top_first == 1 && p.top_first < p.mid_first && p.mid_first < p.bot_first &&
                  p.bot_first < rank_of[1] && rank_of[1] == n;
  p.bottom_is_b_block = (p.bot_first - 1) == v_rev.count('a');

  const auto& t = res.transformed.str();
  if (p.chain_holds) {
    p.top_bwt = Word(t.substr(p.top_first - 1, p.top_last - p.top_first + 1));
    p.mid_bwt = Word(t.substr(p.mid_first - 1, p.mid_last - p.mid_first + 1));
    p.bot_bwt = Word(t.substr(p.bot_first - 1, p.bot_last - p.bot_first + 1));
  }
  return p;
}

struct OccurrenceCounts {
  std::size_t even_count = 0;     // occurrences of a x_{2(k-i)} b in s_{2k}
  std::size_t odd_count = 0;      // occurrences of a x_{2(k-i)-1} b in s_{2k}
  std::uint64_t even_expected = 0;  // F_{2i}
  std::uint64_t odd_expected = 0;   // F_{2i+1}
  bool holds() const { return even_count == even_expected && odd_count == odd_expected; }
};

inline OccurrenceCounts occurrence_counts_lemma(std::size_t k, std::size_t i) {
  if (k < 2 || i + 2 > k) throw contract_error("occurrence lemma needs k >= 2 and 0 <= i <= k-2");
  const Word s = fibonacci_word(2 * k);
  const std::size_t m = 2 * (k - i);
  OccurrenceCounts c;
  c.even_count = circular_factor_occurrences(s, 'a' + palindromic_prefix(m) + 'b');
  c.odd_count = circular_factor_occurrences(s, 'a' + palindromic_prefix(m - 1) + 'b');
  c.even_expected = fibonacci_number(2 * i);
  c.odd_expected = fibonacci_number(2 * i + 1);
  return c;
}

// For a word s = x ab: every rotation conj_h(s), 2 <= h <= |s|, whose first
// letter a follows a b (s[h] = a, s[h-1] = b) sorts strictly below s = xab.
// h = 1 is excluded since conj_1(s) is xab itself.
inline bool xab_order_holds(const Word& s) {
  const std::size_t n = s.size();
  if (n < 2 || s[n - 2] != 'a' || s[n - 1] != 'b') return false;
  for (std::size_t h = 2; h <= n; ++h) {
    if (s.at(h) == 'a' && s.at(h - 1) == 'b' && !(conjugate(s, h) < s)) return false;
  }
  return true;
}

struct XabOrderReport {
  bool ordering_holds = false;
  std::size_t rank_xab = 0;  // expected F_{2k-2}
  std::size_t rank_xba = 0;  // expected F_{2k-2} + 1
  std::uint64_t expected_rank = 0;
  bool holds() const {
    return ordering_holds && rank_xab == expected_rank && rank_xba == expected_rank + 1;
  }
};

inline XabOrderReport xab_order_report(std::size_t k) {
  if (k < 2) throw contract_error("xab_order_report needs k >= 2");
  const Word s = fibonacci_word(2 * k);
  const Word x = palindromic_prefix(2 * k);
  const Word xba = x + Word("ba");
  const std::size_t n = s.size();
  XabOrderReport rep;
  rep.ordering_holds = xab_order_holds(s);
  rep.expected_rank = fibonacci_number(2 * k - 2);
  const auto res = bwt_fast(s);
  for (std::size_t rank = 1; rank <= n; ++rank) {
    const std::size_t idx = res.bw_array[rank - 1];
    if (idx == 1) rep.rank_xab = rank;
    if (conjugate(s, idx) == xba) rep.rank_xba = rank;
  }
  return rep;
}

inline bool check_xab_order(std::size_t k) { return xab_order_report(k).holds(); }

// Nonempty prefixes of x_{2k-1} b and of b a x_{2k-2}, by length then lexicographically.
inline std::vector<Word> predicted_left_special_fibplus_rev(std::size_t k) {
  if (k < 2) throw contract_error("left-special prediction needs k >= 2");
  const Word first = palindromic_prefix(2 * k - 1) + 'b';
  const Word second = Word("ba") + palindromic_prefix(2 * k - 2);
  std::vector<Word> out;
  for (const Word* w : {&first, &second}) {
    for (std::size_t len = 1; len <= w->size(); ++len) out.emplace_back(w->view().substr(0, len));
  }
  std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// rho of the Fibonacci-plus word of even order 2k against every
// standard-plus word of the same length (both parities, d_0 >= 1).
struct MaximalityReport {
  std::size_t length = 0;
  RhoValue fibplus_rho;
  RhoValue family_max;
  DirectiveSequence family_argmax;
  std::size_t family_size = 0;
  bool holds() const { return fibplus_rho >= family_max; }
};

inline MaximalityReport fibplus_maximality(std::size_t k) {
  MaximalityReport rep;
  const Word v = fibonacci_plus(k, Parity::even);
  rep.length = v.size();
  rep.fibplus_rho = rho(v);
  for_each_directive_of_length(rep.length - 1, 1, 4, [&](const DirectiveSequence& d) {
    const RhoValue value = rho(standard_plus(d));
    if (rep.family_size == 0 || value > rep.family_max) {
      rep.family_max = value;
      rep.family_argmax = d;
    }
    ++rep.family_size;
  });
  return rep;
}

struct DirectiveSampler {
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  std::uint64_t max_entry = 4;
  std::size_t min_order = 4;   // even
  std::size_t max_order = 16;  // even
  // Draws whose standard word is longer are redrawn.
  std::uint64_t max_length = std::uint64_t{1} << 18;
};

// Even orders uniform in [min_order, max_order], entries uniform in 1..max_entry.
inline std::vector<DirectiveSequence> sample_even_directives(const DirectiveSampler& cfg) {
  if (cfg.min_order < 4 || cfg.min_order % 2 || cfg.max_order % 2 || cfg.max_order < cfg.min_order) {
    throw contract_error("sampler orders must be even with 4 <= min_order <= max_order");
  }
  if (cfg.max_entry < 1) throw contract_error("sampler max_entry must be >= 1");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> half_order(cfg.min_order / 2, cfg.max_order / 2);
  std::uniform_int_distribution<std::uint64_t> entry(1, cfg.max_entry);
  std::vector<DirectiveSequence> out;
  out.reserve(cfg.trials);
  while (out.size() < cfg.trials) {
    const std::size_t order = 2 * half_order(rng);
    std::vector<std::uint64_t> d(order - 1);
    for (auto& e : d) e = entry(rng);
    DirectiveSequence seq(std::move(d));
    if (seq.word_length() <= cfg.max_length) out.push_back(std::move(seq));
  }
  return out;
}

struct ClosedFormCase {
  enum class Family { fibplus, stdplus };
  Family family = Family::fibplus;
  std::size_t k = 0;               // fibplus
  Parity parity = Parity::even;    // fibplus
  DirectiveSequence directive;     // stdplus
  std::string predicted_rle, predicted_rle_rev;  // fibplus only
  std::string computed_rle, computed_rle_rev;
  std::size_t predicted_r = 0, predicted_r_rev = 0;
  std::size_t computed_r = 0, computed_r_rev = 0;
  bool structure_ok = true;  // stdplus soft b-run check
  bool match = false;
};

struct VerificationReport {
  std::vector<ClosedFormCase> cases;
  std::size_t matches() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.match; }));
  }
  std::size_t mismatches() const { return cases.size() - matches(); }
  bool all_match() const { return mismatches() == 0; }
};

inline ClosedFormCase verify_fibplus_case(std::size_t k, Parity parity) {
  ClosedFormCase c;
  c.family = ClosedFormCase::Family::fibplus;
  c.k = k;
  c.parity = parity;
  const RleString fwd = predicted_bwt_fibplus(k, parity);
  const RleString rev = predicted_bwt_fibplus_rev(k, parity);
  c.predicted_rle = fwd.to_string();
  c.predicted_rle_rev = rev.to_string();
  c.predicted_r = fwd.run_count();
  c.predicted_r_rev = rev.run_count();
  const Word v = fibonacci_plus(k, parity);
  const RleString got = rle(bwt_fast(v).transformed);
  const RleString got_rev = rle(bwt_fast(reverse(v)).transformed);
  c.computed_rle = got.to_string();
  c.computed_rle_rev = got_rev.to_string();
  c.computed_r = got.run_count();
  c.computed_r_rev = got_rev.run_count();
  c.match = got == fwd && got_rev == rev;
  return c;
}

inline ClosedFormCase verify_stdplus_case(const DirectiveSequence& d) {
  ClosedFormCase c;
  c.family = ClosedFormCase::Family::stdplus;
  c.directive = d;
  c.predicted_r = predicted_r_stdplus(d);
  c.predicted_r_rev = predicted_r_stdplus_rev(d);
  const Word v = standard_plus(d);
  const Word t = bwt_fast(v).transformed;
  const Word t_rev = bwt_fast(reverse(v)).transformed;
  c.computed_rle = rle(t).to_string();
  c.computed_rle_rev = rle(t_rev).to_string();
  c.computed_r = count_runs(t);
  c.computed_r_rev = count_runs(t_rev);
  c.structure_ok = stdplus_rev_b_runs_contain_odd_directives(d, t_rev);
  c.match = c.computed_r == c.predicted_r && c.computed_r_rev == c.predicted_r_rev && c.structure_ok;
  return c;
}

// Fibonacci-plus cases for k = 2..k_max and each requested parity, then one
// case per directive. Case order is fixed by the inputs.
inline VerificationReport verify_closed_forms(std::size_t k_max, const std::vector<Parity>& parities,
                                              const std::vector<DirectiveSequence>& directives,
                                              std::size_t jobs = 1) {
  if (k_max < 2) throw contract_error("verify_closed_forms needs k_max >= 2");
  struct Job {
    std::size_t k;
    Parity parity;
    const DirectiveSequence* directive;
  };
  std::vector<Job> work;
  for (std::size_t k = 2; k <= k_max; ++k) {
    for (Parity p : parities) work.push_back({k, p, nullptr});
  }
  for (const auto& d : directives) work.push_back({0, Parity::even, &d});

  VerificationReport report;
  report.cases.resize(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t i) {
    const Job& j = work[i];
    report.cases[i] = j.directive ? verify_stdplus_case(*j.directive) : verify_fibplus_case(j.k, j.parity);
  });
  return report;
}

}  // namespace bwtruns
