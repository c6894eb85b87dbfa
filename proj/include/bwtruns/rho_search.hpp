#pragma once

// Exhaustive computation of rho(n) = max { rho(w) : |w| = n }.
//
// The search walks necklaces (least rotations) with the recursive
// Fredricksen-Kessler-Maiorana scheme and keeps a necklace only when it is
// the least element of its orbit under rotation, reversal and the
// order-reversing letter map; rho is constant on such orbits. Words are
// packed into a 64-bit integer, most significant letter first, so that
// comparing two rotations of equal length is comparing two integers.
//
// The search space is cut into work units by fixing a prefix of the
// necklace; units are independent and their results are merged with a
// max-reduction, so reports do not depend on the number of workers.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bwtruns/bwt.hpp"
#include "bwtruns/errors.hpp"
#include "bwtruns/parallel.hpp"
#include "bwtruns/standard_words.hpp"
#include "bwtruns/word.hpp"

namespace bwtruns {

inline constexpr std::size_t kDefaultSearchCap = 30;

// Least element of the orbit of w under rotation, reversal and a <-> b.
inline Word canonical_representative(const Word& w) {
  if (w.empty()) throw contract_error("canonical_representative requires a nonempty word");
  const Word e = exchange(w);
  Word best = lyndon_rotation(w).word;
  for (const Word& g : {reverse(w), e, reverse(e)}) best = std::min(best, lyndon_rotation(g).word);
  return best;
}

// Packed words of fixed length n over an alphabet of size 2 or 3.
class PackedWords {
 public:
  PackedWords(std::size_t n, std::size_t alphabet) : n_(n), sigma_(alphabet) {
    if (alphabet != 2 && alphabet != 3) throw contract_error("alphabet size must be 2 or 3");
    bits_ = alphabet == 2 ? 1 : 2;
    total_ = n * bits_;
    if (n == 0 || total_ > 64) {
      throw size_error("packed search supports 1 <= n <= " + std::to_string(64 / bits_) + " for this alphabet");
    }
    mask_ = total_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total_) - 1;
    letter_mask_ = (std::uint64_t{1} << bits_) - 1;
    // Only the order-reversing letter map preserves run counts: it reverses
    // the sorted rotation list. Other permutations of three letters reorder it.
    if (alphabet == 2) {
      perms_ = {{{1, 0, 0}}};
    } else {
      perms_ = {{{2, 1, 0}}};
    }
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t alphabet() const noexcept { return sigma_; }

  std::uint64_t rotate(std::uint64_t x) const noexcept {
    if (n_ == 1) return x;
    return ((x << bits_) | (x >> (total_ - bits_))) & mask_;
  }

  std::uint64_t least_rotation(std::uint64_t x) const noexcept {
    std::uint64_t best = x;
    for (std::size_t i = 1; i < n_; ++i) {
      x = rotate(x);
      best = std::min(best, x);
    }
    return best;
  }

  std::uint64_t reversed(std::uint64_t x) const noexcept {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      y = (y << bits_) | (x & letter_mask_);
      x >>= bits_;
    }
    return y;
  }

  std::uint64_t permuted(std::uint64_t x, const std::array<std::uint8_t, 3>& perm) const noexcept {
    if (sigma_ == 2) return x ^ mask_;
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t shift = i * bits_;
      y |= std::uint64_t{perm[(x >> shift) & letter_mask_]} << shift;
    }
    return y;
  }

  // Runs in the last column of the sorted rotation matrix.
  std::size_t bwt_runs(std::uint64_t x) const {
    std::array<std::uint64_t, 64> rot{};
    rot[0] = x;
    for (std::size_t i = 1; i < n_; ++i) rot[i] = rotate(rot[i - 1]);
    std::sort(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(n_));
    std::size_t runs = 1;
    for (std::size_t i = 1; i < n_; ++i) runs += ((rot[i] ^ rot[i - 1]) & letter_mask_) != 0;
    return runs;
  }

  // x must be a necklace. True when no other orbit element sorts below it.
  bool is_orbit_minimum(std::uint64_t x) const {
    const std::uint64_t rx = reversed(x);
    if (least_rotation(rx) < x) return false;
    for (const auto& p : perms_) {
      const std::uint64_t px = permuted(x, p);
      if (least_rotation(px) < x) return false;
      if (least_rotation(permuted(rx, p)) < x) return false;
    }
    return true;
  }

  std::string unpack(std::uint64_t x) const {
    std::string s(n_, 'a');
    for (std::size_t i = n_; i-- > 0;) {
      s[i] = static_cast<char>('a' + (x & letter_mask_));
      x >>= bits_;
    }
    return s;
  }

  std::uint64_t pack(std::string_view s) const {
    if (s.size() != n_) throw contract_error("packed word has the wrong length");
    std::uint64_t x = 0;
    for (char c : s) {
      const auto d = static_cast<std::uint64_t>(c - 'a');
      if (c < 'a' || d >= sigma_) throw contract_error("letter outside the alphabet");
      x = (x << bits_) | d;
    }
    return x;
  }

  std::size_t bits_per_letter() const noexcept { return bits_; }

 private:
  std::size_t n_ = 0, sigma_ = 2, bits_ = 1, total_ = 0;
  std::uint64_t mask_ = 0, letter_mask_ = 1;
  std::vector<std::array<std::uint8_t, 3>> perms_;
};

struct SearchOptions {
  std::size_t jobs = 1;
  std::size_t alphabet = 2;      // 3 is experimental
  std::size_t cap = kDefaultSearchCap;
  bool force = false;            // allow n above cap
  std::size_t witness_limit = 32;  // smallest witnesses kept in the report
};

struct RhoReport {
  std::size_t n = 0;
  std::size_t alphabet = 2;
  RhoValue rho;
  std::vector<std::string> witnesses;  // lexicographically smallest canonical witnesses
  std::uint64_t witness_count = 0;     // canonical words attaining rho
  std::uint64_t necklaces = 0;         // necklaces enumerated
  std::uint64_t words_scanned = 0;     // orbit representatives evaluated
  double seconds = 0.0;
};

namespace detail {

struct SearchUnit {
  std::vector<std::uint8_t> prefix;  // a[1..depth]
  std::size_t period = 1;
};

struct UnitResult {
  std::uint64_t num = 0, den = 1;  // best ratio found, 0/1 when nothing evaluated
  std::vector<std::uint64_t> witnesses;
  std::uint64_t witness_count = 0;
  std::uint64_t necklaces = 0;
  std::uint64_t reps = 0;
};

class NecklaceSearch {
 public:
  NecklaceSearch(const PackedWords& pw, std::size_t witness_limit)
      : pw_(pw), n_(pw.length()), k_(pw.alphabet()), limit_(witness_limit), a_(n_ + 1, 0) {}

  // Prenecklace prefixes of length `depth` with their current period.
  std::vector<SearchUnit> units(std::size_t depth) {
    std::vector<SearchUnit> out;
    collect(1, 1, depth, out);
    return out;
  }

  UnitResult run(const SearchUnit& unit) {
    result_ = UnitResult{};
    std::fill(a_.begin(), a_.end(), 0);
    for (std::size_t i = 0; i < unit.prefix.size(); ++i) a_[i + 1] = unit.prefix[i];
    generate(unit.prefix.size() + 1, unit.period);
    return std::move(result_);
  }

 private:
  void collect(std::size_t t, std::size_t p, std::size_t depth, std::vector<SearchUnit>& out) {
    if (t > depth) {
      out.push_back({std::vector<std::uint8_t>(a_.begin() + 1, a_.begin() + static_cast<std::ptrdiff_t>(depth) + 1), p});
      return;
    }
    a_[t] = a_[t - p];
    collect(t + 1, p, depth, out);
    for (std::size_t j = a_[t - p] + 1u; j < k_; ++j) {
      a_[t] = static_cast<std::uint8_t>(j);
      collect(t + 1, t, depth, out);
    }
  }

  void generate(std::size_t t, std::size_t p) {
    if (t > n_) {
      if (n_ % p == 0) visit();
      return;
    }
    a_[t] = a_[t - p];
    generate(t + 1, p);
    for (std::size_t j = a_[t - p] + 1u; j < k_; ++j) {
      a_[t] = static_cast<std::uint8_t>(j);
      generate(t + 1, t);
    }
  }

  void visit() {
    ++result_.necklaces;
    std::uint64_t x = 0;
    for (std::size_t i = 1; i <= n_; ++i) x = (x << pw_.bits_per_letter()) | a_[i];
    if (!pw_.is_orbit_minimum(x)) return;
    ++result_.reps;
    const std::uint64_t r_fwd = pw_.bwt_runs(x);
    const std::uint64_t r_rev = pw_.bwt_runs(pw_.reversed(x));
    const std::uint64_t num = std::max(r_fwd, r_rev), den = std::min(r_fwd, r_rev);
    const std::uint64_t lhs = num * result_.den, rhs = result_.num * den;
    if (lhs > rhs) {
      result_.num = num;
      result_.den = den;
      result_.witnesses.clear();
      result_.witness_count = 0;
    }
    if (lhs >= rhs) {
      ++result_.witness_count;
      // Necklaces arrive in increasing order, so the first ones are the smallest.
      if (result_.witnesses.size() < limit_) result_.witnesses.push_back(x);
    }
  }

  const PackedWords& pw_;
  std::size_t n_, k_, limit_;
  std::vector<std::uint8_t> a_;  // a_[0] = 0 sentinel, word in a_[1..n]
  UnitResult result_;
};

}  // namespace detail

// Rough single-core wall time, used only for the warning printed above n = 26.
inline double estimate_search_seconds(std::size_t n, std::size_t jobs, std::size_t alphabet = 2) {
  const double words = std::pow(static_cast<double>(alphabet), static_cast<double>(n));
  const double per_necklace = 5e-10 * static_cast<double>(n) * static_cast<double>(n);
  return words / static_cast<double>(n) * per_necklace / static_cast<double>(std::max<std::size_t>(1, jobs));
}

inline RhoReport rho_max(std::size_t n, const SearchOptions& opt = {}) {
  if (n < 1) throw contract_error("rho_max needs n >= 1");
  if (n > opt.cap && !opt.force) {
    throw size_error("n = " + std::to_string(n) + " exceeds the search cap " + std::to_string(opt.cap) +
                     " (use force to override)");
  }
  const auto started = std::chrono::steady_clock::now();
  const PackedWords pw(n, opt.alphabet);

  const std::size_t depth = std::min<std::size_t>(n, 10);
  detail::NecklaceSearch splitter(pw, opt.witness_limit);
  const auto units = splitter.units(depth);
  std::vector<detail::UnitResult> results(units.size());
  parallel_for(units.size(), opt.jobs, [&](std::size_t i) {
    detail::NecklaceSearch search(pw, opt.witness_limit);
    results[i] = search.run(units[i]);
  });

  RhoReport rep;
  rep.n = n;
  rep.alphabet = opt.alphabet;
  std::uint64_t num = 0, den = 1;
  for (const auto& u : results) {
    rep.necklaces += u.necklaces;
    rep.words_scanned += u.reps;
    if (u.num * den > num * u.den) {
      num = u.num;
      den = u.den;
    }
  }
  std::vector<std::uint64_t> witnesses;
  for (const auto& u : results) {
    if (u.num * den == num * u.den && u.witness_count > 0) {
      rep.witness_count += u.witness_count;
      witnesses.insert(witnesses.end(), u.witnesses.begin(), u.witnesses.end());
    }
  }
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  if (witnesses.size() > opt.witness_limit) witnesses.resize(opt.witness_limit);
  for (auto x : witnesses) rep.witnesses.push_back(pw.unpack(x));
  rep.rho = RhoValue(num, den);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

inline std::vector<RhoReport> rho_table(std::size_t n_from, std::size_t n_to, const SearchOptions& opt = {}) {
  if (n_from < 1 || n_from > n_to) throw contract_error("rho_table needs 1 <= from <= to");
  std::vector<RhoReport> out;
  for (std::size_t n = n_from; n <= n_to; ++n) out.push_back(rho_max(n, opt));
  return out;
}

struct StdPlusMax {
  std::size_t n = 0;
  RhoValue rho;
  DirectiveSequence witness;  // first directive (enumeration order) attaining rho
  std::size_t family_size = 0;
};

enum class OrderParity { even, odd, both };

// Maximum rho over all standard-plus words of length n (d_0 >= 1, order >= 4),
// computed with bwt_fast. Even orders by default; including odd orders
// changes n = 13 from 1 to 3/2. Empty when no such word exists.
inline std::optional<StdPlusMax> stdplus_rho_max(std::size_t n, OrderParity parity = OrderParity::even) {
  if (n < 6) throw contract_error("standard-plus words have length >= 6");
  StdPlusMax best;
  best.n = n;
  for_each_directive_of_length(n - 1, 1, 4, [&](const DirectiveSequence& d) {
    const bool even = d.order() % 2 == 0;
    if ((parity == OrderParity::even && !even) || (parity == OrderParity::odd && even)) return;
    const RhoValue value = rho(standard_plus(d));
    if (best.family_size == 0 || value > best.rho) {
      best.rho = value;
      best.witness = d;
    }
    ++best.family_size;
  });
  if (best.family_size == 0) return std::nullopt;
  return best;
}

struct CatastropheReport {
  std::size_t k = 0;
  Word base_word;      // reverse(s_{2k})
  std::size_t r_base = 0;
  Word extended;       // b . reverse(s_{2k}) = reverse(s_{2k} b)
  std::size_t r_extended = 0;
  RhoValue ratio;      // r_extended / r_base
};

inline CatastropheReport one_bit_catastrophe(std::size_t k) {
  if (k < 2) throw contract_error("one_bit_catastrophe needs k >= 2");
  CatastropheReport rep;
  rep.k = k;
  rep.base_word = reverse(fibonacci_word(2 * k));
  rep.extended = 'b' + rep.base_word;
  rep.r_base = r(rep.base_word);
  rep.r_extended = r(rep.extended);
  rep.ratio = RhoValue(rep.r_extended, rep.r_base);
  return rep;
}

}  // namespace bwtruns
