#pragma once

// Burrows-Wheeler transform of circular words (sorted rotations, no
// sentinel), run counts r(w), runs-ratio rho(w), and inversion up to
// conjugacy.
//
// For a proper power u^k the rotations are a multiset; equal rotations are
// listed in ascending rotation index, which makes the BW-array well defined.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bwtruns/cyclic_sort.hpp"
#include "bwtruns/errors.hpp"
#include "bwtruns/word.hpp"

namespace bwtruns {

struct BwtResult {
  Word transformed;
  std::vector<std::size_t> bw_array;  // 1-based rotation indices in sorted order
};

// Exact reduced fraction num/den, always >= 1 when produced by rho().
class RhoValue {
 public:
  RhoValue() = default;
  RhoValue(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw contract_error("RhoValue with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  // max(x/y, y/x) for positive run counts.
  static RhoValue ratio(std::uint64_t x, std::uint64_t y) {
    if (x == 0 || y == 0) throw contract_error("run counts must be positive");
    return x >= y ? RhoValue(x, y) : RhoValue(y, x);
  }

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p/q", always with the denominator.
  std::string exact() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  // Rounded half-up to two decimals with trailing zeros dropped: 3/2 -> "1.5", 8/3 -> "2.67", 2 -> "2".
  std::string decimal() const {
    const std::uint64_t hundredths = (200 * num_ + den_) / (2 * den_);
    std::string out = std::to_string(hundredths / 100);
    const std::uint64_t frac = hundredths % 100;
    if (frac != 0) {
      out += '.';
      out += static_cast<char>('0' + frac / 10);
      if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
    }
    return out;
  }

  friend bool operator==(const RhoValue&, const RhoValue&) = default;
  friend std::strong_ordering operator<=>(const RhoValue& x, const RhoValue& y) {
    return (x.num_ * y.den_) <=> (y.num_ * x.den_);
  }

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

namespace detail {
inline BwtResult assemble_bwt(const Word& w, const std::vector<std::size_t>& order0) {
  const std::size_t n = w.size();
  std::string last(n, 'a');
  std::vector<std::size_t> bw(n);
  for (std::size_t i = 0; i < n; ++i) {
    bw[i] = order0[i] + 1;
    last[i] = w[(order0[i] + n - 1) % n];
  }
  return {Word(last), std::move(bw)};
}
}  // namespace detail

// Reference implementation: materialize all rotations and sort them.
inline BwtResult bwt_naive(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw contract_error("bwt requires a nonempty word");
  std::vector<std::pair<std::string, std::size_t>> rotations;
  rotations.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rotations.emplace_back(w.str().substr(i) + w.str().substr(0, i), i);
  std::sort(rotations.begin(), rotations.end());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = rotations[i].second;
  return detail::assemble_bwt(w, order);
}

// O(n log n) prefix doubling over cyclic shifts.
inline BwtResult bwt_fast(const Word& w) {
  if (w.empty()) throw contract_error("bwt requires a nonempty word");
  return detail::assemble_bwt(w, sort_rotations(w.view()).order);
}

inline BwtResult bwt(const Word& w) { return bwt_fast(w); }

inline std::size_t r(const Word& w) { return count_runs(bwt_fast(w).transformed); }

inline RhoValue rho(const Word& w) {
  if (w.empty()) throw contract_error("rho requires a nonempty word");
  return RhoValue::ratio(r(w), r(reverse(w)));
}

// Least word whose rotation BWT is `t` (the Lyndon rotation when primitive).
//
// Row i of the sorted matrix starts with F[i] = sorted(t)[i]. Matching the
// j-th occurrence of a letter in F with its j-th occurrence in t gives the
// successor map psi: row i is followed (one position later in the word) by
// row psi(i). Each cycle of psi spells a primitive necklace; t is an image
// of a single word iff all cycles spell the same necklace u, and then the
// word is u^(number of cycles).
inline Word bwt_invert(const Word& t) {
  const std::size_t n = t.size();
  if (n == 0) throw contract_error("bwt_invert requires a nonempty word");
  const std::size_t count_a = t.count('a');
  std::vector<std::size_t> psi(n);
  {
    std::size_t next_a = 0, next_b = count_a;
    for (std::size_t j = 0; j < n; ++j) {
      if (t[j] == 'a') {
        psi[next_a++] = j;
      } else {
        psi[next_b++] = j;
      }
    }
  }
  const auto first_letter = [&](std::size_t row) { return row < count_a ? 'a' : 'b'; };

  std::vector<bool> seen(n, false);
  std::vector<std::string> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::string spelled;
    for (std::size_t row = start; !seen[row]; row = psi[row]) {
      seen[row] = true;
      spelled.push_back(first_letter(row));
    }
    cycles.push_back(std::move(spelled));
  }

  const Word root = lyndon_rotation(Word(cycles.front())).word;
  for (const auto& c : cycles) {
    const Word cw(c);
    if (cw.size() != root.size() || lyndon_rotation(cw).word != root) {
      throw invalid_image_error("'" + t.str() + "' is not the rotation BWT of a single word");
    }
  }
  Word result = repeat(root, cycles.size());
  if (bwt_fast(result).transformed != t) {
    throw invalid_image_error("'" + t.str() + "' is not the rotation BWT of a single word");
  }
  return result;
}

struct MatrixRow {
  std::size_t rank = 0;            // 1-based row in sorted order
  std::size_t rotation_index = 0;  // 1-based i with row = conj_i(w)
  Word rotation;
};

inline constexpr std::size_t kDefaultRenderLimit = 64;

inline std::vector<MatrixRow> bwt_matrix(const Word& w, std::size_t render_limit = kDefaultRenderLimit) {
  if (w.empty()) throw contract_error("bwt_matrix requires a nonempty word");
  if (w.size() > render_limit) {
    throw size_error("word of length " + std::to_string(w.size()) + " exceeds the render limit " +
                     std::to_string(render_limit) + "; use bwt_fast for the transform itself");
  }
  const auto res = bwt_fast(w);
  std::vector<MatrixRow> rows;
  rows.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    rows.push_back({i + 1, res.bw_array[i], conjugate(w, res.bw_array[i])});
  }
  return rows;
}

}  // namespace bwtruns
