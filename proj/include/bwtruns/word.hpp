#pragma once

// Binary words over {a, b} with a < b, and the word algebra used throughout:
// reversal, letter exchange, rotations, primitivity, Lyndon rotations,
// circular factors, balance, and run-length encoding.
//
// Positions are 1-based in every public operation that takes or returns an
// index (rotation i is w[i..n] w[1..i-1]). Storage is a plain std::string.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwtruns/cyclic_sort.hpp"
#include "bwtruns/errors.hpp"

namespace bwtruns {

class Word {
 public:
  Word() = default;
  explicit Word(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
      if (c != 'a' && c != 'b') {
        throw contract_error("word contains a letter outside {a,b}: '" + std::string(1, c) + "'");
      }
    }
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const noexcept { return letters_[i]; }
  // 1-based access, w[0] := w[n] as in the BW-array identity.
  char at(std::size_t i) const {
    if (empty()) throw contract_error("at() on the empty word");
    if (i > size()) throw contract_error("position out of range");
    return i == 0 ? letters_.back() : letters_[i - 1];
  }

  const std::string& str() const noexcept { return letters_; }
  std::string_view view() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::size_t count(char letter) const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
  }

  Word& operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  Word& operator+=(char letter) { return *this += Word(std::string_view(&letter, 1)); }

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Word lhs, char rhs) { return lhs += rhs; }
  friend Word operator+(char lhs, const Word& rhs) { return Word(std::string_view(&lhs, 1)) + rhs; }

  // Lexicographic order; a proper prefix is smaller.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.letters_; }

 private:
  std::string letters_;
};

inline Word repeat(const Word& u, std::size_t times) {
  Word out;
  for (std::size_t i = 0; i < times; ++i) out += u;
  return out;
}

inline Word reverse(const Word& w) { return Word(std::string(w.str().rbegin(), w.str().rend())); }

// Swaps a <-> b.
inline Word exchange(const Word& w) {
  std::string s = w.str();
  for (char& c : s) c = (c == 'a') ? 'b' : 'a';
  return Word(s);
}

inline bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.end(), w.str().rbegin()); }

// i-th rotation w[i..n] w[1..i-1], 1 <= i <= n.
inline Word conjugate(const Word& w, std::size_t i) {
  if (i < 1 || i > w.size()) {
    throw contract_error("rotation index " + std::to_string(i) + " outside 1.." + std::to_string(w.size()));
  }
  const auto& s = w.str();
  return Word(s.substr(i - 1) + s.substr(0, i - 1));
}

inline Word lcp(const Word& v, const Word& w) {
  const auto mm = std::mismatch(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(v.size(), w.size())), w.begin());
  return Word(std::string_view(v.str()).substr(0, static_cast<std::size_t>(mm.first - v.begin())));
}

// Smallest cyclic period of w: the least p dividing n with w = (w[1..p])^(n/p).
inline std::size_t primitive_root_length(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw contract_error("primitive root of the empty word");
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  const std::size_t period = n - pi[n - 1];
  return (n % period == 0) ? period : n;
}

inline bool is_primitive(const Word& w) {
  if (w.empty()) throw contract_error("is_primitive requires a nonempty word");
  return primitive_root_length(w) == w.size();
}

struct LyndonRotation {
  Word word;
  std::size_t index = 1;  // smallest rotation index attaining the minimum
};

// Least rotation by the two-pointer scan over the doubled word.
inline LyndonRotation lyndon_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw contract_error("lyndon_rotation requires a nonempty word");
  const auto& s = w.str();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const char x = s[(i + k) % n], y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  // With equal rotations (k == n) both candidates are minimal; the smaller
  // start is the first occurrence since each restart skips only larger ones.
  const std::size_t start = std::min(i, j);
  return {conjugate(w, start + 1), start + 1};
}

inline bool is_lyndon(const Word& w) {
  if (w.empty()) throw contract_error("is_lyndon requires a nonempty word");
  return is_primitive(w) && lyndon_rotation(w).index == 1;
}

// Number of rotation indices i with u a prefix of conj_i(w).
inline std::size_t circular_factor_occurrences(const Word& w, const Word& u) {
  if (u.empty() || u.size() > w.size()) {
    throw contract_error("circular_factor_occurrences requires 1 <= |u| <= |w|");
  }
  const std::string doubled = w.str() + w.str().substr(0, u.size() - 1);
  std::size_t hits = 0;
  for (std::size_t pos = doubled.find(u.str()); pos != std::string::npos && pos < w.size();
       pos = doubled.find(u.str(), pos + 1)) {
    ++hits;
  }
  return hits;
}

// Circular factors u (1 <= |u| <= max_len) such that both a.u and b.u are
// circular factors, ordered by length then lexicographically. The empty
// word is never reported.
//
// Occurrences of u are the rotations having u as prefix; they form a block
// of consecutive sorted rotations whose adjacent lcps are >= |u|. u is
// left-special iff the preceding letters (the BWT column) over that block
// contain both letters.
inline std::vector<Word> left_special_circular_factors(const Word& w, std::size_t max_len) {
  const std::size_t n = w.size();
  if (max_len > n) throw contract_error("max_len exceeds the word length");
  std::vector<Word> out;
  if (n == 0) return out;
  const auto ro = sort_rotations(w.view());
  const auto lcp_adj = adjacent_rotation_lcp(w.view(), ro);
  const auto preceding = [&](std::size_t rank) { return w[(ro.order[rank] + n - 1) % n]; };

  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t block = 0;
    for (std::size_t r = 1; r <= n; ++r) {
      if (r < n && lcp_adj[r] >= len) continue;
      bool saw_a = false, saw_b = false;
      for (std::size_t q = block; q < r; ++q) {
        (preceding(q) == 'a' ? saw_a : saw_b) = true;
      }
      if (saw_a && saw_b) {
        const std::size_t start = ro.order[block];
        std::string u;
        u.reserve(len);
        for (std::size_t t = 0; t < len; ++t) u.push_back(w[(start + t) % n]);
        out.emplace_back(u);
      }
      block = r;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

// Every pair of equal-length circular factors differs by at most one in the
// count of each letter. For a binary word it suffices to compare the extreme
// a-counts over all windows of each length.
inline bool is_balanced_circular(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw contract_error("is_balanced_circular requires a nonempty word");
  std::vector<std::size_t> prefix(2 * n + 1, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + (w[i % n] == 'a' ? 1 : 0);
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t lo = n, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = prefix[i + len] - prefix[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

// Maximal equal-letter blocks, counted linearly (no wrap-around).
inline std::size_t count_runs(std::string_view s) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0 || s[i] != s[i - 1]) ++runs;
  }
  return runs;
}
inline std::size_t count_runs(const Word& w) { return count_runs(w.view()); }

struct Run {
  char letter = 'a';
  std::size_t exponent = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

// Run-length encoded word. Appending merges with the last run when the
// letter repeats, so adjacent runs always carry distinct letters.
class RleString {
 public:
  RleString() = default;
  RleString(std::initializer_list<Run> runs) {
    for (const auto& r : runs) append(r.letter, r.exponent);
  }

  RleString& append(char letter, std::size_t exponent) {
    if (letter != 'a' && letter != 'b') throw contract_error("RLE letter outside {a,b}");
    if (exponent == 0) return *this;
    if (!runs_.empty() && runs_.back().letter == letter) {
      runs_.back().exponent += exponent;
    } else {
      runs_.push_back({letter, exponent});
    }
    return *this;
  }
  RleString& append(const RleString& other) {
    for (const auto& r : other.runs_) append(r.letter, r.exponent);
    return *this;
  }

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::size_t run_count() const noexcept { return runs_.size(); }
  std::size_t length() const noexcept {
    return std::accumulate(runs_.begin(), runs_.end(), std::size_t{0},
                           [](std::size_t acc, const Run& r) { return acc + r.exponent; });
  }
  std::size_t count(char letter) const noexcept {
    std::size_t c = 0;
    for (const auto& r : runs_) {
      if (r.letter == letter) c += r.exponent;
    }
    return c;
  }

  Word expand() const {
    std::string s;
    s.reserve(length());
    for (const auto& r : runs_) s.append(r.exponent, r.letter);
    return Word(s);
  }

  // Tokens `letter^exp` separated by single spaces; exponent omitted when 1.
  std::string to_string() const {
    std::string out;
    for (const auto& r : runs_) {
      if (!out.empty()) out += ' ';
      out += r.letter;
      if (r.exponent != 1) out += '^' + std::to_string(r.exponent);
    }
    return out;
  }

  static RleString parse(std::string_view text) {
    RleString out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ') {
        ++i;
        continue;
      }
      const char letter = text[i++];
      std::size_t exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const std::size_t digits_begin = i;
        exponent = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') exponent = exponent * 10 + static_cast<std::size_t>(text[i++] - '0');
        if (i == digits_begin || exponent == 0) throw contract_error("malformed RLE exponent");
      }
      if (i < text.size() && text[i] != ' ') throw contract_error("malformed RLE token");
      out.append(letter, exponent);
    }
    return out;
  }

  friend bool operator==(const RleString&, const RleString&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RleString& r) { return os << r.to_string(); }

 private:
  std::vector<Run> runs_;
};

inline RleString rle(const Word& w) {
  RleString out;
  for (char c : w) out.append(c, 1);
  return out;
}

inline Word rle_expand(const RleString& r) { return r.expand(); }

}  // namespace bwtruns
