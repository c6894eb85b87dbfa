#pragma once

// Standard words from directive sequences, Fibonacci words, the palindromic
// prefixes x_i, and the one-letter extensions (Fibonacci-plus and
// standard-plus words).
//
//   s_0 = b, s_1 = a, s_{i+1} = s_i^{d_{i-1}} s_{i-1}
//
// A directive (d_0, ..., d_{m-1}) of length m produces s_{m+1}; the order
// bookkeeping lives in DirectiveSequence::order().

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "bwtruns/errors.hpp"
#include "bwtruns/word.hpp"

namespace bwtruns {

// Generated words are refused beyond this many letters.
inline constexpr std::uint64_t kMaxGeneratedLength = std::uint64_t{1} << 26;

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

class DirectiveSequence {
 public:
  DirectiveSequence() = default;
  DirectiveSequence(std::initializer_list<std::uint64_t> d) : DirectiveSequence(std::vector<std::uint64_t>(d)) {}
  explicit DirectiveSequence(std::vector<std::uint64_t> d) : entries_(std::move(d)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i] == 0) throw contract_error("directive entry d_" + std::to_string(i) + " must be >= 1");
    }
  }

  // Comma-separated integers, e.g. "2,3,1,2,1".
  static DirectiveSequence parse(std::string_view text) {
    std::vector<std::uint64_t> d;
    std::size_t i = 0;
    while (i < text.size()) {
      std::uint64_t v = 0;
      const std::size_t begin = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
        if (v > kMaxGeneratedLength) throw contract_error("directive entry too large");
      }
      if (i == begin) throw contract_error("malformed directive sequence '" + std::string(text) + "'");
      d.push_back(v);
      if (i < text.size()) {
        if (text[i] != ',') throw contract_error("malformed directive sequence '" + std::string(text) + "'");
        if (++i == text.size()) throw contract_error("trailing comma in directive sequence");
      }
    }
    return DirectiveSequence(std::move(d));
  }

  const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t operator[](std::size_t i) const { return entries_.at(i); }

  // Order of the generated standard word.
  std::size_t order() const noexcept { return entries_.size() + 1; }

  // |s_order| via the length recurrence, saturating at uint64 max.
  std::uint64_t word_length() const noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t prev = 1, cur = 1;  // |s_0|, |s_1|
    for (std::uint64_t d : entries_) {
      std::uint64_t next = kMax;
      if (d == 0 || cur <= (kMax - prev) / d) next = d * cur + prev;
      prev = cur;
      cur = next;
      if (cur == kMax) return kMax;
    }
    return cur;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  friend bool operator==(const DirectiveSequence&, const DirectiveSequence&) = default;
  friend auto operator<=>(const DirectiveSequence&, const DirectiveSequence&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

// F_0 = F_1 = 1, F_{i+1} = F_i + F_{i-1}.
inline std::uint64_t fibonacci_number(std::size_t i) {
  std::uint64_t prev = 1, cur = 1;
  for (std::size_t k = 1; k < i; ++k) {
    if (cur > std::numeric_limits<std::uint64_t>::max() - prev) throw size_error("Fibonacci number overflows 64 bits");
    const std::uint64_t next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline Word standard_word(const DirectiveSequence& d) {
  if (d.word_length() > kMaxGeneratedLength) {
    throw size_error("standard word of order " + std::to_string(d.order()) + " exceeds " +
                     std::to_string(kMaxGeneratedLength) + " letters");
  }
  std::string prev = "b", cur = "a";
  for (std::uint64_t e : d.entries()) {
    std::string next;
    next.reserve(e * cur.size() + prev.size());
    for (std::uint64_t t = 0; t < e; ++t) next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Word(cur);
}

inline DirectiveSequence fibonacci_directive(std::size_t order) {
  if (order < 1) throw contract_error("Fibonacci directive needs order >= 1");
  return DirectiveSequence(std::vector<std::uint64_t>(order - 1, 1));
}

inline Word fibonacci_word(std::size_t i) {
  if (i == 0) return Word("b");
  return standard_word(fibonacci_directive(i));
}

// x_i: s_{2k} = x_{2k} ab and s_{2k+1} = x_{2k+1} ba. x_2 is empty.
inline Word palindromic_prefix(std::size_t i) {
  if (i < 2) throw contract_error("palindromic prefix x_i is defined for i >= 2");
  const Word s = fibonacci_word(i);
  return Word(s.view().substr(0, s.size() - 2));
}

// s_{2k} b (even) or s_{2k+1} a (odd), k >= 2.
inline Word fibonacci_plus(std::size_t k, Parity parity) {
  if (k < 2) throw contract_error("Fibonacci-plus words need k >= 2");
  return parity == Parity::even ? fibonacci_word(2 * k) + 'b' : fibonacci_word(2 * k + 1) + 'a';
}

// Appends b to an even-order standard word, a to an odd-order one.
inline Word standard_plus(const DirectiveSequence& d) {
  if (d.order() < 4) throw contract_error("standard-plus words need order >= 4 (directive length >= 3)");
  if (d[0] == 0) {
    throw contract_error("standard-plus words need d_0 >= 1; exchange a and b and use the directive without its leading 0");
  }
  return standard_word(d) + (d.order() % 2 == 0 ? 'b' : 'a');
}

// Calls visit(d) for every directive with d_0 >= min_d0, order >= min_order
// whose standard word has exactly `length` letters. Visiting order is
// lexicographic in the entries, shorter sequences first along each branch.
inline void for_each_directive_of_length(std::uint64_t length, std::uint64_t min_d0, std::size_t min_order,
                                         const std::function<void(const DirectiveSequence&)>& visit) {
  std::vector<std::uint64_t> entries;
  // prev, cur: lengths of s_{i-1}, s_i with i = entries.size() + 1.
  std::function<void(std::uint64_t, std::uint64_t)> extend = [&](std::uint64_t prev, std::uint64_t cur) {
    if (cur == length && entries.size() + 1 >= min_order) visit(DirectiveSequence(entries));
    const std::uint64_t lo = entries.empty() ? min_d0 : 1;
    for (std::uint64_t d = lo;; ++d) {
      const std::uint64_t next = d * cur + prev;
      if (next > length) break;
      // d_0 = 0 gives s_2 = s_0; it is the only step that does not grow.
      entries.push_back(d);
      extend(cur, next);
      entries.pop_back();
    }
  };
  extend(1, 1);
}

}  // namespace bwtruns
