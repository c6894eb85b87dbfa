#pragma once

// Sorting the cyclic rotations of a string by prefix doubling.
//
// Each round sorts rotations by their first 2^h characters using the ranks
// from the previous round as a pair key (rank[i], rank[i + 2^(h-1)]), with
// indices taken modulo n. No sentinel is appended: the comparison is the
// plain lexicographic order of the equal-length rotations. Rotations that
// stay tied after 2^h >= n are identical strings (the input is a proper
// power); they are emitted in ascending start position.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace bwtruns {

struct RotationOrder {
  std::vector<std::size_t> order;  // 0-based start positions, sorted
  std::vector<std::size_t> rank;   // rank[start] = class of rotation; equal rotations share a class
  std::size_t classes = 0;         // number of distinct rotations
};

inline RotationOrder sort_rotations(std::string_view text) {
  const std::size_t n = text.size();
  RotationOrder out;
  if (n == 0) return out;

  constexpr std::size_t kAlphabet = 256;
  std::vector<std::size_t> p(n), c(n), pn(n), cn(n);
  std::vector<std::size_t> cnt(std::max(kAlphabet, n), 0);

  for (std::size_t i = 0; i < n; ++i) ++cnt[static_cast<unsigned char>(text[i])];
  for (std::size_t i = 1; i < kAlphabet; ++i) cnt[i] += cnt[i - 1];
  for (std::size_t i = n; i-- > 0;) p[--cnt[static_cast<unsigned char>(text[i])]] = i;
  c[p[0]] = 0;
  std::size_t classes = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (text[p[i]] != text[p[i - 1]]) ++classes;
    c[p[i]] = classes - 1;
  }

  for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
    // Sorting by second half: shift the current order left by h.
    for (std::size_t i = 0; i < n; ++i) pn[i] = (p[i] + n - (h % n)) % n;
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    for (std::size_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[c[pn[i]]]] = pn[i];
    cn[p[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t a0 = c[p[i]], a1 = c[(p[i] + h) % n];
      const std::size_t b0 = c[p[i - 1]], b1 = c[(p[i - 1] + h) % n];
      if (a0 != b0 || a1 != b1) ++classes;
      cn[p[i]] = classes - 1;
    }
    c.swap(cn);
  }

  // Deterministic tie-break: one stable counting pass by class over ascending starts.
  std::fill(cnt.begin(), cnt.begin() + classes, 0);
  for (std::size_t i = 0; i < n; ++i) ++cnt[c[i]];
  std::size_t sum = 0;
  for (std::size_t k = 0; k < classes; ++k) {
    const std::size_t t = cnt[k];
    cnt[k] = sum;
    sum += t;
  }
  for (std::size_t i = 0; i < n; ++i) p[cnt[c[i]]++] = i;

  out.order = std::move(p);
  out.rank = std::move(c);
  out.classes = classes;
  return out;
}

// Longest common prefix (capped at n) of each adjacent pair of sorted rotations.
// lcp[0] = 0; lcp[i] = lcp(rotation order[i-1], rotation order[i]).
// Kasai's argument carries over to rotations: the lcp drops by at most one
// when both rotations advance by a single position.
inline std::vector<std::size_t> adjacent_rotation_lcp(std::string_view text, const RotationOrder& ro) {
  const std::size_t n = text.size();
  std::vector<std::size_t> lcp(n, 0);
  if (n == 0) return lcp;
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ro.order[i]] = i;
  std::size_t h = 0;
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t r = pos[start];
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t prev = ro.order[r - 1];
    while (h < n && text[(start + h) % n] == text[(prev + h) % n]) ++h;
    lcp[r] = h;
    // Equal rotations (h == n) are ordered by start position, which does not
    // survive the shift across the wrap point; restart the scan in that case.
    h = (h == n || h == 0) ? 0 : h - 1;
  }
  return lcp;
}

}  // namespace bwtruns
