#include <gtest/gtest.h>

#include <random>

#include "bwtruns/standard_words.hpp"
#include "bwtruns/word.hpp"
#include "oracles.hpp"

using namespace bwtruns;

TEST(Word, RejectsForeignLetters) {
  EXPECT_THROW(Word("abc"), contract_error);
  EXPECT_NO_THROW(Word(""));
  EXPECT_EQ(Word("abba").count('a'), 2u);
}

TEST(Word, Reverse) {
  EXPECT_EQ(reverse(Word("abaabb")), Word("bbaaba"));
  EXPECT_EQ(reverse(Word("")), Word(""));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Word w(oracle::random_word(rng, t % 40));
    EXPECT_EQ(reverse(reverse(w)), w);
  }
}

TEST(Word, Conjugate) {
  EXPECT_EQ(conjugate(Word("abaab"), 3), Word("aabab"));
  EXPECT_EQ(conjugate(Word("abaab"), 1), Word("abaab"));
  EXPECT_THROW(conjugate(Word("abaab"), 0), contract_error);
  EXPECT_THROW(conjugate(Word("abaab"), 6), contract_error);
}

TEST(Word, ConjugationComposes) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 17;
    const Word w(oracle::random_word(rng, n));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        EXPECT_EQ(conjugate(conjugate(w, i), j), conjugate(w, (i + j - 2) % n + 1));
      }
    }
  }
}

TEST(Word, Lcp) {
  EXPECT_EQ(lcp(Word("abaab"), Word("abba")), Word("ab"));
  EXPECT_EQ(lcp(Word("abaab"), Word("abaab")), Word("abaab"));
  EXPECT_EQ(lcp(Word("a"), Word("b")), Word(""));
}

TEST(Word, Primitive) {
  EXPECT_TRUE(is_primitive(Word("abaab")));
  EXPECT_FALSE(is_primitive(Word("abab")));
  EXPECT_FALSE(is_primitive(Word("aaa")));
  EXPECT_TRUE(is_primitive(Word("a")));
  EXPECT_THROW(is_primitive(Word("")), contract_error);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : oracle::all_words(n)) EXPECT_EQ(is_primitive(Word(s)), oracle::primitive(s)) << s;
  }
}

TEST(Word, StandardWordsArePrimitive) {
  // Fibonacci and two other directive families, orders 2..12.
  for (std::size_t order = 2; order <= 12; ++order) {
    for (std::uint64_t e : {1u, 2u, 3u}) {
      const DirectiveSequence d(std::vector<std::uint64_t>(order - 1, e));
      if (d.word_length() > 3000) continue;
      const Word s = standard_word(d);
      const auto rs = oracle::rotations(s.str());
      EXPECT_EQ(std::set<std::string>(rs.begin(), rs.end()).size(), s.size());
      EXPECT_TRUE(is_primitive(s));
    }
  }
}

TEST(Word, Lyndon) {
  EXPECT_TRUE(is_lyndon(Word("aab")));
  EXPECT_FALSE(is_lyndon(Word("aba")));
  EXPECT_FALSE(is_lyndon(Word("aa")));
  EXPECT_THROW(is_lyndon(Word("")), contract_error);
  for (std::size_t i = 2; i <= 10; ++i) EXPECT_TRUE(is_lyndon('a' + palindromic_prefix(i) + 'b')) << i;
}

TEST(Word, LyndonRotation) {
  const auto lr = lyndon_rotation(Word("bbaaba"));
  EXPECT_EQ(lr.word, Word("aababb"));
  EXPECT_EQ(lr.index, 3u);
  EXPECT_EQ(lyndon_rotation(Word("aaa")).index, 1u);
  EXPECT_EQ(lyndon_rotation(Word("aaa")).word, Word("aaa"));
  EXPECT_EQ(lyndon_rotation(Word("baba")).index, 2u);

  // Against brute force on every word up to length 12, smallest index included.
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : oracle::all_words(n)) {
      const auto rs = oracle::rotations(s);
      const auto it = std::min_element(rs.begin(), rs.end());
      const auto got = lyndon_rotation(Word(s));
      ASSERT_EQ(got.word.str(), *it) << s;
      ASSERT_EQ(got.index, static_cast<std::size_t>(it - rs.begin()) + 1) << s;
    }
  }
}

TEST(Word, CircularFactorOccurrences) {
  EXPECT_EQ(circular_factor_occurrences(Word("abaab"), Word("ab")), 2u);
  EXPECT_EQ(circular_factor_occurrences(Word("abaab"), Word("abaab")), 1u);
  EXPECT_EQ(circular_factor_occurrences(Word("abab"), Word("ab")), 2u);
  EXPECT_EQ(circular_factor_occurrences(Word("aba"), Word("aa")), 1u);  // wraps around
  EXPECT_THROW(circular_factor_occurrences(Word("ab"), Word("aba")), contract_error);
  EXPECT_THROW(circular_factor_occurrences(Word("ab"), Word("")), contract_error);
  const Word s8 = fibonacci_word(8);
  EXPECT_EQ(circular_factor_occurrences(s8, 'a' + palindromic_prefix(6) + 'b'), 2u);
}

TEST(Word, LeftSpecialSmall) {
  const auto ls = left_special_circular_factors(Word("aabab"), 2);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], Word("a"));
  EXPECT_EQ(ls[1], Word("ab"));
  // No nonempty left-special factor of length 1 in "ab": a is preceded only by b.
  EXPECT_TRUE(left_special_circular_factors(Word("ab"), 1).empty());
  EXPECT_THROW(left_special_circular_factors(Word("ab"), 3), contract_error);
}

TEST(Word, LeftSpecialMatchesBruteForceExhaustively) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : oracle::all_words(n)) {
      const auto got = left_special_circular_factors(Word(s), n);
      const auto want = oracle::left_special(s, n);
      ASSERT_EQ(got.size(), want.size()) << s;
      for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(got[i].str(), want[i]) << s;
    }
  }
}

TEST(Word, Balanced) {
  EXPECT_FALSE(is_balanced_circular(Word("aabb")));
  EXPECT_TRUE(is_balanced_circular(Word("ab")));
  for (std::size_t i = 2; i <= 10; ++i) EXPECT_TRUE(is_balanced_circular(fibonacci_word(i))) << i;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& s : oracle::all_words(n)) ASSERT_EQ(is_balanced_circular(Word(s)), oracle::balanced(s)) << s;
  }
}

TEST(Word, RunsAndRle) {
  EXPECT_EQ(count_runs(Word("bbaaba")), 4u);
  EXPECT_EQ(count_runs(Word("")), 0u);
  EXPECT_EQ(rle(Word("bbaaba")).to_string(), "b^2 a^2 b a");
  const auto r = RleString::parse("b^13 a^20 b a");
  EXPECT_EQ(r.length(), 35u);
  EXPECT_EQ(r.run_count(), 4u);
  EXPECT_EQ(rle_expand(r).str(), std::string(13, 'b') + std::string(20, 'a') + "ba");
  EXPECT_THROW(RleString::parse("b^0"), contract_error);
  EXPECT_THROW(RleString::parse("b^"), contract_error);
  EXPECT_THROW(RleString::parse("c^2"), contract_error);
  EXPECT_THROW(RleString::parse("bb"), contract_error);
  // Appending merges equal neighbours.
  EXPECT_EQ((RleString{{'b', 1}, {'b', 2}, {'a', 1}}).to_string(), "b^3 a");
}

TEST(Word, RunCountSymmetries) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const Word w(oracle::random_word(rng, t % 64));
    EXPECT_EQ(count_runs(reverse(w)), count_runs(w));
    EXPECT_EQ(count_runs(exchange(w)), count_runs(w));
    EXPECT_EQ(rle_expand(rle(w)), w);
    EXPECT_EQ(RleString::parse(rle(w).to_string()), rle(w));
  }
}
