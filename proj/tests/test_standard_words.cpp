#include <gtest/gtest.h>

#include "bwtruns/bwt.hpp"
#include "bwtruns/standard_words.hpp"
#include "oracles.hpp"

using namespace bwtruns;

TEST(Fibonacci, Numbers) {
  EXPECT_EQ(fibonacci_number(0), 1u);
  EXPECT_EQ(fibonacci_number(1), 1u);
  EXPECT_EQ(fibonacci_number(8), 34u);
  for (std::size_t i = 1; i <= 40; ++i) EXPECT_EQ(fibonacci_number(i + 1), fibonacci_number(i) + fibonacci_number(i - 1));
  EXPECT_THROW(fibonacci_number(200), size_error);
}

TEST(Fibonacci, Words) {
  EXPECT_EQ(fibonacci_word(0), Word("b"));
  EXPECT_EQ(fibonacci_word(1), Word("a"));
  EXPECT_EQ(fibonacci_word(5), Word("abaababa"));
  EXPECT_EQ(fibonacci_word(8), Word("abaababaabaababaababaabaababaabaab"));
  for (std::size_t i = 0; i <= 25; ++i) EXPECT_EQ(fibonacci_word(i).size(), fibonacci_number(i));
  for (std::size_t i = 2; i <= 25; ++i) {
    const Word s = fibonacci_word(i);
    EXPECT_EQ(s.count('a'), fibonacci_number(i - 1));
    EXPECT_EQ(s.count('b'), fibonacci_number(i - 2));
  }
  for (std::size_t i = 2; i <= 20; ++i) {
    EXPECT_EQ(standard_word(fibonacci_directive(i)), fibonacci_word(i));
    EXPECT_EQ(fibonacci_word(i).str().find("bb"), std::string::npos);
  }
}

TEST(Directive, ParseAndOrder) {
  const auto d = DirectiveSequence::parse("2,3,1,2,1");
  EXPECT_EQ(d.size(), 5u);
  EXPECT_EQ(d.order(), 6u);
  EXPECT_EQ(d.to_string(), "2,3,1,2,1");
  EXPECT_EQ(d.word_length(), 49u);
  EXPECT_THROW(DirectiveSequence::parse("2,,1"), contract_error);
  EXPECT_THROW(DirectiveSequence::parse("2,x"), contract_error);
  EXPECT_THROW(DirectiveSequence::parse("2,1,"), contract_error);
  EXPECT_THROW(DirectiveSequence::parse("1,0,2"), contract_error);
  EXPECT_NO_THROW(DirectiveSequence::parse("0,1,2"));
}

TEST(StandardWord, Examples) {
  EXPECT_EQ(standard_word({1, 1, 1, 1, 1, 1, 1}), Word("abaababaabaababaababaabaababaabaab"));
  EXPECT_EQ(standard_word({2, 3, 1, 2, 1}), Word("aabaabaabaaabaabaabaabaaabaabaabaabaaabaabaabaaab"));
  EXPECT_EQ(standard_word({4}), Word("aaaab"));
  EXPECT_EQ(standard_word({0, 2}), Word("bba"));
  EXPECT_EQ(standard_word({}), Word("a"));
}

TEST(StandardWord, MatchesOracleAndLengthRecurrence) {
  for (std::uint64_t a = 0; a <= 3; ++a) {
    for (std::uint64_t b = 1; b <= 3; ++b) {
      for (std::uint64_t c = 1; c <= 3; ++c) {
        const DirectiveSequence d{a, b, c, 2, 1};
        const Word s = standard_word(d);
        EXPECT_EQ(s.str(), oracle::standard({a, b, c, 2, 1}));
        EXPECT_EQ(s.size(), d.word_length());
      }
    }
  }
}

TEST(StandardWord, LengthCap) {
  EXPECT_THROW(standard_word(DirectiveSequence(std::vector<std::uint64_t>(60, 1))), size_error);
}

TEST(PalindromicPrefix, Values) {
  EXPECT_EQ(palindromic_prefix(8), Word("abaababaabaababaababaabaababaaba"));
  EXPECT_EQ(palindromic_prefix(2), Word(""));
  EXPECT_EQ(palindromic_prefix(7), Word("abaababaabaababaaba"));
  EXPECT_EQ(palindromic_prefix(6), Word("abaababaaba"));
  EXPECT_THROW(palindromic_prefix(1), contract_error);
  for (std::size_t i = 2; i <= 20; ++i) EXPECT_TRUE(is_palindrome(palindromic_prefix(i))) << i;
  for (std::size_t i = 2; i <= 16; ++i) EXPECT_TRUE(is_lyndon('a' + palindromic_prefix(i) + 'b')) << i;
}

TEST(PalindromicPrefix, Decompositions) {
  for (std::size_t k = 2; k <= 10; ++k) {
    const Word x2k = palindromic_prefix(2 * k);
    const Word x2k1 = palindromic_prefix(2 * k - 1);
    const Word x2k2 = palindromic_prefix(2 * k - 2);
    EXPECT_EQ(x2k, x2k1 + Word("ba") + x2k2) << k;
    EXPECT_EQ(x2k, x2k2 + Word("ab") + x2k1) << k;
    EXPECT_EQ(fibonacci_word(2 * k), x2k + Word("ab"));
    EXPECT_EQ(fibonacci_word(2 * k + 1), palindromic_prefix(2 * k + 1) + Word("ba"));
    // s_{2k+1} = x_{2k} ab x_{2k-1} ba = x_{2k-1} ba x_{2k} ba
    EXPECT_EQ(fibonacci_word(2 * k + 1), x2k + Word("ab") + x2k1 + Word("ba"));
    EXPECT_EQ(fibonacci_word(2 * k + 1), x2k1 + Word("ba") + x2k + Word("ba"));
  }
}

TEST(PlusWords, FibonacciPlus) {
  EXPECT_EQ(fibonacci_plus(4, Parity::even), fibonacci_word(8) + 'b');
  EXPECT_EQ(fibonacci_plus(4, Parity::even).size(), 35u);
  EXPECT_EQ(fibonacci_plus(2, Parity::even), Word("abaabb"));
  EXPECT_EQ(fibonacci_plus(2, Parity::odd), Word("abaababaa"));
  EXPECT_THROW(fibonacci_plus(1, Parity::even), contract_error);
  for (std::size_t k = 2; k <= 10; ++k) {
    EXPECT_EQ(fibonacci_plus(k, Parity::even).size(), fibonacci_number(2 * k) + 1);
    EXPECT_EQ(fibonacci_plus(k, Parity::odd).size(), fibonacci_number(2 * k + 1) + 1);
  }
}

TEST(PlusWords, StandardPlus) {
  const Word v = standard_plus({2, 3, 1, 2, 1});
  EXPECT_EQ(v, Word("aabaabaabaaabaabaabaabaaabaabaabaabaaabaabaabaaabb"));
  EXPECT_EQ(v.size(), 50u);
  EXPECT_EQ(standard_plus({1, 1, 1, 1, 1, 1, 1}), fibonacci_plus(4, Parity::even));
  EXPECT_EQ(standard_plus({1, 1, 1, 1, 1, 1}), fibonacci_plus(3, Parity::odd));
  EXPECT_THROW(standard_plus({0, 1, 1, 1}), contract_error);
  EXPECT_THROW(standard_plus({1, 1}), contract_error);
}

TEST(StandardWord, ReverseIsConjugate) {
  // Orders 4..14, entries <= 3 (d_0 may be 0).
  std::size_t checked = 0;
  for (std::size_t order = 4; order <= 14; ++order) {
    const std::size_t len = order - 1;
    std::vector<std::uint64_t> d(len, 1);
    // Enumerate all directives of this length with entries in 0..3 (d_0) / 1..3 (others), bounded in size.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == len) {
        const DirectiveSequence seq(d);
        const Word s = standard_word(seq);
        ASSERT_EQ(lyndon_rotation(reverse(s)).word, lyndon_rotation(s).word) << seq.to_string();
        ASSERT_EQ(rho(s), RhoValue(1, 1));
        ++checked;
        return;
      }
      for (std::uint64_t e = (i == 0 ? 0 : 1); e <= 3; ++e) {
        d[i] = e;
        const DirectiveSequence prefix(std::vector<std::uint64_t>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(i) + 1));
        if (prefix.word_length() > 2000) break;
        rec(i + 1);
      }
    };
    rec(0);
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Directive, EnumerationByLength) {
  // Every directive found produces a word of the requested length; cross-check by brute force.
  for (std::uint64_t len = 1; len <= 20; ++len) {
    std::set<std::string> seen;
    for_each_directive_of_length(len, 0, 1, [&](const DirectiveSequence& d) {
      EXPECT_EQ(standard_word(d).size(), len);
      seen.insert(d.to_string());
    });
    std::size_t brute = 0;
    // Brute force: directives of length <= len with entries <= len.
    std::function<void(std::vector<std::uint64_t>&)> rec = [&](std::vector<std::uint64_t>& d) {
      if (oracle::standard(d).size() == len) {
        ++brute;
        EXPECT_TRUE(seen.count(DirectiveSequence(d).to_string())) << DirectiveSequence(d).to_string();
      }
      if (d.size() >= len + 1) return;
      for (std::uint64_t e = d.empty() ? 0 : 1; e <= len; ++e) {
        d.push_back(e);
        const bool grew = oracle::standard(d).size() <= len;
        if (grew) rec(d);
        d.pop_back();
        if (!grew) break;
      }
    };
    std::vector<std::uint64_t> d;
    rec(d);
    EXPECT_EQ(brute, seen.size()) << len;
  }
}
