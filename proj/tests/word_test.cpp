#include <gtest/gtest.h>

#include <unordered_set>

#include "richlab/word.hpp"

using namespace richlab;

TEST(Alphabet, AdditionWrapsModM) {
  Alphabet const A(5);
  EXPECT_EQ(A.add(3, 4), 2);
  EXPECT_EQ(A.add(0, -1), 4);
  EXPECT_EQ(A.add(2, -12), 0);
  EXPECT_TRUE(A.contains(4));
  EXPECT_FALSE(A.contains(5));
}

TEST(Alphabet, RejectsOutOfRangeModulus) {
  EXPECT_THROW(Alphabet(1), error);
  EXPECT_THROW(Alphabet(Alphabet::max_modulus + 1), error);
}

TEST(Word, ParseAndPrintRoundTrip) {
  Word const w = parse_word("0110", 2);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(to_string(w), "0110");
  Word const big = parse_word("3.11.0", 12);
  EXPECT_EQ(big.vector(), (std::vector<Letter>{3, 11, 0}));
  EXPECT_EQ(parse_word(to_string(big), 12), big);
}

TEST(Word, ParseRejectsLettersOutsideAlphabet) {
  EXPECT_THROW(parse_word("012", 2), error);
  EXPECT_THROW(parse_word("0a", 4), error);
}

TEST(Word, SubstrPrefixReverse) {
  Word const w = parse_word("0112", 3);
  EXPECT_EQ(w.substr(1, 2), parse_word("11", 3));
  EXPECT_EQ(w.prefix(0).size(), 0u);
  EXPECT_EQ(w.reversed(), parse_word("2110", 3));
  EXPECT_EQ(w.letter_set(), (std::vector<Letter>{0, 1, 2}));
  EXPECT_EQ(w.count(1), 2u);
  EXPECT_TRUE(parse_word("01", 3).is_prefix_of(w));
}

TEST(Word, ConcatenationAndOrder) {
  Word const a = parse_word("01", 2), b = parse_word("1", 2);
  EXPECT_EQ(a + b, parse_word("011", 2));
  EXPECT_TRUE(shortlex_less(b, a));
  EXPECT_LT(a, b);
  std::vector<Word> ws{a, b, a, Word(Alphabet(2))};
  sort_shortlex(ws);
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_TRUE(ws[0].empty());
  EXPECT_EQ(ws[1], b);
}

TEST(Word, HashDistinguishesAlphabets) {
  std::unordered_set<Word> s{parse_word("01", 2), parse_word("01", 2), parse_word("10", 2)};
  EXPECT_EQ(s.size(), 2u);
  EXPECT_FALSE(parse_word("01", 2) == parse_word("01", 3));
}
