#include <gtest/gtest.h>

#include "richlab/oracle.hpp"
#include "richlab/sweeps.hpp"
#include "richlab/transform.hpp"

using namespace richlab;

TEST(S, Examples) {
  EXPECT_EQ(s_apply(parse_word("0110100110010110", 2)), parse_word("101110101011101", 2));
  EXPECT_EQ(s_apply(parse_word("01212323", 4)), parse_word("1333111", 4));
  EXPECT_EQ(s_apply(parse_word("0", 3)).size(), 0u);
  EXPECT_THROW(s_apply(Word(Alphabet(2))), error);
}

TEST(S, PreimagesAreTheMLifts) {
  Word const v = parse_word("1333111", 4);
  auto const pre = s_preimages_all(v);
  ASSERT_EQ(pre.size(), 4u);
  for (unsigned a = 0; a < 4; ++a) {
    EXPECT_EQ(pre[a][0], a);
    EXPECT_EQ(s_apply(pre[a]), v);
  }
  EXPECT_EQ(pre[0], parse_word("01212323", 4));
  auto brute = oracle::s_preimages(v);
  std::sort(brute.begin(), brute.end());
  auto mine = pre;
  std::sort(mine.begin(), mine.end());
  EXPECT_EQ(brute, mine);
}

TEST(S, BinaryPreimagesDifferByExchange) {
  Word const v = parse_word("10111", 2);
  auto const pre = s_preimages_all(v);
  EXPECT_EQ(apply(SymmetryElement::pi(1, 2), pre[0]), pre[1]);
}

TEST(S, CommutesWithAntimorphisms) {
  EXPECT_TRUE(s_commutation_check(parse_word("01212323", 4), 1));
  EXPECT_TRUE(s_commutation_check(parse_word("0112", 3), 2));
  EXPECT_THROW(s_commutation_check(parse_word("0", 3), 1), error);
}

TEST(Centers, Classification) {
  auto const e = palindrome_center_classify(parse_word("0011", 2));
  EXPECT_EQ(e.kind, CenterClass::e_palindrome);
  EXPECT_EQ(e.center, Letter{1});
  EXPECT_TRUE(e.consistent);
  auto const r = palindrome_center_classify(parse_word("0110", 2));
  EXPECT_EQ(r.kind, CenterClass::r_even);
  EXPECT_EQ(r.center, Letter{0});
  auto const odd = palindrome_center_classify(parse_word("010", 2));
  EXPECT_EQ(odd.kind, CenterClass::r_odd);
  EXPECT_EQ(odd.image.size() % 2, 0u);
  EXPECT_EQ(palindrome_center_classify(parse_word("001", 2)).kind, CenterClass::none);
}

TEST(PQ, Decompositions) {
  Alphabet const A(2);
  auto const d = decompose_pq(parse_word("0", A), parse_word("1", A));
  EXPECT_EQ(d.c, parse_word("0", A));
  auto const e = decompose_pq(Word(A), Word(A));
  EXPECT_TRUE(e.c.empty());
  EXPECT_EQ(e.i, 0u);
  EXPECT_EQ(e.j, 0u);
  auto const f = decompose_pq(parse_word("010", A), parse_word("101", A));
  EXPECT_EQ(f.c, parse_word("0", A));
  EXPECT_THROW(decompose_pq(parse_word("01", A), parse_word("1", A)), error);
}

TEST(PQ, PeriodicStructure) {
  Alphabet const A(2);
  auto const ps = periodic_structure_check(parse_word("010101", A));
  ASSERT_TRUE(ps.has_value());
  EXPECT_EQ(ps->c, parse_word("0", A));
  EXPECT_EQ(ps->power, 3u);
  EXPECT_FALSE(periodic_structure_check(parse_word("0110", A)).has_value());
}

TEST(Sweeps, BinaryS) {
  auto const r = s_binary_sweep(10, 8);
  EXPECT_TRUE(r.ok()) << (r.examples.empty() ? "" : r.examples.front());
  EXPECT_GT(r.cases, 2000u);
}

TEST(Sweeps, MultiliteralS) {
  auto const r = s_multiliteral_sweep(7, 50, 100, 5);
  EXPECT_TRUE(r.ok()) << (r.examples.empty() ? "" : r.examples.front());
}

TEST(Sweeps, PQAgainstWitnessSearch) {
  auto const r = pq_sweep(9);
  EXPECT_TRUE(r.ok()) << (r.examples.empty() ? "" : r.examples.front());
  EXPECT_GT(r.cases, 0u);
}
