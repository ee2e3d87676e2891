#include <gtest/gtest.h>

#include "richlab/factor_index.hpp"
#include "richlab/source.hpp"
#include "richlab/transform.hpp"

using namespace richlab;

TEST(DigitSum, SmallValues) {
  EXPECT_EQ(digit_sum(0, 2), 0u);
  EXPECT_EQ(digit_sum(7, 2), 3u);
  EXPECT_EQ(digit_sum(10, 3), 2u);
  EXPECT_THROW(digit_sum(3, 1), error);
}

TEST(ThueMorse, Prefixes) {
  EXPECT_EQ(to_string(prefix(thue_morse(2, 2), 16)), "0110100110010110");
  EXPECT_EQ(to_string(prefix(thue_morse(3, 2), 12)), "010101010101");
  EXPECT_EQ(to_string(prefix(thue_morse(3, 4), 12)), "012123230123");
}

TEST(ThueMorse, MorphicFixedPointAgreesWithDigitSum) {
  for (auto [b, m] : {std::pair{2u, 2u}, {3u, 2u}, {3u, 4u}, {4u, 4u}, {5u, 6u}}) {
    WordSource const fix = WordSource::morphic(thue_morse_substitution(b, m), 0);
    EXPECT_EQ(prefix(fix, 5000), prefix(thue_morse(b, m), 5000)) << b << "," << m;
  }
}

TEST(PeriodDoubling, IsTheSImageOfThueMorse) {
  Word const t = prefix(thue_morse(2, 2), 4097);
  EXPECT_EQ(prefix(period_doubling_source(), 4096), s_apply(t));
}

TEST(Sturmian, FibonacciPrefixAndComplexity) {
  Word const w = prefix(sturmian_source(), 20000);
  EXPECT_EQ(to_string(w.prefix(30)), "101101011011010110101101101011");
  FactorIndex const idx(w, 40);
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(idx.complexity(n), n + 1) << n;
}

TEST(Sturmian, RationalSlopeIsPeriodic) {
  Word const w = prefix(sturmian_source(2, 5), 200);
  for (std::size_t i = 5; i < w.size(); ++i) EXPECT_EQ(w[i], w[i - 5]);
  EXPECT_EQ(w.count(1), 80u);
  EXPECT_THROW(sturmian_source(3, 2), error);
}

TEST(Rote, PrefixAndComplexity) {
  Word const w = prefix(rote_source(), 20000);
  EXPECT_EQ(to_string(w.prefix(30)), "011011001001001101100100100110");
  FactorIndex const idx(w, 40);
  for (std::size_t n = 1; n <= 40; ++n) EXPECT_EQ(idx.complexity(n), 2 * n) << n;
}

TEST(SImage, IteratesAndInverts) {
  WordSource const t = thue_morse(3, 4);
  Word const u = prefix(t, 1000);
  Word const v2 = prefix(iterate_s(t, 2), 998);
  EXPECT_EQ(v2, s_apply(s_apply(u)));
  EXPECT_EQ(prefix(iterate_s_preimage(iterate_s(t, 1), 1, u[0]), 1000), u);
}

TEST(Prefix, CapIsEnforced) {
  EXPECT_THROW(prefix(thue_morse(2, 2), 101, 100), error);
  EXPECT_EQ(prefix(thue_morse(2, 2), 100, 100).size(), 100u);
}

TEST(Periodic, RepeatsPeriod) {
  Word const w = prefix(WordSource::periodic(parse_word("012", 3)), 8);
  EXPECT_EQ(to_string(w), "01201201");
}

TEST(Explicit, LengthLimit) {
  WordSource const src = WordSource::explicit_word(parse_word("0110", 2));
  EXPECT_EQ(src.length_limit(), std::optional<std::size_t>(4));
  EXPECT_THROW(prefix(src, 5), error);
}
