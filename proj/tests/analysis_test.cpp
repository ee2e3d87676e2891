#include <gtest/gtest.h>

#include "richlab/analysis.hpp"

using namespace richlab;

namespace {

const SymmetryGroup& R2() {
  static const SymmetryGroup g = SymmetryGroup::reversal(Alphabet(2));
  return g;
}

}  // namespace

TEST(Special, SturmianHasOneRightSpecialPerLength) {
  FactorIndex const idx(prefix(sturmian_source(), 20000), 30);
  for (std::size_t n = 1; n <= 25; ++n) {
    auto const sf = special_factors(idx, n);
    EXPECT_EQ(sf.right.size(), 1u);
    EXPECT_EQ(sf.left.size(), 1u);
  }
}

TEST(Bilateral, SturmianBispecialsArePalindromesOfOrderZero) {
  FactorIndex const idx(prefix(sturmian_source(), 20000), 30);
  for (const auto& e : bispecial_audit(idx, 20)) {
    EXPECT_TRUE(e.palindrome) << to_string(e.w);
    EXPECT_EQ(e.bilateral, 0);
    EXPECT_TRUE(e.conforming);
  }
}

TEST(Bilateral, ThueMorseHasNonconformingBispecials) {
  FactorIndex const idx(prefix(thue_morse(2, 2), 65536), 20);
  auto const bis = bispecial_audit(idx, 16);
  EXPECT_TRUE(std::any_of(bis.begin(), bis.end(), [](const auto& e) { return !e.conforming; }));
  EXPECT_EQ(bilateral_order(idx, Word(Alphabet(2))), 1);
  EXPECT_THROW(bilateral_order(idx, parse_word("000", 2)), error);
}

TEST(Pext, ThueMorseEmptyWord) {
  FactorIndex const idx(prefix(thue_morse(2, 2), 4096), 10);
  auto const p = palindromic_extensions(idx, Word(Alphabet(2)));
  EXPECT_EQ(p.size(), 2u);
  auto const pe = palindromic_extensions(idx, Word(Alphabet(2)), SymmetryElement::psi(1, 2));
  EXPECT_EQ(pe.size(), 2u);
}

TEST(Equality, SturmianAndThueMorse) {
  FactorIndex const s(prefix(sturmian_source(), 20000), 51);
  EXPECT_TRUE(equality_audit(s, R2(), 50).zero_on(1, 50));
  FactorIndex const t(prefix(thue_morse(2, 2), 20000), 51);
  auto const h = equality_audit(t, SymmetryGroup::binary_h(), 50);
  EXPECT_TRUE(h.closure.complete());
  EXPECT_TRUE(h.zero_on(1, 50));
  auto const r = equality_audit(t, R2(), 50);
  EXPECT_TRUE(r.nonnegative());
  EXPECT_TRUE(r.first_positive().has_value());
}

TEST(Equality, HorizonIsChecked) {
  FactorIndex const t(prefix(thue_morse(2, 2), 2000), 10);
  EXPECT_THROW(equality_audit(t, R2(), 10), error);
  EXPECT_NO_THROW(equality_audit(t, R2(), 9));
}

TEST(Closure, PartialLanguage) {
  FactorIndex const idx(parse_word("0011", 2), 3);
  auto const c = closure_check(idx, R2(), 2);
  EXPECT_EQ(c.total, 3u);
  EXPECT_EQ(c.closed, 2u);
  EXPECT_FALSE(c.complete());
}

TEST(BrIdentity, SturmianAndRote) {
  auto const s = br_identity_check(sturmian_source(), 20000, 50);
  EXPECT_TRUE(s.agree());
  EXPECT_EQ(s.defect, 0u);
  EXPECT_EQ(s.sum_t, 0);
  auto const r = br_identity_check(rote_source(), 20000, 50);
  EXPECT_TRUE(r.agree());
}

TEST(SImageOfSImage, AgreesWithDirectComputation) {
  Word const u = prefix(sturmian_source(), 5000);
  Word const v = prefix(iterate_s(sturmian_source(), 2), 4998);
  EXPECT_EQ(v, s_apply(s_apply(u)));
}

TEST(DefectProfile, ThueMorseGrows) {
  auto const p = defect_profile(thue_morse(2, 2), R2(), doubling_schedule(4096));
  EXPECT_EQ(p.schedule.front(), 16u);
  EXPECT_EQ(p.schedule.back(), 4096u);
  EXPECT_TRUE(p.nondecreasing());
  EXPECT_GE(p.lower_bound(), 2u);
  EXPECT_THROW(defect_profile(thue_morse(2, 2), R2(), {10, 5}), error);
}

TEST(ReturnWords, CompleteReturnWords) {
  FactorIndex const idx(prefix(thue_morse(2, 2), 4096), 8);
  auto const H = SymmetryGroup::binary_h();
  auto const rw = complete_g_return_words(idx, parse_word("0", 2), H);
  EXPECT_EQ(rw.words.size(), 4u);
  for (const auto& w : rw.words) EXPECT_TRUE(is_g_palindrome(w, H));
  EXPECT_TRUE(return_word_audit(idx, H, 1, 8).violations.empty());
  EXPECT_FALSE(return_word_audit(idx, R2(), 1, 8).violations.empty());
}

TEST(Welldoc, SturmianAndPeriodic) {
  Word const w = prefix(sturmian_source(), 20000);
  for (const char* f : {"", "0", "1", "01", "101", "0110"}) {
    EXPECT_TRUE(welldoc2(w, parse_word(f, 2), 10000).confirmed()) << f;
  }
  Word const p = prefix(WordSource::periodic(parse_word("01", 2)), 1000);
  auto const zero = welldoc2(p, parse_word("0", 2), 1000);
  EXPECT_EQ(zero.residues, (std::set<std::pair<int, int>>{{0, 0}, {1, 1}}));
  EXPECT_TRUE(welldoc2(p, Word(Alphabet(2)), 1000).confirmed());
}

TEST(Recurrence, SturmianGaps) {
  FactorIndex const idx(prefix(sturmian_source(), 20000), 5);
  EXPECT_EQ(max_recurrence_gap(idx, 1), 3u);
  EXPECT_EQ(recurrence_gaps(idx, 2).size(), 3u);
}

TEST(Verdict, RichAndDefective) {
  auto const v = richness_verdict(WordSource::s_image(thue_morse(2, 2)), R2(), 20000);
  EXPECT_EQ(v.status, RichnessStatus::rich_up_to);
  auto const d = richness_verdict(thue_morse(2, 2), R2(), 20000);
  EXPECT_EQ(d.status, RichnessStatus::defect_lower_bound);
  ASSERT_EQ(d.witnesses.size(), 2u);
  EXPECT_EQ(defect(d.witnesses[0], R2()), 1u);
  EXPECT_EQ(defect(d.witnesses[1], R2()), d.defect);
}

TEST(Transfer, BinaryWords) {
  Word const u = prefix(thue_morse(2, 2), 20000);
  EXPECT_TRUE(s_transfer_check(u, 50).ok());
  EXPECT_TRUE(s_transfer_check(prefix(rote_source(), 20000), 50).ok());
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_TRUE(right_special_transfer_check(u, n)) << n;
  EXPECT_THROW(s_transfer_check(prefix(thue_morse(3, 4), 100), 5), error);
}

TEST(Complexity, Differences) {
  FactorIndex const idx(prefix(rote_source(), 20000), 31);
  auto const c = complexity(idx, 30);
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(c.dC[n], 2);
}
