#include <gtest/gtest.h>

#include "richlab/oracle.hpp"
#include "richlab/palindromes.hpp"
#include "richlab/source.hpp"
#include "richlab/sweeps.hpp"

using namespace richlab;

namespace {

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

Word tm12() { return parse_word("011010011001", 2); }

}  // namespace

TEST(PalindromeTree, DistinctPalindromes) {
  Word const w = parse_word("0010100", 2);
  PseudoPalindromeTree t(SymmetryElement::psi(0, 2));
  t.push(w);
  EXPECT_EQ(t.distinct(), 7u);
  EXPECT_EQ(as_set(pal_sets(w, SymmetryElement::psi(0, 2))), oracle::pal_set(w, SymmetryElement::psi(0, 2)));
  // over Z_3, Psi_0 swaps 1 and 2
  Word const z = parse_word("0120210", 3);
  auto const psi = SymmetryElement::psi(0, 3);
  EXPECT_EQ(as_set(pal_sets(z, psi)), oracle::pal_set(z, psi));
  EXPECT_TRUE(is_pseudopalindrome(parse_word("12", 3), psi));
}

TEST(PalindromeTree, ExchangePalindromesOfThueMorsePrefix) {
  Word const w = tm12();
  auto const E = SymmetryElement::psi(1, 2);
  EXPECT_EQ(as_set(pal_sets(w, E)), oracle::pal_set(w, E));
  EXPECT_EQ(count_by_length(w, E, 12), oracle::pal_counts_by_center(w, E, 12));
}

TEST(Defect, ThueMorsePrefix) {
  Word const w = tm12();
  EXPECT_EQ(defect(w, SymmetryGroup::reversal(Alphabet(2))), 2u);
  EXPECT_EQ(defect(w, SymmetryGroup::binary_h()), 0u);
  EXPECT_EQ(defect(w, SymmetryGroup::exchange()), oracle::defect(w, SymmetryGroup::exchange()));
  EXPECT_EQ(psi_defect(w, SymmetryElement::psi(0, 2)), 2u);
}

TEST(Defect, RichWords) {
  for (const char* s : {"", "0", "0110", "0010100", "10110101"})
    EXPECT_EQ(defect(parse_word(s, 2), SymmetryGroup::reversal(Alphabet(2))), 0u) << s;
  EXPECT_EQ(defect(prefix(sturmian_source(), 5000), SymmetryGroup::reversal(Alphabet(2))), 0u);
}

TEST(Defect, TrackerIsIncremental) {
  Word const w = prefix(thue_morse(2, 2), 200);
  auto const R = SymmetryGroup::reversal(Alphabet(2));
  DefectTracker tr(R);
  for (std::size_t i = 0; i < w.size(); ++i) {
    tr.push(w[i]);
    if (i < 40) {
      ASSERT_EQ(tr.defect(), oracle::defect(w.prefix(i + 1), R)) << i;
    }
  }
  EXPECT_EQ(tr.defect(), defect(w, R));
}

TEST(Defect, MonotoneUnderExtension) {
  auto const G = SymmetryGroup::dihedral(3);
  for (const auto& w : oracle::all_words(Alphabet(3), 6)) {
    Word x = w;
    x.push_back(1);
    EXPECT_LE(defect(w, G), defect(x, G));
  }
}

TEST(Orbits, PalindromicOrbitsAgreeWithOracle) {
  auto const H = SymmetryGroup::binary_h();
  Word const w = tm12();
  std::set<std::vector<Word>> got;
  for (const auto& r : pal_orbits(w, H)) got.insert(orbit(r, H));
  EXPECT_EQ(got, oracle::pal_orbits(w, H));
}

TEST(Bounds, ExhaustiveSmallWords) {
  EXPECT_TRUE(binary_bound_sweep(12).ok());
  EXPECT_TRUE(psi_bound_sweep(3, 6).ok());
  EXPECT_TRUE(psi_bound_sweep(4, 6).ok());
}

TEST(Counts, RandomWordsAgainstOracle) {
  for (unsigned m : {2u, 3u, 4u, 6u}) {
    auto const r = palindrome_oracle_sweep(m, 30, 200, 11);
    EXPECT_TRUE(r.ok()) << (r.examples.empty() ? "" : r.examples.front());
  }
}
