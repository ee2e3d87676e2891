// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is nonzero if any selected one fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "richlab/analysis.hpp"
#include "richlab/gtm.hpp"
#include "richlab/sweeps.hpp"

namespace {

using namespace richlab;

constexpr std::size_t N = 100'000;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string what) {
    if (!ok) {
      pass = false;
      notes.push_back(std::move(what));
    }
  }
};

std::string list(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s.empty() ? "-" : s;
}

std::vector<std::size_t> nonzero(const EqualityAudit& a, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t n = from; n <= to; ++n)
    if (a.slack[n] != 0) out.push_back(n);
  return out;
}

std::set<Word> words(std::initializer_list<const char*> xs) {
  std::set<Word> s;
  for (const char* x : xs) s.insert(parse_word(x, Alphabet(2)));
  return s;
}

Outcome example_defects() {
  Outcome o;
  Alphabet const A(2);
  Word const w = parse_word("011010011001", A);
  auto const R = SymmetryGroup::reversal(A);
  auto const E = SymmetryGroup::exchange();
  auto const H = SymmetryGroup::binary_h();
  o.require(defect(w, R) == 2, "D^R = " + std::to_string(defect(w, R)) + ", want 2");
  o.require(defect(w, E) == 3, "D^E = " + std::to_string(defect(w, E)) + ", want 3");
  o.require(defect(w, H) == 0, "D^H = " + std::to_string(defect(w, H)) + ", want 0");

  auto as_set = [](const std::vector<Word>& v) { return std::set<Word>(v.begin(), v.end()); };
  auto const pr = as_set(pal_sets(w, SymmetryElement::psi(0, A)));
  auto const pe = as_set(pal_sets(w, SymmetryElement::psi(1, A)));
  o.require(pr == words({"", "0", "1", "11", "00", "101", "010", "0110", "1001", "001100", "10011001"}),
            "Pal^R differs from the listing");
  o.require(pe == words({"", "01", "10", "0011", "1100", "1010", "110100", "001100", "01101001"}),
            "Pal^E differs from the listing");
  std::set<std::vector<Word>> want_h, got_h;
  for (const auto& x : words({"", "0", "00", "01", "010", "0110", "0011", "1010", "110100", "100110", "001100",
                              "10011001", "01101001"}))
    want_h.insert(orbit(x, H));
  for (const auto& x : pal_orbits(w, H)) got_h.insert(orbit(x, H));
  o.require(got_h == want_h, "Pal^H orbits differ from the listing");
  return o;
}

Outcome printed_prefixes() {
  Outcome o;
  auto check = [&](const WordSource& src, std::size_t n, const std::string& want, const std::string& name) {
    std::string const got = to_string(prefix(src, n));
    o.require(got == want, name + " prefix " + got);
  };
  check(WordSource::s_image(thue_morse(2, 2)), 26, "10111010101110111011101010", "S(tm(2,2))");
  check(WordSource::s_image(thue_morse(4, 4)), 43, "1310313213103133313213103132131113103132131", "S(tm(4,4))");
  check(WordSource::s_image(thue_morse(3, 4)), 44, "13331113131113331313331113331113331313331113", "S(tm(3,4))");
  return o;
}

Outcome profile_transfer() {
  Outcome o;
  std::vector<std::pair<std::string, WordSource>> const us{
      {"tm(2,2)", thue_morse(2, 2)}, {"tm(3,2)", thue_morse(3, 2)}, {"tm(4,2)", thue_morse(4, 2)},
      {"rote", rote_source()}};
  for (const auto& [name, src] : us) {
    auto const t = s_transfer_check(prefix(src, N), 100);
    o.require(t.complexity_failures.empty(), name + ": complexity transfer fails at n = " + list(t.complexity_failures));
    o.require(t.palindrome_failures.empty(), name + ": palindrome transfer fails at n = " + list(t.palindrome_failures));
  }
  return o;
}

Outcome h_richness() {
  Outcome o;
  auto const H = SymmetryGroup::binary_h();
  std::vector<std::pair<std::string, WordSource>> const us{
      {"tm(2,2)", thue_morse(2, 2)}, {"tm(3,2)", thue_morse(3, 2)}, {"tm(4,2)", thue_morse(4, 2)},
      {"rote", rote_source()}};
  for (const auto& [name, src] : us) {
    FactorIndex const idx(prefix(src, N), 101);
    auto const a = equality_audit(idx, H, 100);
    o.require(a.closure.complete(), name + ": not closed under H at n = 101");
    o.require(a.zero_on(1, 100), name + ": H slack nonzero at n = " + list(nonzero(a, 1, 100)));
  }
  auto const R = SymmetryGroup::reversal(Alphabet(2));
  Word const t = prefix(thue_morse(2, 2), N);
  FactorIndex const idx(t, 21);
  auto const a = equality_audit(idx, R, 20);
  o.require(a.first_positive().has_value(), "tm(2,2): R slack is zero for every n <= 20");
  auto const prof = defect_profile(thue_morse(2, 2), R, doubling_schedule(N));
  o.require(prof.lower_bound() >= 2, "D^R lower bound " + std::to_string(prof.lower_bound()));
  Word const w12 = parse_word("011010011001", Alphabet(2));
  o.require(idx.contains(w12) && defect(w12, R) == 2, "witness factor missing or not of defect 2");
  return o;
}

Outcome gtm_closed_forms() {
  Outcome o;
  for (auto [b, m] : std::vector<std::pair<unsigned, unsigned>>{{3, 3}, {3, 4}, {4, 4}, {5, 6}, {3, 6}}) {
    std::string const name = "(" + std::to_string(b) + "," + std::to_string(m) + ")";
    auto const closed = gtm_tables(b, m);
    Word const v = prefix(WordSource::s_image(thue_morse(b, m)), N);
    SymmetryGroup const G = SymmetryGroup::dihedral_even(m);
    FactorIndex const iv(v, 4);
    auto const pp = palindrome_profile(v, G, 3);
    std::array<long long, 3> C{}, F{};
    for (std::size_t n = 1; n <= 3; ++n) {
      C[n - 1] = static_cast<long long>(iv.complexity(n));
      F[n - 1] = static_cast<long long>(pp.F[n]);
    }
    auto const summary = gtm_summary_from(C, F, static_cast<long long>(G.size()));
    o.require(C == closed.C, name + ": factor counts differ from the closed form");
    o.require(F == closed.F, name + ": palindrome counts differ from the closed form");
    o.require(summary == closed.summary, name + ": summary rows differ");
    if (closed.parity != GtmParity::both_even) {
      o.require(summary.equality_n1() && summary.equality_n2(), name + ": equality fails in an odd-parity column");
    }
  }
  return o;
}

Outcome gtm_richness() {
  Outcome o;
  for (auto [b, m] : std::vector<std::pair<unsigned, unsigned>>{{3, 4}, {3, 3}, {5, 4}, {4, 4}}) {
    std::string const name = "S(tm(" + std::to_string(b) + "," + std::to_string(m) + "))";
    FactorIndex const idx(prefix(WordSource::s_image(thue_morse(b, m)), N), 51);
    auto const a = equality_audit(idx, SymmetryGroup::dihedral_even(m), 50);
    std::size_t const from = (b % 2 || m % 2) ? 1 : 3;
    o.require(a.closure.complete(), name + ": not closed at n = 51");
    o.require(a.zero_on(from, 50), name + ": slack nonzero at n = " + list(nonzero(a, from, 50)));
  }
  return o;
}

Outcome letter_collapse() {
  Outcome o;
  Alphabet const A(4);
  WordSource const v1 = WordSource::s_image(thue_morse(3, 4));
  WordSource const v2 = WordSource::s_image(v1);
  Word const w1 = prefix(v1, N), w2 = prefix(v2, N);
  o.require(w1.letter_set() == std::vector<Letter>{1, 3}, "S(tm(3,4)) letters are not {1,3}");
  o.require(w2.letter_set() == std::vector<Letter>{0, 2}, "S^2(tm(3,4)) letters are not {0,2}");
  // H on {1,3}: Psi_0 swaps 1 and 3, Psi_2 fixes both. R on {0,2}: Psi_0 fixes both.
  auto const h = equality_audit(FactorIndex(w1, 51), SymmetryGroup::dihedral_even(4), 50);
  auto const r = equality_audit(FactorIndex(w2, 51), SymmetryGroup::generate({SymmetryElement::psi(0, A)}, "R"), 50);
  o.require(h.zero_on(1, 50), "S(tm(3,4)): H slack nonzero at n = " + list(nonzero(h, 1, 50)));
  o.require(r.zero_on(1, 50), "S^2(tm(3,4)): R slack nonzero at n = " + list(nonzero(r, 1, 50)));
  return o;
}

Outcome preimage_tower() {
  Outcome o;
  auto const H = SymmetryGroup::binary_h();
  auto const R = SymmetryGroup::reversal(Alphabet(2));
  for (unsigned k = 1; k <= 4; ++k) {
    std::string const tag = "k=" + std::to_string(k) + ": ";
    FactorIndex const idx(prefix(iterate_s_preimage(sturmian_source(), k), N), 13);
    std::vector<std::size_t> bad;
    for (std::size_t n = 1; n <= 12; ++n) {
      long long const dc = static_cast<long long>(idx.complexity(n + 1)) - static_cast<long long>(idx.complexity(n));
      long long const want = n <= k ? (1LL << (n - 1)) : (1LL << k);
      if (dc != want) bad.push_back(n);
    }
    o.require(bad.empty(), tag + "dC differs at n = " + list(bad));
    auto const c8 = closure_check(idx, H, 8);
    o.require(c8.complete(), tag + "H-closure at n = 8 is " + std::to_string(c8.fraction()));
    bool const hz = equality_audit(idx, H, 12).zero_on(1, 12);
    bool const rz = equality_audit(idx, R, 12).zero_on(1, 12);
    o.require(hz == (k <= 3), tag + "H slack pattern disagrees");
    o.require(rz == (k <= 2), tag + "R slack pattern disagrees");
  }
  return o;
}

Outcome oracle_sweeps() {
  Outcome o;
  OracleSuiteConfig cfg;
  cfg.binary_length = 14;
  cfg.psi_length = 8;
  cfg.random_words = 100;
  cfg.random_length = 500;
  cfg.s_length = 12;
  for (const auto& r : oracle_suite(cfg)) {
    o.require(r.ok(), r.name + ": " + std::to_string(r.violations) + " violations" +
                          (r.examples.empty() ? "" : ", e.g. " + r.examples.front()));
  }
  return o;
}

Outcome return_words() {
  Outcome o;
  Word const t = prefix(thue_morse(2, 2), N);
  FactorIndex const it(t, 20);
  auto const h = return_word_audit(it, SymmetryGroup::binary_h(), 1, 20);
  o.require(h.orbits_checked > 0 && h.violations.empty(),
            "tm(2,2) under H: " + std::to_string(h.violations.size()) + " violations");
  auto const r = return_word_audit(it, SymmetryGroup::reversal(Alphabet(2)), 1, 20);
  o.require(!r.violations.empty(), "tm(2,2) under R: no violation found");
  FactorIndex const iv(prefix(WordSource::s_image(thue_morse(3, 4)), N), 20);
  auto const g = return_word_audit(iv, SymmetryGroup::dihedral_even(4), 1, 20);
  o.require(g.orbits_checked > 0 && g.violations.empty(),
            "S(tm(3,4)) under I2p(4): " + std::to_string(g.violations.size()) + " violations");
  return o;
}

struct Criterion {
  std::string title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"defects and palindrome sets of 011010011001", example_defects},
      {"printed prefixes of S(tm(2,2)), S(tm(4,4)), S(tm(3,4))", printed_prefixes},
      {"complexity and palindrome transfer under S, n <= 100", profile_transfer},
      {"H-richness equality for tm(b,2) and rote; tm(2,2) not R-rich", h_richness},
      {"gtm closed-form tables", gtm_closed_forms},
      {"zero I2p(m) slack for S(tm(b,m))", gtm_richness},
      {"letter collapse and richness of S(tm(3,4)) and S^2(tm(3,4))", letter_collapse},
      {"S-preimage tower of the Fibonacci word", preimage_tower},
      {"oracle sweeps", oracle_sweeps},
      {"complete return-word audits", return_words},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<unsigned> selected;
  app.add_option("--criterion", selected, "criterion number, repeatable (default: all)")
      ->check(CLI::Range(1u, static_cast<unsigned>(criteria().size())));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty())
    for (unsigned i = 1; i <= criteria().size(); ++i) selected.push_back(i);

  bool all = true;
  for (unsigned i : selected) {
    const auto& c = criteria()[i - 1];
    auto const t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i << ": " << c.title << " (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
