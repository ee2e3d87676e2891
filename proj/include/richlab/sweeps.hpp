#pragma once

// Exhaustive and randomized cross-checks of the fast paths against the brute-force oracles.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "richlab/oracle.hpp"
#include "richlab/palindromes.hpp"
#include "richlab/transform.hpp"

namespace richlab {

struct SweepResult {
  explicit SweepResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few violations

  [[nodiscard]] bool ok() const noexcept { return violations == 0; }
  void fail(std::string what) {
    ++violations;
    if (examples.size() < 5) examples.push_back(std::move(what));
  }
};

namespace detail {

// Calls f on every word over the alphabet with length in [lo, hi].
template <class F>
void for_each_word(Alphabet a, std::size_t lo, std::size_t hi, F&& f) {
  for (std::size_t n = lo; n <= hi; ++n)
    for (const auto& w : oracle::all_words(a, n)) f(w);
}

inline Word random_word(std::mt19937_64& rng, Alphabet a, std::size_t n) {
  std::uniform_int_distribution<unsigned> letter(0, a.modulus() - 1);
  Word w(a);
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(letter(rng));
  return w;
}

inline std::size_t pal_count(const Word& w, const SymmetryElement& psi) {
  PseudoPalindromeTree t(psi);
  t.push(w);
  return t.distinct() + 1;
}

}  // namespace detail

/// #Pal^R(w) <= |w| + 1 and #Pal^E(w) <= |w| (w nonempty) for every binary w up to max_length.
inline SweepResult binary_bound_sweep(std::size_t max_length) {
  SweepResult r{"binary palindrome bounds"};
  Alphabet const A(2);
  auto const R = SymmetryElement::psi(0, A);
  auto const E = SymmetryElement::psi(1, A);
  detail::for_each_word(A, 0, max_length, [&](const Word& w) {
    ++r.cases;
    if (detail::pal_count(w, R) > w.size() + 1) r.fail("R bound fails on " + to_string(w));
    if (!w.empty() && detail::pal_count(w, E) > w.size()) r.fail("E bound fails on " + to_string(w));
  });
  return r;
}

/// #Pal^Psi(w) <= |w| + 1 - gamma_Psi(w) for every Psi_x and every word over Z_m up to max_length.
inline SweepResult psi_bound_sweep(unsigned m, std::size_t max_length) {
  SweepResult r{"Psi palindrome bound over Z_" + std::to_string(m)};
  Alphabet const A(m);
  detail::for_each_word(A, 0, max_length, [&](const Word& w) {
    for (unsigned x = 0; x < m; ++x) {
      auto const psi = SymmetryElement::psi(x, A);
      ++r.cases;
      if (detail::pal_count(w, psi) + gamma_psi(w, psi) > w.size() + 1) {
        r.fail(psi.name() + " bound fails on " + to_string(w));
      }
    }
  });
  return r;
}

/// Palindrome counts by length and defects, tree against center expansion and factor enumeration.
inline SweepResult palindrome_oracle_sweep(unsigned m, std::size_t words, std::size_t max_length, std::uint64_t seed,
                                           std::size_t defect_length = 40) {
  SweepResult r{"palindrome counts against the oracle over Z_" + std::to_string(m)};
  Alphabet const A(m);
  std::mt19937_64 rng(seed * 1000003 + m);
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::vector<SymmetryGroup> groups{SymmetryGroup::dihedral(m), SymmetryGroup::reversal(A)};
  if (m % 2 == 0) groups.push_back(SymmetryGroup::dihedral_even(m));
  for (std::size_t t = 0; t < words; ++t) {
    // small alphabets within Z_m make palindromes frequent
    Alphabet const draw(t % 2 ? m : 2);
    Word w = detail::random_word(rng, draw, length(rng));
    w = Word(A, w.vector());
    for (unsigned x = 0; x < m; ++x) {
      auto const psi = SymmetryElement::psi(x, A);
      ++r.cases;
      if (count_by_length(w, psi, w.size()) != oracle::pal_counts_by_center(w, psi, w.size())) {
        r.fail(psi.name() + " counts differ on a word of length " + std::to_string(w.size()));
      }
    }
    Word const head = w.prefix(std::min(w.size(), defect_length));
    for (const auto& g : groups) {
      ++r.cases;
      if (defect(head, g) != oracle::defect(head, g)) r.fail(g.label() + " defect differs on " + to_string(head));
    }
  }
  return r;
}

/// Preimages, commutation with Psi_y and the center correspondence for every binary u up to max_length.
inline SweepResult s_binary_sweep(std::size_t max_length, std::size_t brute_force_length = 10) {
  SweepResult r{"S on binary words"};
  Alphabet const A(2);
  auto const er = SymmetryElement::pi(1, A);
  detail::for_each_word(A, 1, max_length, [&](const Word& u) {
    ++r.cases;
    Word const v = s_apply(u);
    if (v.size() + 1 != u.size()) r.fail("length of S(" + to_string(u) + ")");
    if (!(s_preimage(v, u[0]) == u)) r.fail("preimage of S(" + to_string(u) + ")");
    auto const pre = s_preimages_all(v);
    if (pre.size() != 2 || !(apply(er, pre[0]) == pre[1])) r.fail("two-preimage law at " + to_string(v));
    if (u.size() <= brute_force_length + 1 && u[0] == 0) {
      auto brute = oracle::s_preimages(v);
      auto mine = pre;
      std::sort(brute.begin(), brute.end());
      std::sort(mine.begin(), mine.end());
      if (brute != mine) r.fail("preimage set of " + to_string(v) + " differs from brute force");
    }
    if (u.size() >= 2)
      for (unsigned y = 0; y < 2; ++y)
        if (!s_commutation_check(u, y)) r.fail("commutation with Psi_" + std::to_string(y) + " on " + to_string(u));
    if (!palindrome_center_classify(u).consistent) r.fail("center class of " + to_string(u));
  });
  return r;
}

/// Inverse pair and Psi-transfer over Z_m: random words for the inverse pair, exhaustive short words otherwise.
inline SweepResult s_multiliteral_sweep(std::uint64_t seed, std::size_t words = 200, std::size_t max_length = 200,
                                        std::size_t exhaustive_length = 6) {
  SweepResult r{"S over Z_m"};
  std::mt19937_64 rng(seed);
  for (unsigned m = 2; m <= 6; ++m) {
    Alphabet const A(m);
    std::uniform_int_distribution<std::size_t> length(1, max_length);
    for (std::size_t t = 0; t < words; ++t) {
      Word const u = detail::random_word(rng, A, length(rng));
      ++r.cases;
      if (!(s_preimage(s_apply(u), u[0]) == u)) r.fail("preimage over Z_" + std::to_string(m));
    }
    detail::for_each_word(A, 2, m <= 4 ? exhaustive_length : 4, [&](const Word& u) {
      for (unsigned y = 0; y < m; ++y) {
        ++r.cases;
        if (!s_commutation_check(u, y)) r.fail("commutation with Psi_" + std::to_string(y) + " on " + to_string(u));
        auto const psi = SymmetryElement::psi(y, A);
        auto const psi2 = SymmetryElement::psi(A.add(y, y), A);
        if (is_pseudopalindrome(u, psi) && !is_pseudopalindrome(s_apply(u), psi2)) {
          r.fail("Psi_" + std::to_string(y) + "-palindrome " + to_string(u) + " maps to a non-palindrome");
        }
      }
    });
  }
  return r;
}

/// decompose_pq against the exhaustive witness search, and the periodic structure it implies.
inline SweepResult pq_sweep(std::size_t max_total) {
  SweepResult r{"pq decomposition"};
  Alphabet const A(2);
  auto const R = SymmetryElement::psi(0, A);
  auto const E = SymmetryElement::psi(1, A);
  detail::for_each_word(A, 0, max_total, [&](const Word& w) {
    bool const epal = is_pseudopalindrome(w, E);
    bool any_split = false;
    for (std::size_t k = 0; k <= w.size(); ++k) {
      Word const p = w.prefix(k), q = w.substr(k, w.size() - k);
      if (!epal || !is_pseudopalindrome(p, R) || !is_pseudopalindrome(q, R)) continue;
      any_split = true;
      ++r.cases;
      PQDecomposition const d = decompose_pq(p, q);
      auto const witnesses = oracle::pq_witnesses(p, q);
      if (witnesses.empty()) {
        r.fail("no brute-force witness for " + to_string(p) + "|" + to_string(q));
        continue;
      }
      auto const& best = *std::min_element(witnesses.begin(), witnesses.end(), [](const auto& a, const auto& b) {
        return a.c.size() != b.c.size() ? a.c.size() < b.c.size() : a.i < b.i;
      });
      if (!(best.c == d.c) || best.i != d.i || best.j != d.j) {
        r.fail("decomposition of " + to_string(p) + "|" + to_string(q) + " is not the shortest witness");
      }
    }
    auto const ps = periodic_structure_check(w);
    if (ps.has_value() != any_split) r.fail("periodic structure presence on " + to_string(w));
    if (ps && !(detail::repeat(ps->c + apply(E, ps->c), ps->power) == w)) r.fail("period of " + to_string(w));
  });
  return r;
}

/// Every sweep of the oracle suite with its default sizes.
struct OracleSuiteConfig {
  std::size_t binary_length = 14;
  std::size_t psi_length = 8;
  std::size_t random_words = 100;
  std::size_t random_length = 500;
  std::size_t s_length = 12;
  std::size_t pq_length = 10;
  std::uint64_t seed = 1;
};

inline std::vector<SweepResult> oracle_suite(const OracleSuiteConfig& cfg = {}) {
  std::vector<SweepResult> out;
  out.push_back(binary_bound_sweep(cfg.binary_length));
  out.push_back(psi_bound_sweep(3, cfg.psi_length));
  out.push_back(psi_bound_sweep(4, cfg.psi_length));
  for (unsigned m : {2u, 3u, 4u, 6u}) {
    out.push_back(palindrome_oracle_sweep(m, cfg.random_words, cfg.random_length, cfg.seed));
  }
  out.push_back(s_binary_sweep(cfg.s_length));
  out.push_back(s_multiliteral_sweep(cfg.seed));
  out.push_back(pq_sweep(cfg.pq_length));
  return out;
}

}  // namespace richlab
