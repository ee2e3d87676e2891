#pragma once

// Brute-force reference implementations. Quadratic or worse; used only to cross-check the fast paths.

#include <map>
#include <set>
#include <vector>

#include "richlab/symmetry.hpp"
#include "richlab/transform.hpp"
#include "richlab/word.hpp"

namespace richlab::oracle {

inline std::set<Word> factors(const Word& w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

inline std::set<Word> all_factors(const Word& w) {
  std::set<Word> out;
  for (std::size_t n = 0; n <= w.size(); ++n) {
    auto f = factors(w, n);
    out.insert(f.begin(), f.end());
  }
  return out;
}

inline std::set<Word> pal_set(const Word& w, const SymmetryElement& psi) {
  std::set<Word> out;
  for (const auto& f : all_factors(w))
    if (apply(psi, f) == f) out.insert(f);
  return out;
}

inline bool is_g_pal(const Word& f, const SymmetryGroup& g) {
  for (const auto& e : g.elements())
    if (e.is_antimorphism() && apply(e, f) == f) return true;
  return false;
}

/// Orbits, each as its sorted member list.
inline std::set<std::vector<Word>> pal_orbits(const Word& w, const SymmetryGroup& g) {
  std::set<std::vector<Word>> out;
  for (const auto& f : all_factors(w))
    if (is_g_pal(f, g)) out.insert(orbit(f, g));
  return out;
}

inline std::size_t gamma(const Word& w, const SymmetryGroup& g) {
  std::set<std::vector<Word>> orbits;
  for (Letter a : w.letter_set()) {
    Word const single(w.alphabet(), std::vector<Letter>{a});
    if (!is_g_pal(single, g)) orbits.insert(orbit(single, g));
  }
  return orbits.size();
}

inline std::size_t defect(const Word& w, const SymmetryGroup& g) {
  return w.size() + 1 - oracle::pal_orbits(w, g).size() - oracle::gamma(w, g);
}

inline std::size_t psi_gamma(const Word& w, const SymmetryElement& psi) {
  std::set<std::set<Letter>> pairs;
  for (Letter a : w.letter_set())
    if (psi(a) != a) pairs.insert({a, psi(a)});
  return pairs.size();
}

/// Psi-palindromic factors counted by length via center expansion.
inline std::vector<std::size_t> pal_counts_by_center(const Word& w, const SymmetryElement& psi, std::size_t n_max) {
  std::set<Word> seen;
  std::size_t const N = w.size();
  for (std::size_t c = 0; c <= 2 * N; ++c) {
    // center between letters when c is even, on letter c/2 when c is odd
    long long lo, hi;
    if (c % 2 == 1) {
      lo = hi = static_cast<long long>(c / 2);
      if (psi(w[static_cast<std::size_t>(lo)]) != w[static_cast<std::size_t>(lo)]) continue;
    } else {
      lo = static_cast<long long>(c / 2) - 1;
      hi = static_cast<long long>(c / 2);
      if (lo < 0 || hi >= static_cast<long long>(N)) continue;
      if (psi(w[static_cast<std::size_t>(hi)]) != w[static_cast<std::size_t>(lo)]) continue;
    }
    while (true) {
      seen.insert(w.substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo + 1)));
      if (lo == 0 || hi + 1 >= static_cast<long long>(N)) break;
      if (psi(w[static_cast<std::size_t>(hi + 1)]) != w[static_cast<std::size_t>(lo - 1)]) break;
      --lo;
      ++hi;
    }
  }
  std::vector<std::size_t> counts(n_max + 1, 0);
  counts[0] = 1;
  for (const auto& p : seen)
    if (p.size() <= n_max) ++counts[p.size()];
  return counts;
}

/// Every word over the alphabet of length n, in lexicographic order.
inline std::vector<Word> all_words(Alphabet a, std::size_t n) {
  std::vector<Word> out;
  std::vector<Letter> cur(n, 0);
  unsigned const m = a.modulus();
  while (true) {
    out.emplace_back(a, cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == m - 1) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

/// All u of length |v| + 1 with S(u) = v, by exhaustive search.
inline std::vector<Word> s_preimages(const Word& v) {
  std::vector<Word> out;
  for (const auto& u : all_words(v.alphabet(), v.size() + 1))
    if (s_apply(u) == v) out.push_back(u);
  return out;
}

struct PQWitness {
  Word c;
  std::size_t i;
  std::size_t j;
};

/// Every (c, i, j) with p = c(E(c)c)^i and q = (E(c)c)^j E(c), found by enumerating all binary c.
inline std::vector<PQWitness> pq_witnesses(const Word& p, const Word& q) {
  std::vector<PQWitness> out;
  Alphabet const A = p.alphabet();
  auto const E = SymmetryElement::psi(1, A);
  std::size_t const total = p.size() + q.size();
  for (std::size_t len = 0; len <= total; ++len) {
    for (const auto& c : all_words(A, len)) {
      Word const ec = apply(E, c);
      for (std::size_t i = 0; (2 * i + 1) * len <= p.size() && (len > 0 || i == 0); ++i) {
        for (std::size_t j = 0; (2 * j + 1) * len <= q.size() && (len > 0 || j == 0); ++j) {
          Word pp = c;
          for (std::size_t t = 0; t < i; ++t) pp = pp + ec + c;
          Word qq(A);
          for (std::size_t t = 0; t < j; ++t) qq = qq + ec + c;
          qq = qq + ec;
          if (pp == p && qq == q) out.push_back({c, i, j});
        }
      }
    }
  }
  return out;
}

struct ExtensionSets {
  std::set<Letter> right;
  std::set<Letter> left;
  std::set<std::pair<Letter, Letter>> both;
};

inline ExtensionSets extensions(const Word& text, const Word& w) {
  ExtensionSets ex;
  for (std::size_t i = 0; i + w.size() <= text.size(); ++i) {
    if (!(text.substr(i, w.size()) == w)) continue;
    bool const has_left = i > 0;
    bool const has_right = i + w.size() < text.size();
    if (has_left) ex.left.insert(text[i - 1]);
    if (has_right) ex.right.insert(text[i + w.size()]);
    if (has_left && has_right) ex.both.insert({text[i - 1], text[i + w.size()]});
  }
  return ex;
}

}  // namespace richlab::oracle
