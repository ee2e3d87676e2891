#pragma once

// The difference operator S, its preimages, and the binary pq-structure results.

#include <optional>
#include <string>
#include <vector>

#include "richlab/symmetry.hpp"
#include "richlab/word.hpp"

namespace richlab {

/// v_i = u_{i-1} + u_i (mod m). S(a) is the empty word.
inline Word s_apply(const Word& u) {
  if (u.empty()) throw error("S is undefined on the empty word");
  Alphabet const A = u.alphabet();
  std::vector<Letter> v(u.size() - 1);
  for (std::size_t i = 1; i < u.size(); ++i) v[i - 1] = A.add(u[i - 1], u[i]);
  return Word(A, std::move(v));
}

/// The unique u with u_0 = first and S(u) = v.
inline Word s_preimage(const Word& v, unsigned first) {
  Alphabet const A = v.alphabet();
  if (!A.contains(first)) throw error("preimage seed " + std::to_string(first) + " outside the alphabet");
  std::vector<Letter> u(v.size() + 1);
  u[0] = static_cast<Letter>(first);
  for (std::size_t i = 0; i < v.size(); ++i) u[i + 1] = A.add(v[i], -static_cast<long long>(u[i]));
  return Word(A, std::move(u));
}

/// All m preimages, indexed by their first letter.
inline std::vector<Word> s_preimages_all(const Word& v) {
  std::vector<Word> out;
  for (unsigned a = 0; a < v.modulus(); ++a) out.push_back(s_preimage(v, a));
  return out;
}

/// S Psi_y = Psi_{2y} S on w.
inline bool s_commutation_check(const Word& w, unsigned y) {
  if (w.size() < 2) throw error("commutation check needs |w| >= 2");
  Alphabet const A = w.alphabet();
  auto const psi_y = SymmetryElement::psi(A.add(y, 0), A);
  auto const psi_2y = SymmetryElement::psi(A.add(2 * static_cast<long long>(y), 0), A);
  return s_apply(apply(psi_y, w)) == apply(psi_2y, s_apply(w));
}

enum class CenterClass { e_palindrome, r_even, r_odd, none };

inline std::string to_string(CenterClass c) {
  switch (c) {
    case CenterClass::e_palindrome:
      return "E-palindrome";
    case CenterClass::r_even:
      return "R-even-center-0";
    case CenterClass::r_odd:
      return "R-odd";
    case CenterClass::none:
      return "none";
  }
  return "?";
}

struct CenterReport {
  CenterClass kind = CenterClass::none;
  Word image;
  std::optional<Letter> center;  // central letter of S(u) when |S(u)| is odd
  bool consistent = false;       // S(u) has the shape the class predicts
};

/// Binary only. E-palindromes map to R-palindromes centered at 1, even R-palindromes to R-palindromes
/// centered at 0, odd R-palindromes to even-length R-palindromes, and everything else to non-palindromes.
inline CenterReport palindrome_center_classify(const Word& u) {
  if (u.modulus() != 2) throw error("center classification is defined on the binary alphabet");
  if (u.empty()) throw error("center classification needs a nonempty word");
  Alphabet const A = u.alphabet();
  auto const R = SymmetryElement::psi(0, A);
  auto const E = SymmetryElement::psi(1, A);
  CenterReport rep;
  rep.image = s_apply(u);
  bool const image_pal = is_pseudopalindrome(rep.image, R);
  if (rep.image.size() % 2 == 1) rep.center = rep.image[rep.image.size() / 2];

  if (is_pseudopalindrome(u, E)) {
    rep.kind = CenterClass::e_palindrome;
    rep.consistent = image_pal && rep.center == Letter{1};
  } else if (is_pseudopalindrome(u, R)) {
    rep.kind = u.size() % 2 == 0 ? CenterClass::r_even : CenterClass::r_odd;
    rep.consistent = image_pal && (rep.kind == CenterClass::r_even ? rep.center == Letter{0}
                                                                    : rep.image.size() % 2 == 0);
  } else {
    rep.kind = CenterClass::none;
    rep.consistent = !image_pal;
  }
  return rep;
}

struct PQDecomposition {
  Word c;
  std::size_t i = 0;
  std::size_t j = 0;
};

namespace detail {

inline Word repeat(const Word& w, std::size_t k) {
  Word out(w.alphabet());
  out.reserve(w.size() * k);
  for (std::size_t t = 0; t < k; ++t) out.append(w);
  return out;
}

inline void require_binary(const Word& w, const char* what) {
  if (w.modulus() != 2) throw error(std::string(what) + " is defined on the binary alphabet");
}

}  // namespace detail

/// For R-palindromes p, q with pq an E-palindrome: p = c(E(c)c)^i, q = (E(c)c)^j E(c), shortest c.
inline PQDecomposition decompose_pq(const Word& p, const Word& q) {
  detail::require_binary(p, "decompose_pq");
  require_same_alphabet(p.alphabet(), q.alphabet());
  Alphabet const A = p.alphabet();
  auto const R = SymmetryElement::psi(0, A);
  auto const E = SymmetryElement::psi(1, A);
  if (!is_pseudopalindrome(p, R)) throw error("decompose_pq: p = " + to_string(p) + " is not an R-palindrome");
  if (!is_pseudopalindrome(q, R)) throw error("decompose_pq: q = " + to_string(q) + " is not an R-palindrome");
  if (!is_pseudopalindrome(p + q, E)) {
    throw error("decompose_pq: pq = " + to_string(p + q) + " is not an E-palindrome");
  }
  // A nonempty word cannot be both an R- and an E-palindrome, so p and q are empty together.
  if (p.empty()) return {Word(A), 0, 0};

  for (std::size_t len = 1; len <= std::min(p.size(), q.size()); ++len) {
    if (p.size() % len || q.size() % len) continue;
    std::size_t const kp = p.size() / len;
    std::size_t const kq = q.size() / len;
    if (kp % 2 == 0 || kq % 2 == 0) continue;
    Word const c = p.prefix(len);
    Word const ec = apply(E, c);
    Word const block = ec + c;
    PQDecomposition d{c, kp / 2, kq / 2};
    if (c + detail::repeat(block, d.i) == p && detail::repeat(block, d.j) + ec == q) return d;
  }
  throw error("decompose_pq: no decomposition found for p = " + to_string(p) + ", q = " + to_string(q));
}

struct PeriodicStructure {
  Word c;
  std::size_t power = 0;  // w = (c E(c))^power
  Word p;
  Word q;
};

/// If w = pq with R-palindromes p, q and w an E-palindrome, the shortest c with w = (cE(c))^j.
inline std::optional<PeriodicStructure> periodic_structure_check(const Word& w) {
  detail::require_binary(w, "periodic_structure_check");
  Alphabet const A = w.alphabet();
  auto const R = SymmetryElement::psi(0, A);
  auto const E = SymmetryElement::psi(1, A);
  if (!is_pseudopalindrome(w, E)) return std::nullopt;
  std::optional<PeriodicStructure> best;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    Word const p = w.prefix(k);
    Word const q = w.substr(k, w.size() - k);
    if (!is_pseudopalindrome(p, R) || !is_pseudopalindrome(q, R)) continue;
    PQDecomposition const d = decompose_pq(p, q);
    if (!best || d.c.size() < best->c.size()) {
      best = PeriodicStructure{d.c, d.c.empty() ? 0 : d.i + d.j + 1, p, q};
    }
  }
  return best;
}

}  // namespace richlab
