#pragma once

// The morphisms Pi_x (k -> x+k) and antimorphisms Psi_x (k -> x-k, order reversed) on words over Z_m,
// and finite groups generated by them.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "richlab/word.hpp"

namespace richlab {

enum class SymmetryKind { morphism, antimorphism };

class SymmetryElement {
 public:
  SymmetryElement(SymmetryKind kind, unsigned shift, Alphabet alphabet)
      : kind_(kind), shift_(alphabet.add(shift, 0)), alphabet_(alphabet) {}

  static SymmetryElement pi(unsigned x, Alphabet a) { return {SymmetryKind::morphism, x, a}; }
  static SymmetryElement psi(unsigned x, Alphabet a) { return {SymmetryKind::antimorphism, x, a}; }
  static SymmetryElement identity(Alphabet a) { return pi(0, a); }
  static SymmetryElement pi(unsigned x, unsigned m) { return pi(x, Alphabet(m)); }
  static SymmetryElement psi(unsigned x, unsigned m) { return psi(x, Alphabet(m)); }

  [[nodiscard]] SymmetryKind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_antimorphism() const noexcept { return kind_ == SymmetryKind::antimorphism; }
  [[nodiscard]] bool is_identity() const noexcept { return kind_ == SymmetryKind::morphism && shift_ == 0; }
  [[nodiscard]] Letter shift() const noexcept { return shift_; }
  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }

  /// Image of a single letter.
  [[nodiscard]] Letter operator()(Letter a) const noexcept {
    return is_antimorphism() ? alphabet_.add(shift_, -static_cast<long long>(a)) : alphabet_.add(shift_, a);
  }

  [[nodiscard]] std::string name() const {
    return std::string(is_antimorphism() ? "Psi_" : "Pi_") + std::to_string(shift_);
  }

  friend bool operator==(const SymmetryElement& a, const SymmetryElement& b) {
    return a.kind_ == b.kind_ && a.shift_ == b.shift_ && a.alphabet_ == b.alphabet_;
  }
  friend bool operator<(const SymmetryElement& a, const SymmetryElement& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.shift_ < b.shift_;
  }

 private:
  SymmetryKind kind_;
  Letter shift_;
  Alphabet alphabet_;
};

inline void require_same_alphabet(Alphabet a, Alphabet b) {
  if (!(a == b)) {
    throw error("alphabet mismatch: Z_" + std::to_string(a.modulus()) + " vs Z_" + std::to_string(b.modulus()));
  }
}

inline Word apply(const SymmetryElement& e, const Word& w) {
  require_same_alphabet(e.alphabet(), w.alphabet());
  std::vector<Letter> out(w.size());
  if (e.is_antimorphism()) {
    for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = e(w[i]);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = e(w[i]);
  }
  return Word(w.alphabet(), std::move(out));
}

/// e1 after e2. Pi_x Pi_y = Pi_{x+y}, Pi_x Psi_y = Psi_{x+y}, Psi_x Pi_y = Psi_{x-y}, Psi_x Psi_y = Pi_{x-y}.
inline SymmetryElement compose(const SymmetryElement& e1, const SymmetryElement& e2) {
  require_same_alphabet(e1.alphabet(), e2.alphabet());
  Alphabet const A = e1.alphabet();
  long long const y = e1.is_antimorphism() ? -static_cast<long long>(e2.shift()) : e2.shift();
  SymmetryKind const kind = e1.is_antimorphism() == e2.is_antimorphism() ? SymmetryKind::morphism
                                                                         : SymmetryKind::antimorphism;
  return {kind, A.add(e1.shift(), y), A};
}

/// Inverse element; every Psi_x is an involution and Pi_x^{-1} = Pi_{-x}.
inline SymmetryElement inverse(const SymmetryElement& e) {
  if (e.is_antimorphism()) return e;
  return SymmetryElement::pi(e.alphabet().add(0, -static_cast<long long>(e.shift())), e.alphabet());
}

/// A finite group of Pi/Psi maps containing at least one antimorphism.
class SymmetryGroup {
 public:
  /// Validates the group axioms, and the composition table against the letter formulas.
  SymmetryGroup(Alphabet alphabet, std::vector<SymmetryElement> elements, std::string label = {})
      : alphabet_(alphabet), elements_(std::move(elements)), label_(std::move(label)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    validate();
  }

  /// Closure of a nonempty generator set under composition.
  static SymmetryGroup generate(const std::vector<SymmetryElement>& generators, std::string label = {}) {
    if (generators.empty()) throw error("generate_group needs at least one generator");
    Alphabet const A = generators.front().alphabet();
    std::set<SymmetryElement> members{SymmetryElement::identity(A)};
    for (const auto& g : generators) {
      require_same_alphabet(A, g.alphabet());
      members.insert(g);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<SymmetryElement> const snapshot(members.begin(), members.end());
      for (const auto& a : snapshot)
        for (const auto& b : snapshot)
          if (members.insert(compose(a, b)).second) grew = true;
    }
    return SymmetryGroup(A, std::vector<SymmetryElement>(members.begin(), members.end()), std::move(label));
  }

  /// {id, Psi_0}: classical reversal.
  static SymmetryGroup reversal(Alphabet a) {
    return SymmetryGroup(a, {SymmetryElement::identity(a), SymmetryElement::psi(0, a)}, "R");
  }
  /// {id, E} on {0,1}, E = Psi_1.
  static SymmetryGroup exchange() {
    Alphabet const a(2);
    return SymmetryGroup(a, {SymmetryElement::identity(a), SymmetryElement::psi(1, a)}, "E");
  }
  /// H = {id, R, E, RE} on {0,1}.
  static SymmetryGroup binary_h() {
    Alphabet const a(2);
    return generate({SymmetryElement::psi(0, a), SymmetryElement::psi(1, a)}, "H");
  }
  /// I_2(m): all Pi_x and Psi_x.
  static SymmetryGroup dihedral(unsigned m) {
    Alphabet const a(m);
    std::vector<SymmetryElement> el;
    for (unsigned x = 0; x < m; ++x) {
      el.push_back(SymmetryElement::pi(x, a));
      el.push_back(SymmetryElement::psi(x, a));
    }
    return SymmetryGroup(a, std::move(el), "I2(" + std::to_string(m) + ")");
  }
  /// I_2'(m): generated by the even-shift antimorphisms Psi_{2y}.
  static SymmetryGroup dihedral_even(unsigned m) {
    Alphabet const a(m);
    std::vector<SymmetryElement> gens;
    for (unsigned y = 0; y < m; ++y) gens.push_back(SymmetryElement::psi(a.add(2 * y, 0), a));
    return generate(gens, "I2p(" + std::to_string(m) + ")");
  }

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<SymmetryElement>& elements() const noexcept { return elements_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] std::string description() const {
    std::string s = label_.empty() ? std::string("G") : label_;
    s += " = {";
    for (std::size_t i = 0; i < elements_.size(); ++i) s += (i ? ", " : "") + elements_[i].name();
    return s + "}";
  }

  [[nodiscard]] bool contains(const SymmetryElement& e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
  }

  /// G^(2). Every Psi_x is involutory, so these are all antimorphisms of the group.
  [[nodiscard]] std::vector<SymmetryElement> antimorphisms() const {
    std::vector<SymmetryElement> out;
    for (const auto& e : elements_)
      if (e.is_antimorphism()) out.push_back(e);
    return out;
  }
  [[nodiscard]] std::vector<SymmetryElement> morphisms() const {
    std::vector<SymmetryElement> out;
    for (const auto& e : elements_)
      if (!e.is_antimorphism()) out.push_back(e);
    return out;
  }
  /// Shifts y with Pi_y in the group.
  [[nodiscard]] std::vector<Letter> morphism_shifts() const {
    std::vector<Letter> out;
    for (const auto& e : elements_)
      if (!e.is_antimorphism()) out.push_back(e.shift());
    return out;
  }
  /// The antimorphism Psi_x when present.
  [[nodiscard]] std::optional<SymmetryElement> antimorphism_with_shift(unsigned x) const {
    auto e = SymmetryElement::psi(x, alphabet_);
    if (contains(e)) return e;
    return std::nullopt;
  }

 private:
  void validate() const {
    if (elements_.empty()) throw error("empty symmetry group");
    for (const auto& e : elements_) require_same_alphabet(alphabet_, e.alphabet());
    if (!contains(SymmetryElement::identity(alphabet_))) throw error("symmetry group lacks the identity");
    bool has_anti = false;
    for (const auto& a : elements_) {
      has_anti = has_anti || a.is_antimorphism();
      if (!contains(inverse(a))) throw error("symmetry group not closed under inverses: " + a.name());
      for (const auto& b : elements_) {
        if (!contains(compose(a, b))) {
          throw error("symmetry group not closed: " + a.name() + " o " + b.name());
        }
      }
    }
    if (!has_anti) throw error("symmetry group must contain at least one antimorphism");
    check_composition_table();
  }

  // Machine check of the composition table on length-2 words; exhaustive for m <= 32.
  void check_composition_table() const {
    unsigned const m = alphabet_.modulus();
    std::vector<Word> probes;
    if (m <= 32) {
      for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < m; ++b) probes.push_back(Word(alphabet_, {a, b}));
    } else {
      probes = {Word(alphabet_, {0, 1}), Word(alphabet_, {1, m - 1}), Word(alphabet_, {m / 2, 3})};
    }
    for (const auto& e1 : elements_)
      for (const auto& e2 : elements_) {
        SymmetryElement const c = compose(e1, e2);
        for (const auto& w : probes) {
          if (!(apply(c, w) == apply(e1, apply(e2, w)))) {
            throw error("composition table disagrees with letter formulas for " + e1.name() + " o " + e2.name());
          }
        }
      }
  }

  Alphabet alphabet_;
  std::vector<SymmetryElement> elements_;
  std::string label_;
};

inline SymmetryGroup generate_group(const std::vector<SymmetryElement>& generators) {
  return SymmetryGroup::generate(generators);
}

/// [w] = { mu(w) : mu in G }, sorted.
inline std::vector<Word> orbit(const Word& w, const SymmetryGroup& g) {
  require_same_alphabet(w.alphabet(), g.alphabet());
  std::vector<Word> out;
  out.reserve(g.size());
  for (const auto& e : g.elements()) out.push_back(apply(e, w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Least element of the orbit; equal for two words iff they share an orbit.
inline Word orbit_representative(const Word& w, const SymmetryGroup& g) { return orbit(w, g).front(); }

/// Antimorphisms of G fixing w. For nonempty w at most one Psi_x can fix it (x = w_0 + w_last).
inline std::vector<SymmetryElement> classify_palindrome(const Word& w, const SymmetryGroup& g) {
  require_same_alphabet(w.alphabet(), g.alphabet());
  std::vector<SymmetryElement> out;
  for (const auto& e : g.antimorphisms())
    if (apply(e, w) == w) out.push_back(e);
  return out;
}

/// Psi-palindrome test without materializing the image.
inline bool is_pseudopalindrome(std::span<const Letter> w, const SymmetryElement& psi) {
  std::size_t const n = w.size();
  for (std::size_t i = 0; i < (n + 1) / 2; ++i)
    if (psi(w[n - 1 - i]) != w[i]) return false;
  return true;
}

inline bool is_pseudopalindrome(const Word& w, const SymmetryElement& psi) {
  require_same_alphabet(w.alphabet(), psi.alphabet());
  if (!psi.is_antimorphism()) throw error("palindromicity is defined for antimorphisms only");
  return is_pseudopalindrome(w.letters(), psi);
}

inline bool is_g_palindrome(std::span<const Letter> w, const SymmetryGroup& g) {
  if (w.empty()) return true;
  auto psi = g.antimorphism_with_shift(static_cast<unsigned>(w.front()) + w.back());
  return psi && is_pseudopalindrome(w, *psi);
}

inline bool is_g_palindrome(const Word& w, const SymmetryGroup& g) {
  require_same_alphabet(w.alphabet(), g.alphabet());
  return is_g_palindrome(w.letters(), g);
}

/// Number of pairs {a, Psi(a)} with a occurring in w and Psi(a) != a.
inline std::size_t gamma_psi(const Word& w, const SymmetryElement& psi) {
  if (!psi.is_antimorphism()) throw error("gamma_psi expects an antimorphism, got " + psi.name());
  require_same_alphabet(w.alphabet(), psi.alphabet());
  std::set<std::pair<Letter, Letter>> pairs;
  for (Letter a : w.letter_set()) {
    Letter const b = psi(a);
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  }
  return pairs.size();
}

/// Number of letter orbits [a], a occurring in w, such that no antimorphism of G fixes a.
inline std::size_t gamma_g(const Word& w, const SymmetryGroup& g) {
  require_same_alphabet(w.alphabet(), g.alphabet());
  auto const anti = g.antimorphisms();
  std::set<Letter> orbit_keys;
  for (Letter a : w.letter_set()) {
    bool fixed = std::any_of(anti.begin(), anti.end(), [&](const SymmetryElement& p) { return p(a) == a; });
    if (fixed) continue;
    Letter key = a;
    for (const auto& e : g.elements()) key = std::min(key, e(a));
    orbit_keys.insert(key);
  }
  return orbit_keys.size();
}

/// True iff distinct antimorphisms of G send every letter to distinct images.
inline bool is_one_distinguishing(const SymmetryGroup& g) {
  auto const anti = g.antimorphisms();
  unsigned const m = g.alphabet().modulus();
  for (std::size_t i = 0; i < anti.size(); ++i)
    for (std::size_t j = i + 1; j < anti.size(); ++j)
      for (unsigned a = 0; a < m; ++a)
        if (anti[i](static_cast<Letter>(a)) == anti[j](static_cast<Letter>(a))) return false;
  return true;
}

}  // namespace richlab
