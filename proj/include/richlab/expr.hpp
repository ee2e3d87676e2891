#pragma once

// Text forms of word sources and symmetry groups.
//
//   expr  := tm(B,M) | pd | sturmian([P/Q]) | rote([P/Q]) | fix(RULES;L) | periodic(W) | S(expr)
//          | Sinv(expr,L) | word(W)
//   RULES := L->W {,L->W}
//   group := R | E | H | I2(M) | I2p(M) | gen(psi:X|pi:X {,psi:X|pi:X})
//
// A word W is one digit per letter, or dot-separated decimals. periodic, word and fix infer the
// modulus from their letters; appending ";M" (e.g. periodic(13;4)) fixes it explicitly.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "richlab/source.hpp"
#include "richlab/symmetry.hpp"

namespace richlab {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  long long integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') neg = true, ++pos_;
    std::size_t const start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000'000LL) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return neg ? -v : v;
  }
  /// Digits and dots, as raw text.
  std::string_view word_token() {
    skip_space();
    std::size_t const start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("expected a word");
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw error("parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::vector<unsigned> raw_letters(std::string_view tok) {
  // parse against the largest alphabet, the modulus is settled afterwards
  Word const w = parse_word(tok, Alphabet(Alphabet::max_modulus));
  return {w.begin(), w.end()};
}

inline unsigned max_letter_plus_one(const std::vector<unsigned>& letters) {
  unsigned m = 2;
  for (unsigned a : letters) m = std::max(m, a + 1);
  return m;
}

inline Word make_word(const std::vector<unsigned>& letters, unsigned m) {
  Alphabet const A(m);
  Word w(A);
  for (unsigned a : letters) w.push_back(a);
  return w;
}

inline unsigned optional_modulus(Cursor& c, unsigned inferred) {
  if (!c.eat(";")) return inferred;
  long long const m = c.integer();
  if (m < static_cast<long long>(inferred)) c.fail("modulus smaller than a letter in use");
  if (m > Alphabet::max_modulus) c.fail("modulus too large");
  return static_cast<unsigned>(m);
}

inline WordSource parse_sturmian_args(Cursor& c) {
  c.expect("(");
  if (c.eat(")")) return sturmian_source();
  long long const p = c.integer();
  c.expect("/");
  long long const q = c.integer();
  c.expect(")");
  if (q <= 0 || p <= 0 || p >= q) c.fail("slope p/q must satisfy 0 < p < q");
  return sturmian_source(p, q);
}

inline WordSource parse_source(Cursor& c) {
  if (c.eat("tm")) {
    c.expect("(");
    long long const b = c.integer();
    c.expect(",");
    long long const m = c.integer();
    c.expect(")");
    if (b < 2 || m < 2 || m > Alphabet::max_modulus) c.fail("tm(b,m) needs b >= 2 and 2 <= m <= 256");
    return thue_morse(static_cast<unsigned>(b), static_cast<unsigned>(m));
  }
  if (c.eat("pd")) return period_doubling_source();
  if (c.eat("sturmian")) return parse_sturmian_args(c);
  if (c.eat("rote")) return WordSource::s_preimage(parse_sturmian_args(c), 0);
  if (c.eat("fix")) {
    c.expect("(");
    std::vector<std::pair<unsigned, std::vector<unsigned>>> rules;
    unsigned m = 2;
    do {
      long long const a = c.integer();
      if (a < 0 || a >= Alphabet::max_modulus) c.fail("rule letter out of range");
      c.expect("->");
      auto img = raw_letters(c.word_token());
      m = std::max({m, static_cast<unsigned>(a) + 1, max_letter_plus_one(img)});
      rules.emplace_back(static_cast<unsigned>(a), std::move(img));
    } while (c.eat(","));
    c.expect(";");
    long long const seed = c.integer();
    m = std::max<unsigned>(m, static_cast<unsigned>(rules.size()));
    m = optional_modulus(c, m);
    c.expect(")");
    if (rules.size() != m) c.fail("fix needs exactly one rule per letter of Z_" + std::to_string(m));
    std::vector<Word> images(m, Word(Alphabet(m)));
    std::vector<bool> seen(m, false);
    for (auto& [a, img] : rules) {
      if (seen[a]) c.fail("duplicate rule for letter " + std::to_string(a));
      seen[a] = true;
      images[a] = make_word(img, m);
    }
    if (seed < 0 || seed >= static_cast<long long>(m)) c.fail("seed letter out of range");
    return WordSource::morphic(Substitution(Alphabet(m), std::move(images)), static_cast<unsigned>(seed));
  }
  if (c.eat("periodic")) {
    c.expect("(");
    auto letters = raw_letters(c.word_token());
    unsigned const m = optional_modulus(c, max_letter_plus_one(letters));
    c.expect(")");
    return WordSource::periodic(make_word(letters, m));
  }
  if (c.eat("word")) {
    c.expect("(");
    std::vector<unsigned> letters;
    if (!c.peek(')') && !c.peek(';')) letters = raw_letters(c.word_token());
    unsigned const m = optional_modulus(c, max_letter_plus_one(letters));
    c.expect(")");
    return WordSource::explicit_word(make_word(letters, m));
  }
  if (c.eat("Sinv")) {
    c.expect("(");
    WordSource inner = parse_source(c);
    c.expect(",");
    long long const first = c.integer();
    c.expect(")");
    if (first < 0 || first >= static_cast<long long>(inner.alphabet().modulus())) c.fail("seed letter out of range");
    return WordSource::s_preimage(std::move(inner), static_cast<unsigned>(first));
  }
  if (c.eat("S")) {
    c.expect("(");
    WordSource inner = parse_source(c);
    c.expect(")");
    return WordSource::s_image(std::move(inner));
  }
  c.fail("unknown word expression");
}

}  // namespace detail

inline WordSource parse_source(std::string_view text) {
  detail::Cursor c(text);
  WordSource src = detail::parse_source(c);
  if (!c.at_end()) c.fail("trailing input");
  return src;
}

/// Canonical expression for a source; parse_source(describe(s)) describes the same word.
inline std::string describe(const WordSource& src) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, source::Morphic>) {
          std::string s = "fix(";
          unsigned const m = n.substitution.alphabet().modulus();
          for (unsigned a = 0; a < m; ++a) {
            if (a) s += ",";
            s += std::to_string(a) + "->" + to_string(n.substitution.image(static_cast<Letter>(a)));
          }
          s += ";" + std::to_string(n.seed);
          if (m <= 10 && m > 2) s += ";" + std::to_string(m);
          return s + ")";
        } else if constexpr (std::is_same_v<T, source::DigitSum>) {
          return "tm(" + std::to_string(n.base) + "," + std::to_string(n.modulus) + ")";
        } else if constexpr (std::is_same_v<T, source::Mechanical>) {
          if (n.slope.rational() && n.intercept.rational() && n.intercept.a == 0) {
            return "sturmian(" + std::to_string(n.slope.a) + "/" + std::to_string(n.slope.c) + ")";
          }
          if (n.slope == golden_slope() && n.intercept == golden_slope()) return "sturmian()";
          return "mechanical(" + n.slope.str() + "," + n.intercept.str() + ")";
        } else if constexpr (std::is_same_v<T, source::Periodic>) {
          return "periodic(" + to_string(n.period) + ";" + std::to_string(n.period.modulus()) + ")";
        } else if constexpr (std::is_same_v<T, source::SImage>) {
          return "S(" + describe(*n.inner) + ")";
        } else if constexpr (std::is_same_v<T, source::SPreimage>) {
          return "Sinv(" + describe(*n.inner) + "," + std::to_string(n.first) + ")";
        } else {
          return "word(" + to_string(n.word) + ";" + std::to_string(n.word.modulus()) + ")";
        }
      },
      src.node());
}

/// Group expression over the given alphabet.
inline SymmetryGroup parse_group(std::string_view text, Alphabet alphabet) {
  detail::Cursor c(text);
  unsigned const m = alphabet.modulus();
  auto finish = [&](SymmetryGroup g) {
    if (!c.at_end()) c.fail("trailing input");
    return g;
  };
  auto modulus_arg = [&]() {
    c.expect("(");
    long long const k = c.integer();
    c.expect(")");
    if (k != static_cast<long long>(m)) {
      c.fail("group modulus " + std::to_string(k) + " differs from the word alphabet Z_" + std::to_string(m));
    }
  };
  if (c.eat("I2p")) {
    modulus_arg();
    return finish(SymmetryGroup::dihedral_even(m));
  }
  if (c.eat("I2")) {
    modulus_arg();
    return finish(SymmetryGroup::dihedral(m));
  }
  if (c.eat("gen")) {
    c.expect("(");
    std::vector<SymmetryElement> gens;
    std::string label = "gen(";
    do {
      bool anti;
      if (c.eat("psi")) anti = true;
      else if (c.eat("pi")) anti = false;
      else c.fail("expected psi or pi");
      c.expect(":");
      long long const x = c.integer();
      if (x < 0 || x >= static_cast<long long>(m)) c.fail("shift out of range");
      gens.push_back(anti ? SymmetryElement::psi(static_cast<unsigned>(x), alphabet)
                          : SymmetryElement::pi(static_cast<unsigned>(x), alphabet));
      label += (gens.size() > 1 ? "," : "") + std::string(anti ? "psi:" : "pi:") + std::to_string(x);
    } while (c.eat(","));
    c.expect(")");
    return finish(SymmetryGroup::generate(gens, label + ")"));
  }
  if (c.eat("R")) return finish(SymmetryGroup::reversal(alphabet));
  if (c.eat("E")) {
    if (m != 2) c.fail("E is defined on the binary alphabet");
    return finish(SymmetryGroup::exchange());
  }
  if (c.eat("H")) {
    if (m != 2) c.fail("H is defined on the binary alphabet");
    return finish(SymmetryGroup::binary_h());
  }
  c.fail("unknown group expression");
}

inline SymmetryGroup parse_group(std::string_view text, unsigned modulus) { return parse_group(text, Alphabet(modulus)); }

}  // namespace richlab
