#pragma once

// Lazy descriptions of infinite words and prefix materialization.

#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "richlab/word.hpp"

namespace richlab {

inline constexpr std::size_t default_max_prefix = 10'000'000;

/// Prefix-length cap: RICHLAB_MAX_PREFIX when set to a positive integer, otherwise 10^7.
inline std::size_t max_prefix_from_env() {
  if (const char* env = std::getenv("RICHLAB_MAX_PREFIX")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return default_max_prefix;
}

/// A letter-to-word map with nonempty images.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images) : alphabet_(alphabet), images_(std::move(images)) {
    if (images_.size() != alphabet_.modulus()) {
      throw error("substitution must give an image for each of the " + std::to_string(alphabet_.modulus()) +
                  " letters");
    }
    for (const Word& img : images_) {
      if (img.empty()) throw error("substitution images must be nonempty");
      if (!(img.alphabet() == alphabet_)) throw error("substitution image over a different alphabet");
    }
  }

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Word& image(Letter a) const { return images_.at(a); }
  [[nodiscard]] const std::vector<Word>& images() const noexcept { return images_; }

  [[nodiscard]] Word apply(const Word& w) const {
    Word out(alphabet_);
    for (Letter a : w) out.append(images_.at(a));
    return out;
  }

  [[nodiscard]] bool prolongable_on(Letter a) const {
    const Word& img = images_.at(a);
    return img.size() >= 2 && img[0] == a;
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

/// a -> a (a+1) ... (a+b-1) over Z_m; its fixed point starting with 0 is t_{b,m}.
inline Substitution thue_morse_substitution(unsigned base, unsigned modulus) {
  if (base < 2) throw error("base must be at least 2");
  Alphabet const A(modulus);
  std::vector<Word> images;
  for (unsigned a = 0; a < modulus; ++a) {
    Word img(A);
    for (unsigned k = 0; k < base; ++k) img.push_back(A.add(a, k));
    images.push_back(std::move(img));
  }
  return Substitution(A, std::move(images));
}

/// (a + b*sqrt(d)) / c with c > 0 and d >= 0; floors are computed exactly.
struct QuadraticSurd {
  long long a = 0;
  long long b = 0;
  long long d = 0;
  long long c = 1;

  [[nodiscard]] double approx() const {
    return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(d))) /
           static_cast<double>(c);
  }
  [[nodiscard]] bool rational() const noexcept { return b == 0 || d == 0; }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    if (rational()) {
      os << a << '/' << c;
    } else {
      os << '(' << a << (b < 0 ? "-" : "+") << (b < 0 ? -b : b) << "*sqrt(" << d << "))/" << c;
    }
    return os.str();
  }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// (sqrt(5) - 1) / 2.
inline QuadraticSurd golden_slope() { return {-1, 1, 5, 2}; }

namespace detail {

using i128 = __int128;

inline i128 isqrt128(i128 n) {
  if (n < 0) throw error("isqrt of negative value");
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline i128 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

/// floor((A + B*sqrt(D)) / C) for C > 0.
inline i128 floor_surd(i128 A, i128 B, i128 D, i128 C) {
  i128 floor_root = 0;  // floor(B * sqrt(D))
  if (B != 0 && D != 0) {
    i128 const sq = B * B * D;
    i128 const r = isqrt128(sq);
    if (B > 0) {
      floor_root = r;
    } else {
      floor_root = (r * r == sq) ? -r : -r - 1;
    }
  }
  // A + floor_root is an integer and the dropped fractional part is < 1, so it cannot cross a multiple of C.
  return floor_div(A + floor_root, C);
}

}  // namespace detail

class WordSource;
using SourcePtr = std::shared_ptr<const WordSource>;

namespace source {

struct Morphic {
  Substitution substitution;
  Letter seed;
};
struct DigitSum {
  unsigned base;
  unsigned modulus;
};
struct Mechanical {
  QuadraticSurd slope;
  QuadraticSurd intercept;
};
struct Periodic {
  Word period;
};
struct SImage {
  SourcePtr inner;
};
struct SPreimage {
  SourcePtr inner;
  Letter first;
};
struct Explicit {
  Word word;
};

}  // namespace source

/// Immutable description of an infinite (or, for Explicit, finite) word.
class WordSource {
 public:
  using Node = std::variant<source::Morphic, source::DigitSum, source::Mechanical, source::Periodic, source::SImage,
                            source::SPreimage, source::Explicit>;

  static WordSource morphic(Substitution sub, unsigned seed) {
    if (!sub.alphabet().contains(seed)) throw error("seed letter outside the alphabet");
    if (!sub.prolongable_on(static_cast<Letter>(seed))) {
      throw error("substitution is not prolongable on letter " + std::to_string(seed));
    }
    Alphabet const A = sub.alphabet();
    return WordSource(source::Morphic{std::move(sub), static_cast<Letter>(seed)}, A);
  }
  static WordSource digit_sum(unsigned base, unsigned modulus) {
    if (base < 2) throw error("digit-sum base must be at least 2");
    return WordSource(source::DigitSum{base, modulus}, Alphabet(modulus));
  }
  static WordSource mechanical(QuadraticSurd slope, QuadraticSurd intercept) {
    if (slope.c <= 0 || intercept.c <= 0) throw error("surd denominators must be positive");
    if (slope.d < 0 || intercept.d < 0) throw error("surd radicands must be nonnegative");
    double const s = slope.approx();
    double const r = intercept.approx();
    if (!(s > 0.0 && s < 1.0)) throw error("mechanical slope must lie in (0,1)");
    if (!(r >= 0.0 && r < 1.0)) throw error("mechanical intercept must lie in [0,1)");
    if (!slope.rational() && !intercept.rational() && slope.d != intercept.d) {
      throw error("slope and intercept must share the same radicand");
    }
    return WordSource(source::Mechanical{slope, intercept}, Alphabet(2));
  }
  static WordSource periodic(Word period) {
    if (period.empty()) throw error("periodic source needs a nonempty period");
    Alphabet const A = period.alphabet();
    return WordSource(source::Periodic{std::move(period)}, A);
  }
  static WordSource s_image(WordSource inner) {
    Alphabet const A = inner.alphabet();
    return WordSource(source::SImage{std::make_shared<const WordSource>(std::move(inner))}, A);
  }
  static WordSource s_preimage(WordSource inner, unsigned first) {
    Alphabet const A = inner.alphabet();
    if (!A.contains(first)) throw error("preimage seed letter outside the alphabet");
    return WordSource(source::SPreimage{std::make_shared<const WordSource>(std::move(inner)),
                                        static_cast<Letter>(first)},
                      A);
  }
  static WordSource explicit_word(Word w) {
    Alphabet const A = w.alphabet();
    return WordSource(source::Explicit{std::move(w)}, A);
  }

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Node& node() const noexcept { return node_; }

  /// Number of available letters for finite sources; nullopt for infinite ones.
  [[nodiscard]] std::optional<std::size_t> length_limit() const {
    return std::visit(
        [](const auto& n) -> std::optional<std::size_t> {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, source::Explicit>) {
            return n.word.size();
          } else if constexpr (std::is_same_v<T, source::SImage>) {
            auto lim = n.inner->length_limit();
            if (!lim) return std::nullopt;
            return *lim == 0 ? 0 : *lim - 1;
          } else if constexpr (std::is_same_v<T, source::SPreimage>) {
            auto lim = n.inner->length_limit();
            if (!lim) return std::nullopt;
            return *lim + 1;
          } else {
            return std::nullopt;
          }
        },
        node_);
  }

 private:
  WordSource(Node node, Alphabet alphabet) : node_(std::move(node)), alphabet_(alphabet) {}

  Node node_;
  Alphabet alphabet_;
};

/// Sum of the base-b digits of k.
inline unsigned long long digit_sum(unsigned long long k, unsigned base) {
  if (base < 2) throw error("digit-sum base must be at least 2");
  unsigned long long s = 0;
  while (k) {
    s += k % base;
    k /= base;
  }
  return s;
}

namespace detail {

inline Word materialize(const WordSource& src, std::size_t n);

inline Word materialize_morphic(const source::Morphic& m, std::size_t n) {
  const Substitution& sub = m.substitution;
  Word w(sub.alphabet());
  w.reserve(n + 64);
  if (n == 0) return w;
  w.append(sub.image(m.seed));
  // w[0] = seed is already expanded; every later position expands to at least one letter.
  std::size_t next = 1;
  while (w.size() < n) {
    w.append(sub.image(w[next]));
    ++next;
  }
  w.truncate(n);
  return w;
}

inline Word materialize_digit_sum(const source::DigitSum& d, std::size_t n) {
  Alphabet const A(d.modulus);
  std::vector<Letter> out(n);
  // digits of k kept in a little-endian counter so each increment is amortized O(1)
  std::vector<unsigned> digits;
  unsigned long long sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = static_cast<Letter>(sum % d.modulus);
    std::size_t i = 0;
    while (true) {
      if (i == digits.size()) digits.push_back(0);
      if (digits[i] + 1 < d.base) {
        ++digits[i];
        ++sum;
        break;
      }
      sum -= digits[i];
      digits[i] = 0;
      ++i;
    }
  }
  return Word(A, std::move(out));
}

inline Word materialize_mechanical(const source::Mechanical& mech, std::size_t n) {
  const QuadraticSurd& s = mech.slope;
  const QuadraticSurd& r = mech.intercept;
  i128 const D = !s.rational() ? s.d : (!r.rational() ? r.d : 0);
  i128 const sb = s.rational() ? 0 : s.b;
  i128 const rb = r.rational() ? 0 : r.b;
  // floor(k*s + r) = floor(((k*s.a*r.c + r.a*s.c) + (k*sb*r.c + rb*s.c) sqrt(D)) / (s.c*r.c))
  auto value_floor = [&](i128 k) {
    return floor_surd(k * s.a * r.c + i128(r.a) * s.c, k * sb * r.c + rb * s.c, D, i128(s.c) * r.c);
  };
  std::vector<Letter> out(n);
  i128 prev = value_floor(0);
  for (std::size_t k = 0; k < n; ++k) {
    i128 const cur = value_floor(static_cast<i128>(k) + 1);
    out[k] = static_cast<Letter>(cur - prev);
    prev = cur;
  }
  return Word(Alphabet(2), std::move(out));
}

inline Word materialize(const WordSource& src, std::size_t n) {
  return std::visit(
      [&](const auto& node) -> Word {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, source::Morphic>) {
          return materialize_morphic(node, n);
        } else if constexpr (std::is_same_v<T, source::DigitSum>) {
          return materialize_digit_sum(node, n);
        } else if constexpr (std::is_same_v<T, source::Mechanical>) {
          return materialize_mechanical(node, n);
        } else if constexpr (std::is_same_v<T, source::Periodic>) {
          Word w(node.period.alphabet());
          w.reserve(n);
          for (std::size_t i = 0; i < n; ++i) w.push_back(node.period[i % node.period.size()]);
          return w;
        } else if constexpr (std::is_same_v<T, source::SImage>) {
          Word const u = materialize(*node.inner, n + 1);
          Alphabet const A = u.alphabet();
          Word v(A);
          v.reserve(n);
          for (std::size_t i = 1; i < u.size(); ++i) v.push_back(A.add(u[i - 1], u[i]));
          return v;
        } else if constexpr (std::is_same_v<T, source::SPreimage>) {
          Alphabet const A = src.alphabet();
          Word u(A);
          if (n == 0) return u;
          Word const v = materialize(*node.inner, n - 1);
          u.reserve(n);
          u.push_back(node.first);
          for (std::size_t i = 0; i < v.size(); ++i) u.push_back(A.add(v[i], -static_cast<long long>(u[i])));
          return u;
        } else {
          if (n > node.word.size()) {
            throw error("explicit word has only " + std::to_string(node.word.size()) + " letters, " +
                        std::to_string(n) + " requested");
          }
          return node.word.prefix(n);
        }
      },
      src.node());
}

}  // namespace detail

/// First n letters of the word described by src. Throws when n exceeds the cap.
inline Word prefix(const WordSource& src, std::size_t n, std::size_t max_prefix) {
  if (n > max_prefix) {
    throw error("requested prefix length " + std::to_string(n) + " exceeds the cap " + std::to_string(max_prefix));
  }
  return detail::materialize(src, n);
}

inline Word prefix(const WordSource& src, std::size_t n) { return prefix(src, n, max_prefix_from_env()); }

inline WordSource thue_morse(unsigned base, unsigned modulus) { return WordSource::digit_sum(base, modulus); }

inline WordSource period_doubling_source() {
  Alphabet const A(2);
  return WordSource::morphic(Substitution(A, {Word(A, {1, 1}), Word(A, {1, 0})}), 1);
}

/// Mechanical word with slope (sqrt5-1)/2 and intercept equal to the slope.
inline WordSource sturmian_source() { return WordSource::mechanical(golden_slope(), golden_slope()); }

/// Rational slope p/q with intercept 0; a periodic approximant of a Sturmian word.
inline WordSource sturmian_source(long long p, long long q) {
  return WordSource::mechanical(QuadraticSurd{p, 0, 0, q}, QuadraticSurd{0, 0, 0, 1});
}

/// The S-preimage of the default Sturmian word starting with 0, a complementary-symmetric Rote word.
inline WordSource rote_source() { return WordSource::s_preimage(sturmian_source(), 0); }

inline WordSource iterate_s(WordSource src, unsigned k) {
  for (unsigned i = 0; i < k; ++i) src = WordSource::s_image(std::move(src));
  return src;
}

inline WordSource iterate_s_preimage(WordSource src, unsigned k, unsigned first = 0) {
  for (unsigned i = 0; i < k; ++i) src = WordSource::s_preimage(std::move(src), first);
  return src;
}

}  // namespace richlab
