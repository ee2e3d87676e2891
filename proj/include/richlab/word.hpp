#pragma once

// Alphabets Z_m and finite words over them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace richlab {

/// Raised for every precondition violation and malformed input in the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Letter = std::uint8_t;

/// The cyclic alphabet Z_m = {0, ..., m-1}.
class Alphabet {
 public:
  static constexpr unsigned max_modulus = 256;

  constexpr Alphabet() = default;
  explicit Alphabet(unsigned modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus > max_modulus) {
      throw error("alphabet modulus must lie in [2, 256], got " + std::to_string(modulus));
    }
  }

  [[nodiscard]] constexpr unsigned modulus() const noexcept { return modulus_; }
  [[nodiscard]] constexpr bool contains(unsigned letter) const noexcept { return letter < modulus_; }

  /// (a + d) mod m for any signed offset d.
  [[nodiscard]] constexpr Letter add(unsigned a, long long d) const noexcept {
    long long const m = modulus_;
    long long r = (static_cast<long long>(a) + d) % m;
    if (r < 0) r += m;
    return static_cast<Letter>(r);
  }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned modulus_ = 2;
};

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(alphabet), letters_(std::move(letters)) {
    for (Letter a : letters_) check(a);
  }
  Word(Alphabet alphabet, std::initializer_list<unsigned> letters) : alphabet_(alphabet) {
    letters_.reserve(letters.size());
    for (unsigned a : letters) push_back(a);
  }

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] unsigned modulus() const noexcept { return alphabet_.modulus(); }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  [[nodiscard]] Letter front() const { return letters_.front(); }
  [[nodiscard]] Letter back() const { return letters_.back(); }
  [[nodiscard]] const_iterator begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return letters_.end(); }
  [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
  [[nodiscard]] const std::vector<Letter>& vector() const noexcept { return letters_; }

  void reserve(std::size_t n) { letters_.reserve(n); }
  void push_back(unsigned a) {
    check(a);
    letters_.push_back(static_cast<Letter>(a));
  }
  void append(const Word& other) {
    same_alphabet(other);
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }
  void truncate(std::size_t n) {
    if (n < letters_.size()) letters_.resize(n);
  }

  /// Factor of length len starting at pos; throws when it does not fit.
  [[nodiscard]] Word substr(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw error("factor out of range");
    Word w(alphabet_);
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
  }
  [[nodiscard]] Word prefix(std::size_t len) const { return substr(0, len); }
  [[nodiscard]] Word reversed() const {
    Word w(alphabet_);
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
  }

  [[nodiscard]] bool is_prefix_of(const Word& other) const {
    return size() <= other.size() && std::equal(begin(), end(), other.begin());
  }

  /// Number of occurrences of letter a.
  [[nodiscard]] std::size_t count(unsigned a) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<Letter>(a)));
  }

  /// Sorted set of letters that occur in the word.
  [[nodiscard]] std::vector<Letter> letter_set() const {
    std::vector<bool> seen(modulus(), false);
    for (Letter a : letters_) seen[a] = true;
    std::vector<Letter> out;
    for (unsigned a = 0; a < modulus(); ++a)
      if (seen[a]) out.push_back(static_cast<Letter>(a));
    return out;
  }

  /// Bytes view of the letters, for hashing and exact substring keys.
  [[nodiscard]] std::string_view bytes() const noexcept {
    return {reinterpret_cast<const char*>(letters_.data()), letters_.size()};
  }

  friend Word operator+(Word a, const Word& b) {
    a.append(b);
    return a;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.modulus() <=> b.modulus(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  void check(unsigned a) const {
    if (!alphabet_.contains(a)) {
      throw error("letter " + std::to_string(a) + " outside Z_" + std::to_string(alphabet_.modulus()));
    }
  }
  void same_alphabet(const Word& other) const {
    if (!(other.alphabet_ == alphabet_)) throw error("alphabet mismatch");
  }

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Length first, then lexicographic; the order used for every reported factor set.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline void sort_shortlex(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

/// Digits for m <= 10 ("0110"); dot-separated decimals otherwise ("10.3.11").
inline std::string to_string(const Word& w) {
  std::string out;
  if (w.modulus() <= 10) {
    out.reserve(w.size());
    for (Letter a : w) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(w[i]);
  }
  return out;
}

/// Inverse of to_string. An empty string is the empty word.
inline Word parse_word(std::string_view text, Alphabet alphabet) {
  Word w(alphabet);
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t const dot = std::min(text.find('.', start), text.size());
      std::string_view tok = text.substr(start, dot - start);
      if (tok.empty()) throw error("empty letter in word '" + std::string(text) + "'");
      unsigned v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw error("bad letter in word '" + std::string(text) + "'");
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v >= Alphabet::max_modulus) throw error("letter too large in word '" + std::string(text) + "'");
      }
      w.push_back(v);
      start = dot + 1;
    }
    return w;
  }
  for (char c : text) {
    if (c < '0' || c > '9') throw error("bad letter '" + std::string(1, c) + "' in word");
    w.push_back(static_cast<unsigned>(c - '0'));
  }
  return w;
}

inline Word parse_word(std::string_view text, unsigned modulus) { return parse_word(text, Alphabet(modulus)); }

}  // namespace richlab

template <>
struct std::hash<richlab::Word> {
  std::size_t operator()(const richlab::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.bytes()) ^ (static_cast<std::size_t>(w.modulus()) << 1);
  }
};
