#pragma once

// Suffix-array index over a materialized prefix: factor counts, occurrences and extensions.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "richlab/word.hpp"

namespace richlab {

inline constexpr std::size_t default_reliability_ratio = 100;

namespace detail {

// Prefix doubling with counting sort, O(N log N).
inline std::vector<std::size_t> suffix_array(std::span<const Letter> s) {
  std::size_t const n = s.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  std::stable_sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  rank[sa[0]] = 0;
  for (std::size_t i = 1; i < n; ++i) rank[sa[i]] = rank[sa[i - 1]] + (s[sa[i]] != s[sa[i - 1]]);
  std::vector<std::size_t> cnt, second(n);
  for (std::size_t k = 1; rank[sa[n - 1]] + 1 < n; k <<= 1) {
    // order by second key: suffixes without a second half come first
    std::size_t p = 0;
    for (std::size_t i = n - k; i < n; ++i) second[p++] = i;
    for (std::size_t i = 0; i < n; ++i)
      if (sa[i] >= k) second[p++] = sa[i] - k;
    cnt.assign(rank[sa[n - 1]] + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i]];
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = n; i-- > 0;) sa[--cnt[rank[second[i]]]] = second[i];
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t const a = sa[i - 1], b = sa[i];
      bool const same = rank[a] == rank[b] && (a + k < n ? rank[a + k] : n) == (b + k < n ? rank[b + k] : n) &&
                        a + k < n && b + k < n;
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    rank.swap(tmp);
  }
  return sa;
}

// Kasai: lcp[i] = lcp(suffix sa[i-1], suffix sa[i]), lcp[0] = 0.
inline std::vector<std::size_t> lcp_array(std::span<const Letter> s, const std::vector<std::size_t>& sa) {
  std::size_t const n = s.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t const j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h) --h;
  }
  return lcp;
}

}  // namespace detail

/// One distinct factor of a fixed length: a run [lo, hi) of the suffix array.
struct FactorGroup {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t first = 0;  // leftmost occurrence
  [[nodiscard]] std::size_t occurrence_count() const noexcept { return hi - lo; }
};

class FactorIndex {
 public:
  /// Queries are allowed for lengths up to n_max.
  FactorIndex(Word w, std::size_t n_max) : word_(std::move(w)), n_max_(n_max) {
    if (n_max_ > word_.size()) {
      throw error("index horizon " + std::to_string(n_max_) + " exceeds the prefix length " +
                  std::to_string(word_.size()));
    }
    sa_ = detail::suffix_array(word_.letters());
    lcp_ = detail::lcp_array(word_.letters(), sa_);
    std::size_t const N = word_.size();
    std::vector<long long> diff(N + 2, 0);
    for (std::size_t i = 0; i < N; ++i) {
      std::size_t const len = N - sa_[i];
      ++diff[lcp_[i] + 1];
      --diff[len + 1];
    }
    counts_.assign(N + 2, 0);
    counts_[0] = 1;
    long long run = 0;
    for (std::size_t n = 1; n <= N + 1; ++n) {
      run += diff[n];
      counts_[n] = static_cast<std::size_t>(run);
    }
  }
  explicit FactorIndex(Word w) : FactorIndex(w, w.size()) {}

  [[nodiscard]] const Word& word() const noexcept { return word_; }
  [[nodiscard]] std::size_t size() const noexcept { return word_.size(); }
  [[nodiscard]] std::size_t n_max() const noexcept { return n_max_; }
  [[nodiscard]] Alphabet alphabet() const noexcept { return word_.alphabet(); }

  /// Lengths n <= N / ratio are treated as reliable.
  [[nodiscard]] std::size_t reliable_horizon(std::size_t ratio = default_reliability_ratio) const noexcept {
    return ratio == 0 ? size() : size() / ratio;
  }

  /// #L_n of the prefix; defined for every n up to |w| + 1.
  [[nodiscard]] std::size_t complexity(std::size_t n) const {
    if (n > size() + 1) throw error("complexity query beyond the prefix length");
    return counts_[n];
  }

  /// Distinct factors of length n, in lexicographic order.
  [[nodiscard]] std::vector<FactorGroup> groups(std::size_t n) const {
    check_length(n);
    std::vector<FactorGroup> out;
    if (n == 0) {
      out.push_back({0, sa_.size(), 0});
      return out;
    }
    std::size_t const N = size();
    for (std::size_t i = 0; i < N; ++i) {
      if (N - sa_[i] < n) continue;
      if (!out.empty() && out.back().hi == i && lcp_[i] >= n) {
        out.back().hi = i + 1;
        out.back().first = std::min(out.back().first, sa_[i]);
      } else {
        out.push_back({i, i + 1, sa_[i]});
      }
    }
    return out;
  }

  [[nodiscard]] Word factor(const FactorGroup& g, std::size_t n) const { return word_.substr(g.first, n); }

  [[nodiscard]] std::vector<Word> factors(std::size_t n) const {
    std::vector<Word> out;
    for (const auto& g : groups(n)) out.push_back(factor(g, n));
    return out;
  }

  /// Occurrences of w in increasing order; empty when w is absent.
  [[nodiscard]] std::vector<std::size_t> occurrences(const Word& w) const {
    auto g = find(w);
    if (!g) return {};
    return occurrences(*g);
  }
  [[nodiscard]] std::vector<std::size_t> occurrences(const FactorGroup& g) const {
    std::vector<std::size_t> out(sa_.begin() + static_cast<std::ptrdiff_t>(g.lo),
                                 sa_.begin() + static_cast<std::ptrdiff_t>(g.hi));
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool contains(const Word& w) const { return find(w).has_value(); }

  /// SA run of suffixes starting with w.
  [[nodiscard]] std::optional<FactorGroup> find(const Word& w) const {
    require_alphabet(w);
    check_length(w.size());
    std::span<const Letter> const s = word_.letters();
    std::size_t const n = w.size();
    auto cmp_prefix = [&](std::size_t pos) {
      // <0 if suffix < w on the first n letters, 0 if w is a prefix of the suffix
      std::size_t const avail = s.size() - pos;
      std::size_t const k = std::min(avail, n);
      for (std::size_t t = 0; t < k; ++t)
        if (s[pos + t] != w[t]) return s[pos + t] < w[t] ? -1 : 1;
      return avail < n ? -1 : 0;
    };
    std::size_t lo = 0, hi = sa_.size();
    while (lo < hi) {
      std::size_t const mid = (lo + hi) / 2;
      if (cmp_prefix(sa_[mid]) < 0) lo = mid + 1;
      else hi = mid;
    }
    std::size_t const begin = lo;
    hi = sa_.size();
    while (lo < hi) {
      std::size_t const mid = (lo + hi) / 2;
      if (cmp_prefix(sa_[mid]) <= 0) lo = mid + 1;
      else hi = mid;
    }
    if (begin == lo) return std::nullopt;
    FactorGroup g{begin, lo, size()};
    for (std::size_t i = begin; i < lo; ++i) g.first = std::min(g.first, sa_[i]);
    return g;
  }

  struct Extensions {
    std::vector<Letter> right;                       // b with wb a factor
    std::vector<Letter> left;                        // a with aw a factor
    std::vector<std::pair<Letter, Letter>> both;     // (a, b) with awb a factor
  };

  /// Extension sets of the length-n factor represented by g.
  [[nodiscard]] Extensions extensions(const FactorGroup& g, std::size_t n) const {
    unsigned const m = alphabet().modulus();
    std::vector<bool> r(m, false), l(m, false), lr(static_cast<std::size_t>(m) * m, false);
    for (std::size_t i = g.lo; i < g.hi; ++i) {
      std::size_t const pos = sa_[i];
      bool const has_r = pos + n < size();
      bool const has_l = pos > 0;
      if (has_r) r[word_[pos + n]] = true;
      if (has_l) l[word_[pos - 1]] = true;
      if (has_r && has_l) lr[static_cast<std::size_t>(word_[pos - 1]) * m + word_[pos + n]] = true;
    }
    Extensions ex;
    for (unsigned a = 0; a < m; ++a) {
      if (r[a]) ex.right.push_back(static_cast<Letter>(a));
      if (l[a]) ex.left.push_back(static_cast<Letter>(a));
      for (unsigned b = 0; b < m; ++b)
        if (lr[static_cast<std::size_t>(a) * m + b]) ex.both.emplace_back(static_cast<Letter>(a), static_cast<Letter>(b));
    }
    return ex;
  }

  /// Extension sets of w; all empty when w is absent.
  [[nodiscard]] Extensions extensions(const Word& w) const {
    auto g = find(w);
    if (!g) return {};
    return extensions(*g, w.size());
  }
  [[nodiscard]] std::vector<Letter> right_extensions(const Word& w) const { return extensions(w).right; }
  [[nodiscard]] std::vector<Letter> left_extensions(const Word& w) const { return extensions(w).left; }
  [[nodiscard]] std::vector<std::pair<Letter, Letter>> two_sided_extensions(const Word& w) const {
    return extensions(w).both;
  }

  [[nodiscard]] const std::vector<std::size_t>& suffix_array() const noexcept { return sa_; }
  [[nodiscard]] const std::vector<std::size_t>& lcp() const noexcept { return lcp_; }

 private:
  void check_length(std::size_t n) const {
    if (n > n_max_) {
      throw error("factor length " + std::to_string(n) + " beyond the index horizon " + std::to_string(n_max_));
    }
  }
  void require_alphabet(const Word& w) const {
    if (!(w.alphabet() == word_.alphabet())) throw error("alphabet mismatch between query and index");
  }

  Word word_;
  std::size_t n_max_;
  std::vector<std::size_t> sa_;
  std::vector<std::size_t> lcp_;
  std::vector<std::size_t> counts_;
};

inline FactorIndex build_index(Word w, std::size_t n_max) { return FactorIndex(std::move(w), n_max); }

}  // namespace richlab
