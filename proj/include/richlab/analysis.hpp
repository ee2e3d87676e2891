#pragma once

// Complexity and palindromic profiles, equality audits, return words and richness verdicts on prefixes.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "richlab/factor_index.hpp"
#include "richlab/palindromes.hpp"
#include "richlab/source.hpp"
#include "richlab/symmetry.hpp"
#include "richlab/transform.hpp"

namespace richlab {

struct ComplexityProfile {
  std::size_t prefix_length = 0;
  std::size_t n_max = 0;
  std::vector<std::size_t> C;   // n = 0..n_max+1
  std::vector<long long> dC;    // n = 0..n_max
};

inline ComplexityProfile complexity(const FactorIndex& idx, std::size_t n_max) {
  if (n_max + 1 > idx.size() + 1) throw error("complexity horizon beyond the prefix");
  ComplexityProfile p;
  p.prefix_length = idx.size();
  p.n_max = n_max;
  for (std::size_t n = 0; n <= n_max + 1; ++n) p.C.push_back(idx.complexity(n));
  for (std::size_t n = 0; n <= n_max; ++n) p.dC.push_back(static_cast<long long>(p.C[n + 1]) - static_cast<long long>(p.C[n]));
  return p;
}

struct SpecialFactors {
  std::vector<Word> right;
  std::vector<Word> left;
  std::vector<Word> bispecial;
};

inline SpecialFactors special_factors(const FactorIndex& idx, std::size_t n) {
  SpecialFactors sf;
  for (const auto& g : idx.groups(n)) {
    auto const ex = idx.extensions(g, n);
    bool const r = ex.right.size() >= 2;
    bool const l = ex.left.size() >= 2;
    if (!r && !l) continue;
    Word const w = idx.factor(g, n);
    if (r) sf.right.push_back(w);
    if (l) sf.left.push_back(w);
    if (r && l) sf.bispecial.push_back(w);
  }
  return sf;
}

namespace detail {

inline void require_factor(const FactorIndex& idx, const Word& w) {
  if (!idx.contains(w)) throw error("word " + to_string(w) + " is not a factor of the indexed prefix");
}

inline void require_guard(const FactorIndex& idx, const Word& w) {
  if (w.size() + 2 > idx.n_max()) {
    throw error("factor " + to_string(w) + " too long for the guard band of an index with horizon " +
                std::to_string(idx.n_max()));
  }
}

}  // namespace detail

/// b(w) = #{awb} - #Rext(w) - #Lext(w) + 1.
inline long long bilateral_order(const FactorIndex& idx, const Word& w) {
  detail::require_guard(idx, w);
  detail::require_factor(idx, w);
  auto const ex = idx.extensions(w);
  return static_cast<long long>(ex.both.size()) - static_cast<long long>(ex.right.size()) -
         static_cast<long long>(ex.left.size()) + 1;
}

/// {a w Psi(a) in L}; reversal by default.
inline std::vector<Word> palindromic_extensions(const FactorIndex& idx, const Word& w,
                                                std::optional<SymmetryElement> psi = std::nullopt) {
  detail::require_factor(idx, w);
  SymmetryElement const mu = psi.value_or(SymmetryElement::psi(0, idx.alphabet()));
  std::vector<Word> out;
  for (auto [a, b] : idx.extensions(w).both) {
    if (mu(a) != b) continue;
    Word x(idx.alphabet(), std::vector<Letter>{a});
    x.append(w);
    x.push_back(b);
    out.push_back(std::move(x));
  }
  sort_shortlex(out);
  return out;
}

struct PalindromeProfile {
  std::size_t prefix_length = 0;
  std::size_t n_max = 0;
  std::vector<SymmetryElement> antimorphisms;
  std::vector<std::vector<std::size_t>> P;  // P[k][n], n = 0..n_max+1
  std::vector<std::size_t> F;               // sum over the antimorphisms
  std::vector<std::size_t> orbits;          // G-palindromic orbits by length
};

inline PalindromeProfile palindrome_profile(const Word& w, const SymmetryGroup& g, std::size_t n_max) {
  require_same_alphabet(w.alphabet(), g.alphabet());
  DefectTracker tr(g);
  tr.push(w);
  PalindromeProfile p;
  p.prefix_length = w.size();
  p.n_max = n_max;
  p.antimorphisms = g.antimorphisms();
  p.F.assign(n_max + 2, 0);
  for (const auto& tree : tr.trees()) {
    p.P.push_back(count_by_length(tree, n_max + 1));
    for (std::size_t n = 0; n <= n_max + 1; ++n) p.F[n] += p.P.back()[n];
  }
  p.orbits = tr.orbits_by_length(n_max + 1);
  p.orbits[0] = 1;
  return p;
}

/// Counts for one antimorphism of the profile, looked up by shift.
inline const std::vector<std::size_t>& profile_counts(const PalindromeProfile& p, const SymmetryElement& psi) {
  for (std::size_t k = 0; k < p.antimorphisms.size(); ++k)
    if (p.antimorphisms[k] == psi) return p.P[k];
  throw error("antimorphism " + psi.name() + " is not part of the profile");
}

struct ClosureReport {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t closed = 0;
  [[nodiscard]] double fraction() const noexcept { return total ? static_cast<double>(closed) / total : 1.0; }
  [[nodiscard]] bool complete() const noexcept { return closed == total; }
};

/// Share of length-n factors whose whole orbit occurs in the prefix.
inline ClosureReport closure_check(const FactorIndex& idx, const SymmetryGroup& g, std::size_t n) {
  require_same_alphabet(idx.alphabet(), g.alphabet());
  ClosureReport rep;
  rep.n = n;
  for (const auto& f : idx.factors(n)) {
    ++rep.total;
    bool ok = true;
    for (const auto& e : g.elements()) {
      if (e.is_identity()) continue;
      if (!idx.contains(apply(e, f))) {
        ok = false;
        break;
      }
    }
    rep.closed += ok;
  }
  return rep;
}

struct EqualityAudit {
  std::string group;
  std::size_t group_order = 0;
  std::size_t prefix_length = 0;
  std::size_t n_max = 0;
  ClosureReport closure;           // at length n_max + 1
  std::vector<long long> slack;    // index n = 1..n_max, slack[0] unused
  std::vector<long long> dC;
  std::vector<std::size_t> F;      // sum of P^Psi over the antimorphisms

  [[nodiscard]] std::optional<std::size_t> first_positive() const {
    for (std::size_t n = 1; n < slack.size(); ++n)
      if (slack[n] > 0) return n;
    return std::nullopt;
  }
  [[nodiscard]] bool zero_on(std::size_t from, std::size_t to) const {
    if (to >= slack.size() || from == 0) throw error("slack range outside the audited horizon");
    for (std::size_t n = from; n <= to; ++n)
      if (slack[n] != 0) return false;
    return true;
  }
  [[nodiscard]] bool nonnegative() const {
    return std::all_of(slack.begin() + 1, slack.end(), [](long long s) { return s >= 0; });
  }
};

/// slack(n) = dC(n) + #G - sum over antimorphisms of (P(n) + P(n+1)), n = 1..n_max.
inline EqualityAudit equality_audit(const FactorIndex& idx, const SymmetryGroup& g, std::size_t n_max) {
  if (!is_one_distinguishing(g)) throw error("equality audit needs a group in which 1 is distinguishing");
  if (n_max + 1 > idx.n_max()) {
    throw error("audit horizon " + std::to_string(n_max) + " too large for index horizon " +
                std::to_string(idx.n_max()));
  }
  EqualityAudit a;
  a.group = g.description();
  a.group_order = g.size();
  a.prefix_length = idx.size();
  a.n_max = n_max;
  a.closure = closure_check(idx, g, n_max + 1);
  auto const cp = complexity(idx, n_max);
  auto const pp = palindrome_profile(idx.word(), g, n_max);
  a.dC = cp.dC;
  a.F = pp.F;
  a.slack.assign(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    a.slack[n] = cp.dC[n] + static_cast<long long>(g.size()) - static_cast<long long>(pp.F[n] + pp.F[n + 1]);
  }
  return a;
}

inline std::size_t default_index_horizon(std::size_t prefix_length, std::size_t n_max) {
  return std::min(prefix_length, n_max + 1);
}

inline EqualityAudit equality_audit(const WordSource& src, const SymmetryGroup& g, std::size_t n_max,
                                    std::size_t prefix_length) {
  FactorIndex const idx(prefix(src, prefix_length), default_index_horizon(prefix_length, n_max));
  return equality_audit(idx, g, n_max);
}

/// T(n) = dC(n) + 2 - P^R(n+1) - P^R(n), n = 1..n_max.
inline std::vector<long long> t_series(const FactorIndex& idx, std::size_t n_max) {
  auto const R = SymmetryGroup::reversal(idx.alphabet());
  auto const cp = complexity(idx, n_max);
  auto const pp = palindrome_profile(idx.word(), R, n_max);
  std::vector<long long> T(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    T[n] = cp.dC[n] + 2 - static_cast<long long>(pp.P[0][n + 1] + pp.P[0][n]);
  }
  return T;
}

struct DefectProfile {
  std::vector<std::size_t> schedule;
  std::vector<std::size_t> values;
  [[nodiscard]] std::size_t lower_bound() const { return values.empty() ? 0 : values.back(); }
  /// Value unchanged over the last half of the schedule.
  [[nodiscard]] bool stabilized() const {
    if (values.empty()) return false;
    for (std::size_t i = values.size() / 2; i < values.size(); ++i)
      if (values[i] != values.back()) return false;
    return true;
  }
  [[nodiscard]] bool nondecreasing() const { return std::is_sorted(values.begin(), values.end()); }
};

/// D^G of the prefixes listed in an increasing schedule.
inline DefectProfile defect_profile(const WordSource& src, const SymmetryGroup& g,
                                    const std::vector<std::size_t>& schedule) {
  if (!std::is_sorted(schedule.begin(), schedule.end()) ||
      std::adjacent_find(schedule.begin(), schedule.end()) != schedule.end()) {
    throw error("defect schedule must be strictly increasing");
  }
  DefectProfile prof;
  prof.schedule = schedule;
  if (schedule.empty()) return prof;
  Word const w = prefix(src, schedule.back());
  DefectTracker tr(g);
  std::size_t next = 0;
  if (schedule[0] == 0) {
    prof.values.push_back(0);
    next = 1;
  }
  for (std::size_t i = 0; i < w.size() && next < schedule.size(); ++i) {
    tr.push(w[i]);
    if (i + 1 == schedule[next]) {
      prof.values.push_back(tr.defect());
      ++next;
    }
  }
  return prof;
}

/// Doubling schedule 16, 32, ... capped at horizon (horizon always included).
inline std::vector<std::size_t> doubling_schedule(std::size_t horizon) {
  std::vector<std::size_t> s;
  for (std::size_t n = 16; n < horizon; n *= 2) s.push_back(n);
  s.push_back(horizon);
  return s;
}

struct BRIdentity {
  std::size_t prefix_length = 0;
  std::size_t n_max = 0;
  std::size_t defect = 0;      // D^R of the prefix
  long long sum_t = 0;         // sum of T(n), n = 1..n_max
  bool closed = false;         // reversal closure at n_max + 1
  [[nodiscard]] bool agree() const noexcept { return 2 * static_cast<long long>(defect) == sum_t; }
};

inline BRIdentity br_identity_check(const WordSource& src, std::size_t prefix_length, std::size_t n_max) {
  Word const w = prefix(src, prefix_length);
  FactorIndex const idx(w, default_index_horizon(prefix_length, n_max));
  BRIdentity r;
  r.prefix_length = prefix_length;
  r.n_max = n_max;
  auto const R = SymmetryGroup::reversal(w.alphabet());
  r.defect = defect(w, R);
  for (long long t : t_series(idx, n_max)) r.sum_t += t;
  r.closed = closure_check(idx, R, n_max + 1).complete();
  return r;
}

struct BispecialEntry {
  Word w;
  long long bilateral = 0;
  std::size_t pext = 0;
  bool palindrome = false;
  bool conforming = false;
};

/// Every bispecial factor up to length cap against the bilateral-order criterion for reversal.
inline std::vector<BispecialEntry> bispecial_audit(const FactorIndex& idx, std::size_t cap) {
  if (cap + 2 > idx.n_max()) throw error("bispecial cap too large for the guard band");
  auto const R = SymmetryElement::psi(0, idx.alphabet());
  std::vector<BispecialEntry> out;
  for (std::size_t n = 0; n <= cap; ++n) {
    for (const auto& w : special_factors(idx, n).bispecial) {
      BispecialEntry e;
      e.w = w;
      e.bilateral = bilateral_order(idx, w);
      e.palindrome = is_pseudopalindrome(w, R);
      e.pext = e.palindrome ? palindromic_extensions(idx, w).size() : 0;
      long long const expected = e.palindrome ? static_cast<long long>(e.pext) - 1 : 0;
      e.conforming = e.bilateral == expected;
      out.push_back(std::move(e));
    }
  }
  return out;
}

struct ReturnWords {
  std::vector<Word> words;
  std::size_t occurrences = 0;  // occurrences of orbit elements in the prefix
  bool partial = false;         // fewer than two occurrences observed
};

namespace detail {

// Sorted start positions of every element of [w].
inline std::vector<std::size_t> orbit_occurrences(const FactorIndex& idx, const Word& w, const SymmetryGroup& g) {
  std::vector<std::size_t> occ;
  for (const auto& x : orbit(w, g)) {
    auto o = idx.occurrences(x);
    occ.insert(occ.end(), o.begin(), o.end());
  }
  std::sort(occ.begin(), occ.end());
  return occ;
}

}  // namespace detail

/// Factors starting and ending with elements of [w] and containing no others.
inline ReturnWords complete_g_return_words(const FactorIndex& idx, const Word& w, const SymmetryGroup& g) {
  require_same_alphabet(idx.alphabet(), g.alphabet());
  detail::require_factor(idx, w);
  auto const occ = detail::orbit_occurrences(idx, w, g);
  ReturnWords rw;
  rw.occurrences = occ.size();
  rw.partial = occ.size() < 2;
  std::string_view const text = idx.word().bytes();
  std::unordered_set<std::string_view> seen;
  for (std::size_t k = 1; k < occ.size(); ++k) {
    auto const v = text.substr(occ[k - 1], occ[k] - occ[k - 1] + w.size());
    if (seen.insert(v).second) {
      rw.words.emplace_back(idx.alphabet(), std::vector<Letter>(v.begin(), v.end()));
    }
  }
  sort_shortlex(rw.words);
  return rw;
}

struct ReturnWordViolation {
  Word w;
  Word return_word;
};

struct ReturnWordAudit {
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::size_t orbits_checked = 0;
  std::size_t return_words_checked = 0;
  std::size_t partial_orbits = 0;
  std::vector<ReturnWordViolation> violations;
};

/// Tests every complete G-return word of every G-palindromic orbit (or every orbit) in the length window.
inline ReturnWordAudit return_word_audit(const FactorIndex& idx, const SymmetryGroup& g, std::size_t min_length,
                                         std::size_t max_length, bool palindromes_only = true) {
  require_same_alphabet(idx.alphabet(), g.alphabet());
  ReturnWordAudit a;
  a.min_length = min_length;
  a.max_length = max_length;
  std::string_view const text = idx.word().bytes();
  auto const letters = idx.word().letters();
  for (std::size_t n = std::max<std::size_t>(min_length, 1); n <= max_length; ++n) {
    std::set<Word> done;
    for (const auto& f : idx.factors(n)) {
      if (palindromes_only && !is_g_palindrome(f, g)) continue;
      Word const rep = orbit_representative(f, g);
      if (!done.insert(rep).second) continue;
      ++a.orbits_checked;
      auto const occ = detail::orbit_occurrences(idx, f, g);
      if (occ.size() < 2) ++a.partial_orbits;
      std::unordered_set<std::string_view> seen;
      for (std::size_t k = 1; k < occ.size(); ++k) {
        std::size_t const len = occ[k] - occ[k - 1] + n;
        auto const v = text.substr(occ[k - 1], len);
        if (!seen.insert(v).second) continue;
        ++a.return_words_checked;
        if (!is_g_palindrome(letters.subspan(occ[k - 1], len), g)) {
          a.violations.push_back({f, Word(idx.alphabet(), std::vector<Letter>(v.begin(), v.end()))});
        }
      }
    }
  }
  return a;
}

struct Welldoc {
  std::set<std::pair<int, int>> residues;
  std::size_t occurrences_seen = 0;
  [[nodiscard]] bool confirmed() const noexcept { return residues.size() == 4; }
};

/// Residues of (|v|_0, |v|_1) mod 2 over prefixes v followed by an occurrence of w; at most budget occurrences.
inline Welldoc welldoc2(const Word& text, const Word& w, std::size_t budget) {
  if (text.modulus() != 2 || w.modulus() != 2) throw error("WELLDOC(2) is defined on the binary alphabet");
  Welldoc r;
  int c0 = 0, c1 = 0;
  std::string_view const hay = text.bytes();
  std::string_view const needle = w.bytes();
  for (std::size_t i = 0; i + w.size() <= text.size() && r.occurrences_seen < budget; ++i) {
    if (hay.compare(i, needle.size(), needle) == 0) {
      r.residues.insert({c0, c1});
      ++r.occurrences_seen;
    }
    if (text[i] == 0) c0 ^= 1;
    else c1 ^= 1;
  }
  return r;
}

inline Welldoc welldoc2(const WordSource& src, const Word& w, std::size_t budget, std::size_t prefix_length) {
  return welldoc2(prefix(src, prefix_length), w, budget);
}

struct RecurrenceGap {
  Word w;
  std::size_t occurrences = 0;
  std::size_t max_gap = 0;  // 0 when w occurs once
};

inline std::vector<RecurrenceGap> recurrence_gaps(const FactorIndex& idx, std::size_t n) {
  std::vector<RecurrenceGap> out;
  for (const auto& g : idx.groups(n)) {
    auto const occ = idx.occurrences(g);
    RecurrenceGap r{idx.factor(g, n), occ.size(), 0};
    for (std::size_t k = 1; k < occ.size(); ++k) r.max_gap = std::max(r.max_gap, occ[k] - occ[k - 1]);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::size_t max_recurrence_gap(const FactorIndex& idx, std::size_t n) {
  std::size_t best = 0;
  for (const auto& r : recurrence_gaps(idx, n)) best = std::max(best, r.max_gap);
  return best;
}

enum class RichnessStatus { rich_up_to, defect_lower_bound, inconclusive };

inline std::string to_string(RichnessStatus s) {
  switch (s) {
    case RichnessStatus::rich_up_to:
      return "rich-up-to-N";
    case RichnessStatus::defect_lower_bound:
      return "defect-lower-bound";
    case RichnessStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct RichnessVerdict {
  RichnessStatus status = RichnessStatus::inconclusive;
  std::size_t horizon = 0;
  std::size_t defect = 0;  // D^G of the prefix of length horizon, a lower bound on D^G(u)
  bool closed = false;
  std::optional<std::size_t> first_positive_slack;
  std::size_t audit_horizon = 0;
  std::vector<Word> witnesses;  // least defective factor of minimal length, then the shortest prefix reaching defect
};

namespace detail {

// Lexicographically least factor of minimal length with positive defect; prefix_hint is a defective prefix length.
inline Word minimal_defective_factor(const Word& w, const SymmetryGroup& g, std::size_t prefix_hint) {
  std::size_t best = prefix_hint;
  std::vector<Word> cands{w.prefix(prefix_hint)};
  for (std::size_t s = 1; s + 1 <= w.size(); ++s) {
    DefectTracker tr(g);
    for (std::size_t len = 1; len <= best && s + len <= w.size(); ++len) {
      tr.push(w[s + len - 1]);
      if (tr.defect() > 0) {
        if (len < best) {
          best = len;
          cands.clear();
        }
        cands.push_back(w.substr(s, len));
        break;
      }
    }
  }
  return *std::min_element(cands.begin(), cands.end());
}

}  // namespace detail

inline RichnessVerdict richness_verdict(const WordSource& src, const SymmetryGroup& g, std::size_t horizon,
                                        std::size_t ratio = default_reliability_ratio) {
  require_same_alphabet(src.alphabet(), g.alphabet());
  Word const w = prefix(src, horizon);
  RichnessVerdict v;
  v.horizon = horizon;
  DefectTracker tr(g);
  std::vector<std::size_t> prefix_defect;
  prefix_defect.reserve(w.size());
  for (Letter a : w) {
    tr.push(a);
    prefix_defect.push_back(tr.defect());
  }
  v.defect = tr.defect();
  std::size_t const n_audit = horizon / std::max<std::size_t>(ratio, 1);
  v.audit_horizon = n_audit;
  if (n_audit >= 1 && is_one_distinguishing(g)) {
    FactorIndex const idx(w, default_index_horizon(horizon, n_audit));
    auto const audit = equality_audit(idx, g, n_audit);
    v.closed = audit.closure.complete();
    v.first_positive_slack = audit.first_positive();
  } else if (n_audit >= 1) {
    FactorIndex const idx(w, std::min(horizon, n_audit + 1));
    v.closed = closure_check(idx, g, n_audit + 1).complete();
  }
  if (v.defect == 0) {
    v.status = v.closed ? RichnessStatus::rich_up_to : RichnessStatus::inconclusive;
    return v;
  }
  v.status = RichnessStatus::defect_lower_bound;
  auto const first_bad = static_cast<std::size_t>(
      std::find_if(prefix_defect.begin(), prefix_defect.end(), [](std::size_t d) { return d > 0; }) -
      prefix_defect.begin());
  v.witnesses.push_back(detail::minimal_defective_factor(w, g, first_bad + 1));
  auto const reach = static_cast<std::size_t>(
      std::find(prefix_defect.begin(), prefix_defect.end(), v.defect) - prefix_defect.begin());
  v.witnesses.push_back(w.prefix(reach + 1));
  return v;
}

struct TransferCheck {
  std::size_t n_max = 0;
  std::vector<std::size_t> complexity_failures;  // n with 2 dC_v(n) != dC_u(n+1)
  std::vector<std::size_t> palindrome_failures;  // n with 2 P^R_v(n) != P^R_u(n+1) + P^E_u(n+1)
  [[nodiscard]] bool ok() const noexcept { return complexity_failures.empty() && palindrome_failures.empty(); }
};

/// Binary profile transfer from u to v = S(u), checked for n = 1..n_max on the given prefix of u.
inline TransferCheck s_transfer_check(const Word& u, std::size_t n_max) {
  if (u.modulus() != 2) throw error("profile transfer is stated for binary words");
  Word const v = s_apply(u);
  FactorIndex const iu(u, default_index_horizon(u.size(), n_max + 1));
  FactorIndex const iv(v, default_index_horizon(v.size(), n_max));
  auto const cu = complexity(iu, n_max + 1);
  auto const cv = complexity(iv, n_max);
  auto const pu = palindrome_profile(u, SymmetryGroup::binary_h(), n_max + 1);
  auto const pv = palindrome_profile(v, SymmetryGroup::reversal(v.alphabet()), n_max);
  auto const& pur = profile_counts(pu, SymmetryElement::psi(0, 2));
  auto const& pue = profile_counts(pu, SymmetryElement::psi(1, 2));
  TransferCheck t;
  t.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (2 * cv.dC[n] != cu.dC[n + 1]) t.complexity_failures.push_back(n);
    if (2 * pv.P[0][n] != pur[n + 1] + pue[n + 1]) t.palindrome_failures.push_back(n);
  }
  return t;
}

/// Right-special factors of S(u) of length n against the two preimage cases, on the prefix u.
inline bool right_special_transfer_check(const Word& u, std::size_t n) {
  if (u.modulus() != 2) throw error("right-special transfer is stated for binary words");
  Word const v = s_apply(u);
  FactorIndex const iu(u, std::min(u.size(), n + 2));
  FactorIndex const iv(v, std::min(v.size(), n + 1));
  std::set<Word> direct;
  for (const auto& w : special_factors(iv, n).right) direct.insert(w);
  auto const er = SymmetryElement::pi(1, u.alphabet());
  std::set<Word> predicted;
  for (const auto& x : iu.factors(n + 1)) {
    Word const y = apply(er, x);
    auto const rx = iu.right_extensions(x);
    auto const ry = iu.contains(y) ? iu.right_extensions(y) : std::vector<Letter>{};
    // (a) a preimage is right special; (b) both preimages occur, each with the same single extension
    bool const a = rx.size() >= 2 || ry.size() >= 2;
    bool const b = rx.size() == 1 && ry.size() == 1 && rx[0] == ry[0];
    if (a || b) predicted.insert(s_apply(x));
  }
  return direct == predicted;
}

}  // namespace richlab
