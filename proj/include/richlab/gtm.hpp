#pragma once

// Closed forms for the generalized Thue-Morse words t_{b,m} and their S-images.

#include <array>
#include <numeric>
#include <set>
#include <string>

#include "richlab/factor_index.hpp"
#include "richlab/word.hpp"

namespace richlab {

/// Order of k -> k + b - 1 on Z_m.
inline unsigned gtm_q(unsigned b, unsigned m) {
  if (b < 2 || m < 2) throw error("t_{b,m} needs b >= 2 and m >= 2");
  return m / std::gcd(b - 1, m);
}

enum class GtmParity { m_odd, m_even_b_odd, both_even };

inline GtmParity gtm_parity(unsigned b, unsigned m) {
  if (m % 2) return GtmParity::m_odd;
  return b % 2 ? GtmParity::m_even_b_odd : GtmParity::both_even;
}

inline std::string to_string(GtmParity p) {
  switch (p) {
    case GtmParity::m_odd:
      return "m odd";
    case GtmParity::m_even_b_odd:
      return "m even, b odd";
    case GtmParity::both_even:
      return "m even, b even";
  }
  return "?";
}

struct GtmSummary {
  long long dC1 = 0;
  long long F1F2 = 0;
  long long dC2 = 0;
  long long F2F3 = 0;
  long long group_order = 0;
  /// The two equalities dC(n) + #G' = F(n) + F(n+1) for n = 1, 2.
  [[nodiscard]] bool equality_n1() const noexcept { return dC1 + group_order == F1F2; }
  [[nodiscard]] bool equality_n2() const noexcept { return dC2 + group_order == F2F3; }
  friend bool operator==(const GtmSummary&, const GtmSummary&) = default;
};

struct GtmTables {
  unsigned b = 0;
  unsigned m = 0;
  unsigned q = 0;
  GtmParity parity = GtmParity::m_odd;
  std::array<long long, 3> C{};  // #L_n(S(t_{b,m})), n = 1, 2, 3
  std::array<long long, 3> F{};  // I_2'(m)-palindrome counts, n = 1, 2, 3
  GtmSummary summary;
};

/// Table rows for the parity column of (b, m); b, m >= 3.
inline GtmTables gtm_tables(unsigned b, unsigned m) {
  if (b < 3 || m < 3) throw error("the t_{b,m} tables need b >= 3 and m >= 3");
  GtmTables t;
  t.b = b;
  t.m = m;
  t.q = gtm_q(b, m);
  t.parity = gtm_parity(b, m);
  long long const M = m, Q = t.q;
  switch (t.parity) {
    case GtmParity::m_odd:
      t.C = {M, Q * M, 3 * Q * M - 2 * M};
      t.F = {M, Q * M, Q * M};
      t.summary = {(Q - 1) * M, (Q + 1) * M, 2 * Q * M - 2 * M, 2 * Q * M, 2 * M};
      break;
    case GtmParity::m_even_b_odd:
      t.C = {M / 2, Q * M / 2, 3 * Q * M / 2 - M};
      t.F = {M / 2, Q * M / 2, Q * M / 2};
      t.summary = {(Q - 1) * M / 2, (Q + 1) * M / 2, Q * M - M, Q * M, M};
      break;
    case GtmParity::both_even:
      t.C = {M, 3 * Q * M / 4, 3 * Q * M / 2 - M};
      t.F = {M, Q * M / 4, Q * M / 2};
      t.summary = {3 * Q * M / 4 - M, Q * M / 4 + M, 3 * Q * M / 4 - M, 3 * Q * M / 4, M};
      break;
  }
  return t;
}

/// Summary rows derived from C(1..3) and F(1..3) columns; C(0) = 1 is not needed.
inline GtmSummary gtm_summary_from(const std::array<long long, 3>& C, const std::array<long long, 3>& F,
                                   long long group_order) {
  return {C[1] - C[0], F[0] + F[1], C[2] - C[1], F[1] + F[2], group_order};
}

/// L_n(t_{b,m}) for n in {2, 3, 4} from the closed forms with rho^k(x) = x + k(b-1).
inline std::set<Word> gtm_factor_sets(unsigned b, unsigned m, unsigned n) {
  if (n < 2 || n > 4) throw error("closed-form factor sets exist for n = 2, 3, 4");
  unsigned const q = gtm_q(b, m);
  Alphabet const A(m);
  long long const s = static_cast<long long>(b) - 1;
  auto rho = [&](long long x, long long k) { return A.add(static_cast<unsigned>(A.add(0, x)), k * s); };
  auto L = [&](long long x) { return A.add(0, x); };
  std::set<Word> out;
  for (long long r = 0; r < m; ++r) {
    for (long long k = 0; k < q; ++k) {
      switch (n) {
        case 2:
          out.insert(Word(A, {rho(r - 1, k), L(r)}));
          break;
        case 3:
          out.insert(Word(A, {rho(r - 1, k), L(r), L(r + 1)}));
          out.insert(Word(A, {L(r - 1), L(r), rho(r + 1, -k)}));
          break;
        case 4: {
          unsigned const t = rho(r + 1, -k);
          out.insert(Word(A, {rho(r - 1, k), L(r), L(r + 1), L(r + 2)}));
          out.insert(Word(A, {L(r - 2), L(r - 1), L(r), t}));
          out.insert(Word(A, {L(r - 1), L(r), t, A.add(t, 1)}));
          break;
        }
      }
    }
  }
  return out;
}

/// Every length-4 factor has w_i - w_{i-1} = 1 for at least two i in {1, 2, 3}.
inline bool posobe_check(const FactorIndex& idx) {
  if (idx.n_max() < 4) throw error("posobe check needs an index horizon of at least 4");
  Alphabet const A = idx.alphabet();
  for (const auto& w : idx.factors(4)) {
    int ones = 0;
    for (std::size_t i = 1; i < 4; ++i) ones += A.add(w[i], -static_cast<long long>(w[i - 1])) == 1;
    if (ones < 2) return false;
  }
  return true;
}

}  // namespace richlab
