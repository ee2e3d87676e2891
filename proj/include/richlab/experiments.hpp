#pragma once

// The registered reproduction experiments. Each one materializes its words, runs the analyses and records
// every claim it checks as an assertion of the report.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "richlab/analysis.hpp"
#include "richlab/expr.hpp"
#include "richlab/gtm.hpp"
#include "richlab/oracle.hpp"
#include "richlab/report.hpp"
#include "richlab/sweeps.hpp"

namespace richlab {

struct ExperimentSpec {
  std::string name;
  std::map<std::string, std::string> params;
  std::optional<std::size_t> horizon;  // prefix length; the experiment default when absent
};

struct ParamDef {
  std::string name;
  std::string default_value;
  std::string help;
};

/// Declared parameters merged with the values given in a spec.
class Params {
 public:
  Params(const std::vector<ParamDef>& defs, const std::map<std::string, std::string>& given,
         const std::string& experiment) {
    for (const auto& d : defs) values_[d.name] = d.default_value;
    for (const auto& [k, v] : given) {
      if (!values_.contains(k)) throw error("experiment " + experiment + " has no parameter '" + k + "'");
      values_[k] = v;
    }
    for (const auto& d : defs) order_.push_back(d.name);
  }

  [[nodiscard]] std::size_t size(const std::string& name) const {
    const std::string& s = values_.at(name);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-') throw error("parameter " + name + " = '" + s + "' is not a count");
    return static_cast<std::size_t>(v);
  }
  [[nodiscard]] unsigned uint(const std::string& name) const {
    std::size_t const v = size(name);
    if (v > 1'000'000) throw error("parameter " + name + " is too large");
    return static_cast<unsigned>(v);
  }
  [[nodiscard]] std::vector<unsigned> list(const std::string& name) const {
    std::vector<unsigned> out;
    std::string const& s = values_.at(name);
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t const end = std::min(s.find(',', start), s.size());
      std::string const item = s.substr(start, end - start);
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
        throw error("parameter " + name + " = '" + s + "' is not a comma-separated list of counts");
      }
      out.push_back(static_cast<unsigned>(std::stoul(item)));
      start = end + 1;
    }
    return out;
  }
  [[nodiscard]] json echo() const {
    json j = json::object();
    for (const auto& k : order_) j[k] = values_.at(k);
    return j;
  }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> order_;
};

struct ExperimentDef {
  std::string name;
  std::string summary;
  std::vector<ParamDef> params;
  std::size_t default_horizon = 0;  // 0: the experiment takes no prefix length
  std::function<Report(const Params&, std::size_t)> run;
};

namespace detail {

inline json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_string(w));
  return a;
}

inline json letters_json(const Word& w) {
  json a = json::array();
  for (Letter c : w.letter_set()) a.push_back(c);
  return a;
}

inline void require_horizon(std::size_t horizon, std::size_t needed, const std::string& why) {
  if (horizon < needed) {
    throw error("horizon " + std::to_string(horizon) + " is too small: " + why + " needs a prefix of at least " +
                std::to_string(needed));
  }
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s.empty() ? "none" : s;
}

inline std::string join_words(const std::vector<Word>& v) {
  std::string s;
  for (const auto& w : v) s += (s.empty() ? "" : ",") + (w.empty() ? std::string("eps") : to_string(w));
  return s.empty() ? "none" : s;
}

inline std::vector<std::size_t> nonzero_slack(const EqualityAudit& a, std::size_t from = 1) {
  std::vector<std::size_t> out;
  for (std::size_t n = from; n < a.slack.size(); ++n)
    if (a.slack[n] != 0) out.push_back(n);
  return out;
}

inline Table audit_table(const EqualityAudit& a, const std::string& name) {
  Table t{name, {"n", "dC", "F(n)", "F(n+1)", "slack"}, {}};
  for (std::size_t n = 1; n <= a.n_max; ++n) t.rows.push_back({n, a.dC[n], a.F[n], a.F[n + 1], a.slack[n]});
  return t;
}

inline void audit_values(Section& s, const EqualityAudit& a) {
  s.values["group"] = a.group;
  s.values["group_order"] = a.group_order;
  s.values["closure_length"] = a.n_max + 1;
  s.values["closure_fraction"] = a.closure.fraction();
  auto const fp = a.first_positive();
  s.values["first_positive_slack"] = fp ? json(*fp) : json(nullptr);
  s.values["nonzero_slack_at"] = join(nonzero_slack(a));
}

inline void verdict_values(Section& s, const RichnessVerdict& v) {
  s.values["status"] = to_string(v.status);
  s.values["prefix_defect"] = v.defect;
  s.values["closed_at_audit_horizon"] = v.closed;
  s.values["audit_horizon"] = v.audit_horizon;
  s.values["first_positive_slack"] = v.first_positive_slack ? json(*v.first_positive_slack) : json(nullptr);
  s.values["witnesses"] = words_json(v.witnesses);
}

inline std::string audit_detail(const EqualityAudit& a) {
  return "nonzero slack at n = " + join(nonzero_slack(a)) + ", closure " + std::to_string(a.closure.closed) + "/" +
         std::to_string(a.closure.total);
}

inline SymmetryGroup reversal_binary() { return SymmetryGroup::reversal(Alphabet(2)); }

}  // namespace detail

// ---------------------------------------------------------------------------------------------------------------

inline Report run_example_3_1(const Params& p, std::size_t) {
  Report r("example-3-1", p.echo());
  Alphabet const A(2);
  Word const w = parse_word("011010011001", A);
  auto const R = SymmetryGroup::reversal(A);
  auto const E = SymmetryGroup::exchange();
  auto const H = SymmetryGroup::binary_h();

  auto to_set = [&](std::initializer_list<const char*> xs) {
    std::set<Word> s;
    for (const char* x : xs) s.insert(parse_word(x, A));
    return s;
  };
  std::set<Word> const expected_r =
      to_set({"", "0", "1", "11", "00", "101", "010", "0110", "1001", "001100", "10011001"});
  std::set<Word> const expected_e = to_set({"", "01", "10", "0011", "1100", "1010", "110100", "001100", "01101001"});
  std::set<std::vector<Word>> expected_h;
  for (const auto& x : to_set({"", "0", "00", "01", "010", "0110", "0011", "1010", "110100", "100110", "001100",
                               "10011001", "01101001"})) {
    expected_h.insert(orbit(x, H));
  }

  auto const pal_r = pal_sets(w, SymmetryElement::psi(0, A));
  auto const pal_e = pal_sets(w, SymmetryElement::psi(1, A));
  auto const pal_h = pal_orbits(w, H);
  std::set<std::vector<Word>> got_h;
  for (const auto& rep : pal_h) got_h.insert(orbit(rep, H));

  auto& s = r.section("defects of the length-12 Thue-Morse prefix", w.size());
  s.values["word"] = to_string(w);
  s.values["is_thue_morse_prefix"] = prefix(thue_morse(2, 2), 12) == w;
  s.values["D_R"] = defect(w, R);
  s.values["D_E"] = defect(w, E);
  s.values["D_H"] = defect(w, H);
  s.values["gamma_E"] = gamma_g(w, E);
  s.values["Pal_R"] = detail::words_json(pal_r);
  s.values["Pal_E"] = detail::words_json(pal_e);
  json orbits = json::array();
  for (const auto& o : got_h) orbits.push_back(detail::words_json(o));
  s.values["Pal_H_orbits"] = orbits;

  auto diff = [](const std::set<Word>& got, const std::set<Word>& want) {
    std::vector<Word> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    return "listed but absent: " + detail::join_words(missing) + "; present but unlisted: " + detail::join_words(extra);
  };
  std::set<Word> const got_r(pal_r.begin(), pal_r.end()), got_e(pal_e.begin(), pal_e.end());

  r.check("word is the Thue-Morse prefix of length 12", prefix(thue_morse(2, 2), 12) == w);
  r.check("D^R = 2", defect(w, R) == 2, "computed " + std::to_string(defect(w, R)));
  r.check("D^E = 3", defect(w, E) == 3,
          "computed " + std::to_string(defect(w, E)) + " from " + std::to_string(pal_e.size()) + " E-palindromes");
  r.check("D^H = 0", defect(w, H) == 0, "computed " + std::to_string(defect(w, H)));
  r.check("Pal^R equals the reference listing", got_r == expected_r, diff(got_r, expected_r));
  r.check("Pal^E equals the reference listing", got_e == expected_e, diff(got_e, expected_e));
  r.check("Pal^H equals the reference orbit listing", got_h == expected_h,
          std::to_string(got_h.size()) + " orbits computed, " + std::to_string(expected_h.size()) + " listed");
  bool const oracle_ok = oracle::defect(w, R) == defect(w, R) && oracle::defect(w, E) == defect(w, E) &&
                         oracle::defect(w, H) == defect(w, H) && oracle::pal_set(w, R.antimorphisms()[0]) == got_r &&
                         oracle::pal_set(w, E.antimorphisms()[0]) == got_e && oracle::pal_orbits(w, H) == got_h;
  r.check("palindromic tree agrees with brute-force enumeration", oracle_ok);
  return r;
}

inline Report run_pd_transfer(const Params& p, std::size_t N) {
  Report r("pd-transfer", p.echo());
  std::size_t const n = p.size("n");
  detail::require_horizon(N, 100 * (n + 2), "a reliable window up to n = " + std::to_string(n));
  Word const u = prefix(thue_morse(2, 2), N + 1);
  Word const v = s_apply(u);
  Word const pd = prefix(period_doubling_source(), N);

  auto& s0 = r.section("S(tm(2,2)) against the period-doubling fixed point", N);
  s0.values["S_t_prefix_26"] = to_string(v.prefix(std::min<std::size_t>(26, N)));
  s0.values["equal_on_prefix"] = v == pd;
  r.check("S(tm(2,2)) equals the period-doubling word on the whole prefix", v == pd);
  r.check("first 26 letters equal 10111010101110111011101010",
          N >= 26 && to_string(v.prefix(26)) == "10111010101110111011101010");

  FactorIndex const iu(u, n + 2);
  FactorIndex const iv(v, n + 1);
  auto const au = equality_audit(iu, SymmetryGroup::binary_h(), n);
  auto const av = equality_audit(iv, detail::reversal_binary(), n);
  auto& s1 = r.section("H equality audit of tm(2,2)", u.size(), n);
  detail::audit_values(s1, au);
  s1.tables.push_back(detail::audit_table(au, "slack"));
  auto& s2 = r.section("R equality audit of the period-doubling word", v.size(), n);
  detail::audit_values(s2, av);
  s2.tables.push_back(detail::audit_table(av, "slack"));
  r.check("tm(2,2): zero H slack for 1 <= n <= " + std::to_string(n), au.zero_on(1, n), detail::audit_detail(au));
  r.check("tm(2,2): language closed under H at n = " + std::to_string(n + 1), au.closure.complete());
  r.check("period doubling: zero R slack for 1 <= n <= " + std::to_string(n), av.zero_on(1, n),
          detail::audit_detail(av));

  auto const tc = s_transfer_check(u, n);
  auto& s3 = r.section("profile transfer from tm(2,2) to its S-image", u.size(), n + 1);
  s3.values["complexity_failures"] = detail::join(tc.complexity_failures);
  s3.values["palindrome_failures"] = detail::join(tc.palindrome_failures);
  r.check("2 dC_S(u)(n) = dC_u(n+1) and 2 P^R_S(u)(n) = P^R_u(n+1) + P^E_u(n+1)", tc.ok());
  return r;
}

inline Report run_tb2_rich(const Params& p, std::size_t N) {
  Report r("tb2-rich", p.echo());
  std::size_t const n = p.size("n");
  detail::require_horizon(N, 100 * (n + 2), "a reliable window up to n = " + std::to_string(n));
  for (unsigned b : p.list("b")) {
    if (b < 2) throw error("tb2-rich needs b >= 2");
    WordSource const t = thue_morse(b, 2);
    WordSource const vs = WordSource::s_image(t);
    Word const u = prefix(t, N + 1);
    Word const v = s_apply(u);
    std::string const name = describe(vs);

    auto const verdict = richness_verdict(vs, detail::reversal_binary(), N);
    auto& s0 = r.section("R-richness verdict for " + name, N);
    detail::verdict_values(s0, verdict);
    r.check(name + " is R-rich up to " + std::to_string(N), verdict.status == RichnessStatus::rich_up_to,
            to_string(verdict.status) + ", prefix defect " + std::to_string(verdict.defect));

    auto const tc = s_transfer_check(u, n);
    r.check("profile transfer from tm(" + std::to_string(b) + ",2) for n <= " + std::to_string(n), tc.ok(),
            "complexity failures " + detail::join(tc.complexity_failures) + ", palindrome failures " +
                detail::join(tc.palindrome_failures));

    FactorIndex const it(u, n + 1);
    FactorIndex const iv(v, n);
    auto& s1 = r.section("complexity of " + name + " against tm(" + std::to_string(b) + ",2)", v.size(), n);
    Table tab{"complexity", {"n", "C_t(n)", "C_v(n)", "(C_t(n)-1)/2", "C_t(n+1)/2"}, {}};
    std::size_t stated = 0, shifted = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      auto const ct = static_cast<long long>(it.complexity(k));
      auto const ct1 = static_cast<long long>(it.complexity(k + 1));
      auto const cv = static_cast<long long>(iv.complexity(k));
      stated += 2 * cv == ct - 1;
      shifted += 2 * cv == ct1;
      tab.rows.push_back({k, ct, cv, static_cast<double>(ct - 1) / 2, static_cast<double>(ct1) / 2});
    }
    s1.values["n_with_C_v(n)=(C_t(n)-1)/2"] = stated;
    s1.values["n_with_C_v(n)=C_t(n+1)/2"] = shifted;
    s1.values["checked_lengths"] = n;
    s1.tables.push_back(std::move(tab));
  }
  return r;
}

inline Report run_rote_hrich(const Params& p, std::size_t N) {
  Report r("rote-hrich", p.echo());
  std::size_t const n = p.size("n");
  std::size_t const window = p.size("window");
  detail::require_horizon(N, 100 * (std::max(n, window) + 2), "a reliable window");
  WordSource const src = rote_source();
  Word const w = prefix(src, N);
  FactorIndex const idx(w, std::max(n, window) + 1);
  auto const ah = equality_audit(idx, SymmetryGroup::binary_h(), n);
  auto const ar = equality_audit(idx, detail::reversal_binary(), n);

  auto& s0 = r.section("H equality audit of " + describe(src), N, n);
  detail::audit_values(s0, ah);
  s0.tables.push_back(detail::audit_table(ah, "slack"));
  r.check("zero H slack for 1 <= n <= " + std::to_string(n), ah.zero_on(1, n), detail::audit_detail(ah));
  r.check("language closed under H at n = " + std::to_string(n + 1), ah.closure.complete());
  auto& s1 = r.section("R equality audit of " + describe(src), N, n);
  detail::audit_values(s1, ar);
  r.check("zero R slack for 1 <= n <= " + std::to_string(n), ar.zero_on(1, n), detail::audit_detail(ar));

  std::vector<std::size_t> bad;
  for (std::size_t k = 1; k <= n; ++k)
    if (idx.complexity(k) != 2 * k) bad.push_back(k);
  auto& s2 = r.section("factor complexity", N, n);
  s2.values["lengths_with_C(n)!=2n"] = detail::join(bad);
  r.check("C(n) = 2n for 1 <= n <= " + std::to_string(n), bad.empty());

  auto const rw = return_word_audit(idx, SymmetryGroup::binary_h(), 1, window);
  auto& s3 = r.section("complete H-return words of H-palindromes", N, window);
  s3.values["orbits_checked"] = rw.orbits_checked;
  s3.values["return_words_checked"] = rw.return_words_checked;
  s3.values["partial_orbits"] = rw.partial_orbits;
  s3.values["violations"] = rw.violations.size();
  r.check("every complete H-return word is an H-palindrome, |w| <= " + std::to_string(window),
          rw.violations.empty() && rw.orbits_checked > 0);

  auto const br = br_identity_check(src, N, n);
  auto& s4 = r.section("2 D^R against the sum of T(n)", N, n);
  s4.values["prefix_defect_R"] = br.defect;
  s4.values["sum_T"] = br.sum_t;
  r.check("2 D^R(prefix) = sum of T(n) = 0", br.agree() && br.defect == 0);
  return r;
}

inline Report run_tm_not_rrich(const Params& p, std::size_t N) {
  Report r("tm-not-rrich", p.echo());
  std::size_t const n = p.size("n");
  std::size_t const cap = p.size("cap");
  detail::require_horizon(N, 100 * (std::max(n, cap) + 2), "a reliable window");
  WordSource const src = thue_morse(2, 2);
  auto const R = detail::reversal_binary();

  auto const prof = defect_profile(src, R, doubling_schedule(N));
  auto& s0 = r.section("R-defect of prefixes of tm(2,2)", N);
  Table tab{"defect", {"prefix_length", "D_R"}, {}};
  for (std::size_t i = 0; i < prof.schedule.size(); ++i) tab.rows.push_back({prof.schedule[i], prof.values[i]});
  s0.tables.push_back(std::move(tab));
  s0.values["lower_bound"] = prof.lower_bound();
  s0.values["stabilized"] = prof.stabilized();
  bool const positive = std::all_of(prof.values.begin(), prof.values.end(), [](std::size_t d) { return d > 0; });
  r.check("prefix defects are nondecreasing", prof.nondecreasing());
  r.check("prefix defects are positive", positive);
  r.check("defect lower bound >= 2", prof.lower_bound() >= 2, "lower bound " + std::to_string(prof.lower_bound()));
  r.check("defect keeps growing along the schedule", prof.values.size() >= 2 && prof.values.back() > prof.values.front());

  Word const w = prefix(src, N);
  Word const w12 = parse_word("011010011001", Alphabet(2));
  FactorIndex const idx(w, std::max(n, cap) + 2);
  r.check("the length-12 witness occurs and has D^R = 2", idx.contains(w12) && defect(w12, R) == 2);

  auto const a = equality_audit(idx, R, n);
  auto& s1 = r.section("R equality audit of tm(2,2)", N, n);
  detail::audit_values(s1, a);
  s1.tables.push_back(detail::audit_table(a, "slack"));
  r.check("some n <= " + std::to_string(n) + " has positive R slack", a.first_positive().has_value(),
          detail::audit_detail(a));

  auto const bis = bispecial_audit(idx, cap);
  auto& s2 = r.section("bispecial factors against the bilateral-order criterion", N, cap);
  Table bt{"nonconforming", {"w", "b(w)", "palindrome", "#Pext"}, {}};
  std::size_t bad = 0;
  for (const auto& e : bis) {
    if (e.conforming) continue;
    ++bad;
    bt.rows.push_back({to_string(e.w), e.bilateral, e.palindrome, e.pext});
  }
  s2.values["bispecial_factors"] = bis.size();
  s2.values["nonconforming"] = bad;
  s2.tables.push_back(std::move(bt));
  r.check("nonconforming bispecial factors exist", bad > 0);

  auto const verdict = richness_verdict(src, R, N);
  auto& s3 = r.section("R-richness verdict for tm(2,2)", N);
  detail::verdict_values(s3, verdict);
  r.check("verdict is a defect lower bound with witnesses",
          verdict.status == RichnessStatus::defect_lower_bound && verdict.witnesses.size() == 2 &&
              defect(verdict.witnesses[0], R) > 0 && defect(verdict.witnesses[1], R) == verdict.defect);
  return r;
}

inline Report run_welldoc_sturmian(const Params& p, std::size_t N) {
  Report r("welldoc-sturmian", p.echo());
  std::size_t const n = p.size("n");
  std::size_t const budget = p.size("budget");
  detail::require_horizon(N, 100 * 52, "the complexity check up to n = 50");
  WordSource const src = sturmian_source();
  Word const w = prefix(src, N);
  FactorIndex const idx(w, std::max<std::size_t>(n, 51));

  auto& s0 = r.section("WELLDOC(2) for factors of " + describe(src), N, n);
  Table tab{"factors", {"length", "factors", "confirmed"}, {}};
  bool all = true;
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t ok = 0;
    auto const fs = idx.factors(k);
    for (const auto& f : fs) ok += welldoc2(w, f, budget).confirmed();
    all = all && ok == fs.size();
    tab.rows.push_back({k, fs.size(), ok});
  }
  s0.values["occurrence_budget"] = budget;
  s0.tables.push_back(std::move(tab));
  r.check("every factor of length <= " + std::to_string(n) + " has well distributed occurrences mod 2", all);

  auto const per = welldoc2(WordSource::periodic(parse_word("01", 2)), parse_word("0", 2), budget, N);
  auto& s1 = r.section("WELLDOC(2) for 0 in periodic(01)", N);
  json res = json::array();
  for (auto [a, b] : per.residues) res.push_back(json::array({a, b}));
  s1.values["residues"] = res;
  r.check("periodic(01) with w = 0 is not confirmed", !per.confirmed());

  std::vector<std::size_t> bad;
  for (std::size_t k = 0; k <= 50; ++k)
    if (idx.complexity(k) != k + 1 || (k >= 1 && special_factors(idx, k).right.size() != 1)) bad.push_back(k);
  auto& s2 = r.section("Sturmian complexity", N, 50);
  s2.values["lengths_with_C(n)!=n+1_or_not_one_right_special"] = detail::join(bad);
  r.check("C(n) = n + 1 with one right special factor for n <= 50", bad.empty());

  auto const br = br_identity_check(src, N, 50);
  auto& s3 = r.section("2 D^R against the sum of T(n)", N, 50);
  s3.values["prefix_defect_R"] = br.defect;
  s3.values["sum_T"] = br.sum_t;
  r.check("2 D^R(prefix) = sum of T(n) = 0", br.agree() && br.defect == 0);
  return r;
}

inline Report run_asijo(const Params& p, std::size_t N) {
  Report r("asijo", p.echo());
  unsigned const k = p.uint("k");
  if (k < 1 || k > 8) throw error("asijo needs 1 <= k <= 8");
  auto& s = r.section("R-richness of S^j(tm(b,2)) for j <= " + std::to_string(k), N);
  Table tab{"verdicts", {"b", "j", "status", "prefix_defect", "closed", "first_positive_slack"}, {}};
  for (unsigned b : p.list("b")) {
    if (b < 2) throw error("asijo needs b >= 2");
    for (unsigned j = 1; j <= k; ++j) {
      WordSource const src = iterate_s(thue_morse(b, 2), j);
      auto const v = richness_verdict(src, detail::reversal_binary(), N);
      tab.rows.push_back({b, j, to_string(v.status), v.defect, v.closed,
                          v.first_positive_slack ? json(*v.first_positive_slack) : json(nullptr)});
      r.check("hypothesis: " + describe(src) + " is R-rich up to " + std::to_string(N),
              v.status == RichnessStatus::rich_up_to, to_string(v.status));
    }
  }
  s.values["audit_horizon"] = N / default_reliability_ratio;
  s.tables.push_back(std::move(tab));
  return r;
}

inline Report run_asijojednou(const Params& p, std::size_t N) {
  Report r("asijojednou", p.echo());
  unsigned const k = p.uint("k");
  std::size_t const n = p.size("n");
  if (k < 1 || k > 8) throw error("asijojednou needs 1 <= k <= 8");
  detail::require_horizon(N, 100 * (n + 2), "a reliable window up to n = " + std::to_string(n));
  for (unsigned j = 1; j <= k; ++j) {
    WordSource const src = iterate_s_preimage(sturmian_source(), j);
    Word const w = prefix(src, N);
    FactorIndex const idx(w, std::max<std::size_t>(n, 8) + 1);
    auto const ah = equality_audit(idx, SymmetryGroup::binary_h(), n);
    auto const ar = equality_audit(idx, detail::reversal_binary(), n);
    auto const closure8 = closure_check(idx, SymmetryGroup::binary_h(), 8);

    auto& s = r.section(describe(src), N, n);
    Table tab{"profile", {"n", "C(n)", "dC(n)=C(n+1)-C(n)", "C(n)-C(n-1)", "expected", "slack_H", "slack_R"}, {}};
    bool forward = true, backward = true;
    for (std::size_t m = 1; m <= n; ++m) {
      auto const c = static_cast<long long>(idx.complexity(m));
      long long const fwd = static_cast<long long>(idx.complexity(m + 1)) - c;
      long long const bwd = c - static_cast<long long>(idx.complexity(m - 1));
      long long const expected = m <= j ? (1LL << (m - 1)) : (1LL << j);
      forward = forward && fwd == expected;
      backward = backward && bwd == expected;
      tab.rows.push_back({m, c, fwd, bwd, expected, ah.slack[m], ar.slack[m]});
    }
    s.tables.push_back(std::move(tab));
    s.values["H_closure_fraction_n8"] = closure8.fraction();
    s.values["backward_difference_matches"] = backward;
    s.values["H_nonzero_slack_at"] = detail::join(detail::nonzero_slack(ah));
    s.values["R_nonzero_slack_at"] = detail::join(detail::nonzero_slack(ar));

    std::string const tag = "k = " + std::to_string(j) + ": ";
    r.check(tag + "dC(n) = 2^(n-1) for 0 < n <= k and 2^k for k < n <= " + std::to_string(n), forward,
            backward ? "the backward difference C(n) - C(n-1) matches instead" : "");
    r.check(tag + "H-closure fraction 1.0 at n = 8", closure8.complete(), std::to_string(closure8.fraction()));
    bool const h_zero = ah.zero_on(1, n), r_zero = ar.zero_on(1, n);
    bool const want_h = j <= 3, want_r = j <= 2;
    r.check(tag + "hypothesis: H slack " + (want_h ? "zero" : "positive somewhere") + " for n <= " +
                std::to_string(n),
            h_zero == want_h, detail::audit_detail(ah));
    r.check(tag + "hypothesis: R slack " + (want_r ? "zero" : "positive somewhere") + " for n <= " +
                std::to_string(n),
            r_zero == want_r, detail::audit_detail(ar));
  }
  return r;
}

inline Report run_gtm_tables(const Params& p, std::size_t N) {
  Report r("gtm-tables", p.echo());
  unsigned const b = p.uint("b"), m = p.uint("m");
  GtmTables const closed = gtm_tables(b, m);
  detail::require_horizon(N, 1000, "factor enumeration up to n = 4");
  WordSource const vs = WordSource::s_image(thue_morse(b, m));
  Word const v = prefix(vs, N);
  SymmetryGroup const G = SymmetryGroup::dihedral_even(m);
  FactorIndex const iv(v, 4);
  auto const pp = palindrome_profile(v, G, 3);
  std::array<long long, 3> C{}, F{};
  for (std::size_t n = 1; n <= 3; ++n) {
    C[n - 1] = static_cast<long long>(iv.complexity(n));
    F[n - 1] = static_cast<long long>(pp.F[n]);
  }
  GtmSummary const enumerated = gtm_summary_from(C, F, static_cast<long long>(G.size()));

  auto& s0 = r.section("factor and palindrome counts of " + describe(vs), N, 3);
  s0.values["q"] = closed.q;
  s0.values["parity"] = to_string(closed.parity);
  s0.values["group"] = G.description();
  Table rows{"rows", {"n", "C closed", "C enumerated", "F closed", "F enumerated"}, {}};
  for (std::size_t n = 0; n < 3; ++n) rows.rows.push_back({n + 1, closed.C[n], C[n], closed.F[n], F[n]});
  s0.tables.push_back(std::move(rows));
  Table sum{"summary", {"quantity", "closed", "enumerated"}, {}};
  sum.rows.push_back({"dC(1)", closed.summary.dC1, enumerated.dC1});
  sum.rows.push_back({"F(1)+F(2)", closed.summary.F1F2, enumerated.F1F2});
  sum.rows.push_back({"dC(2)", closed.summary.dC2, enumerated.dC2});
  sum.rows.push_back({"F(2)+F(3)", closed.summary.F2F3, enumerated.F2F3});
  sum.rows.push_back({"#G'", closed.summary.group_order, enumerated.group_order});
  s0.tables.push_back(std::move(sum));
  s0.values["equality_n1"] = enumerated.equality_n1();
  s0.values["equality_n2"] = enumerated.equality_n2();

  r.check("C(1..3) equals the closed form", C == closed.C);
  r.check("F(1..3) equals the closed form", F == closed.F);
  r.check("summary rows equal the closed form", enumerated == closed.summary);
  if (closed.parity != GtmParity::both_even) {
    r.check("dC(1) + #G' = F(1) + F(2)", enumerated.equality_n1());
    r.check("dC(2) + #G' = F(2) + F(3)", enumerated.equality_n2());
  }

  Word const t = prefix(thue_morse(b, m), N);
  FactorIndex const it(t, 4);
  auto& s1 = r.section("closed-form factor sets of " + describe(thue_morse(b, m)), N, 4);
  for (unsigned n = 2; n <= 4; ++n) {
    auto const fs = it.factors(n);
    std::set<Word> const enumerated_set(fs.begin(), fs.end());
    auto const closed_set = gtm_factor_sets(b, m, n);
    s1.values["L" + std::to_string(n) + "_size"] = enumerated_set.size();
    r.check("L_" + std::to_string(n) + " equals the closed form", enumerated_set == closed_set,
            std::to_string(enumerated_set.size()) + " enumerated, " + std::to_string(closed_set.size()) +
                " closed form");
  }
  r.check("every length-4 factor has at least two unit steps", posobe_check(it));
  return r;
}

inline Report run_s_tbm_rich(const Params& p, std::size_t N) {
  Report r("s-tbm-rich", p.echo());
  unsigned const b = p.uint("b"), m = p.uint("m");
  std::size_t const n = p.size("n");
  std::size_t const window = p.size("window");
  if (b < 3 || m < 3) throw error("s-tbm-rich needs b >= 3 and m >= 3");
  if (n < 3) throw error("s-tbm-rich needs n >= 3");
  detail::require_horizon(N, 100 * (std::max(n, window) + 2), "a reliable window");
  WordSource const vs = WordSource::s_image(thue_morse(b, m));
  Word const v = prefix(vs, N);
  SymmetryGroup const G = SymmetryGroup::dihedral_even(m);
  FactorIndex const idx(v, std::max(n, window) + 1);
  auto const a = equality_audit(idx, G, n);
  bool const odd = (m % 2) || (b % 2);

  auto& s0 = r.section("equality audit of " + describe(vs), N, n);
  detail::audit_values(s0, a);
  s0.values["letters"] = detail::letters_json(v);
  s0.tables.push_back(detail::audit_table(a, "slack"));
  r.check("language closed under " + G.label() + " at n = " + std::to_string(n + 1), a.closure.complete());
  if (odd) {
    r.check("m or b odd: zero slack for 1 <= n <= " + std::to_string(n), a.zero_on(1, n), detail::audit_detail(a));
  }
  r.check("zero slack for 3 <= n <= " + std::to_string(n), a.zero_on(3, n), detail::audit_detail(a));

  std::size_t const from = odd ? 1 : 3;
  auto const rw = return_word_audit(idx, G, from, window);
  auto& s1 = r.section("complete " + G.label() + "-return words", N, window);
  s1.values["min_length"] = from;
  s1.values["orbits_checked"] = rw.orbits_checked;
  s1.values["return_words_checked"] = rw.return_words_checked;
  s1.values["violations"] = rw.violations.size();
  r.check("every complete return word of a G'-palindrome is a G'-palindrome, " + std::to_string(from) +
              " <= |w| <= " + std::to_string(window),
          rw.violations.empty() && rw.orbits_checked > 0);
  return r;
}

inline Report run_s4(const Params& p, std::size_t N) {
  Report r("s4", p.echo());
  unsigned const b = p.uint("b");
  unsigned const k = p.uint("k");
  std::size_t const n = p.size("n");
  if (b < 1) throw error("s4 needs b >= 1");
  if (k < 2 || k > 8) throw error("s4 needs 2 <= k <= 8");
  detail::require_horizon(N, 100 * (n + 2), "a reliable window up to n = " + std::to_string(n));
  WordSource const t = thue_morse(2 * b + 1, 4);
  Alphabet const A(4);
  // {1,3}: Psi_2 reverses, Psi_0 exchanges; {0,2}: Psi_0 reverses.
  SymmetryGroup const h13 = SymmetryGroup::dihedral_even(4);
  SymmetryGroup const r02 = SymmetryGroup::generate({SymmetryElement::psi(0, A)}, "gen(psi:0)");

  for (unsigned j = 1; j <= k; ++j) {
    WordSource const src = iterate_s(t, j);
    Word const w = prefix(src, N);
    FactorIndex const idx(w, n + 1);
    SymmetryGroup const& G = j == 1 ? h13 : r02;
    auto const a = equality_audit(idx, G, n);
    auto const letters = w.letter_set();
    std::vector<Letter> const want = j == 1 ? std::vector<Letter>{1, 3} : std::vector<Letter>{0, 2};

    auto& s = r.section(describe(src), N, n);
    s.values["letters"] = detail::letters_json(w);
    detail::audit_values(s, a);
    if (j <= 2) s.tables.push_back(detail::audit_table(a, "slack"));
    std::string const alpha = j == 1 ? "{1,3}" : "{0,2}";
    r.check(describe(src) + " uses exactly the letters " + alpha, letters == want);
    if (j == 1) {
      r.check(describe(src) + ": zero slack for H over {1,3}, n <= " + std::to_string(n), a.zero_on(1, n),
              detail::audit_detail(a));
    } else if (j == 2) {
      r.check(describe(src) + ": zero slack for R over {0,2}, n <= " + std::to_string(n), a.zero_on(1, n),
              detail::audit_detail(a));
    } else {
      r.check(describe(src) + ": R slack vanishes on the upper half n = " + std::to_string(n / 2 + 1) + ".." +
                  std::to_string(n),
              a.zero_on(n / 2 + 1, n), detail::audit_detail(a));
    }
  }
  return r;
}

inline Report run_oracle_suite(const Params& p, std::size_t) {
  Report r("oracle-suite", p.echo());
  OracleSuiteConfig cfg;
  cfg.binary_length = p.size("binary_length");
  cfg.psi_length = p.size("psi_length");
  cfg.random_words = p.size("words");
  cfg.random_length = p.size("length");
  cfg.s_length = p.size("s_length");
  cfg.pq_length = p.size("pq_length");
  cfg.seed = p.size("seed");
  if (cfg.binary_length > 20 || cfg.psi_length > 10 || cfg.s_length > 16 || cfg.pq_length > 14) {
    throw error("oracle-suite sizes are capped at binary_length 20, psi_length 10, s_length 16, pq_length 14");
  }
  if (cfg.random_length < 1) throw error("oracle-suite needs length >= 1");
  auto& s = r.section("brute-force equivalence and universal bounds", cfg.random_length);
  Table tab{"sweeps", {"sweep", "cases", "violations", "first violation"}, {}};
  for (const auto& res : oracle_suite(cfg)) {
    tab.rows.push_back({res.name, res.cases, res.violations, res.examples.empty() ? "" : res.examples.front()});
    r.check(res.name + ": zero violations", res.ok(),
            std::to_string(res.cases) + " cases" + (res.examples.empty() ? "" : ", e.g. " + res.examples.front()));
  }
  s.tables.push_back(std::move(tab));
  return r;
}

// ---------------------------------------------------------------------------------------------------------------

inline const std::vector<ExperimentDef>& catalog() {
  static const std::vector<ExperimentDef> defs = {
      {"example-3-1", "defects and palindrome sets of the length-12 Thue-Morse prefix", {}, 0, run_example_3_1},
      {"pd-transfer", "S(tm(2,2)) against period doubling, equality audits on both sides",
       {{"n", "100", "audited lengths"}}, 100'000, run_pd_transfer},
      {"tb2-rich", "R-richness of S(tm(b,2)) and its complexity relation",
       {{"b", "2,3,4", "bases"}, {"n", "100", "audited lengths"}}, 100'000, run_tb2_rich},
      {"rote-hrich", "H equality and return-word audits of the Rote word",
       {{"n", "60", "audited lengths"}, {"window", "20", "return-word length window"}}, 100'000, run_rote_hrich},
      {"tm-not-rrich", "growing R-defect and nonconforming bispecials of tm(2,2)",
       {{"n", "20", "audited lengths"}, {"cap", "30", "bispecial length cap"}}, 65'536, run_tm_not_rrich},
      {"welldoc-sturmian", "WELLDOC(2) for every short factor of the Sturmian word",
       {{"n", "6", "factor length cap"}, {"budget", "10000", "occurrences scanned per factor"}}, 100'000,
       run_welldoc_sturmian},
      {"asijo", "R-richness of S^k(tm(b,2))", {{"k", "4", "largest power"}, {"b", "2,3,4", "bases"}}, 100'000,
       run_asijo},
      {"asijojednou", "complexity and richness of S^-k(sturmian)",
       {{"k", "4", "largest power"}, {"n", "12", "audited lengths"}}, 100'000, run_asijojednou},
      {"gtm-tables", "closed-form counts for S(t_{b,m}) against enumeration",
       {{"b", "3", "base"}, {"m", "4", "modulus"}}, 20'000, run_gtm_tables},
      {"s-tbm-rich", "I2p(m) equality and return-word audits of S(t_{b,m})",
       {{"b", "3", "base"},
        {"m", "4", "modulus"},
        {"n", "50", "audited lengths"},
        {"window", "20", "return-word length window"}},
       100'000, run_s_tbm_rich},
      {"s4", "S^k(t_{2b+1,4}) over {1,3} and {0,2}",
       {{"b", "1", "base is 2b+1"}, {"n", "50", "audited lengths"}, {"k", "4", "largest power"}}, 100'000, run_s4},
      {"oracle-suite", "brute-force equivalence and universal-inequality sweeps",
       {{"binary_length", "14", "exhaustive binary length"},
        {"psi_length", "8", "exhaustive length over Z_3 and Z_4"},
        {"words", "100", "random words per modulus"},
        {"length", "500", "random word length cap"},
        {"s_length", "12", "exhaustive binary length for S"},
        {"pq_length", "10", "exhaustive length for pq decompositions"},
        {"seed", "1", "random seed"}},
       0, run_oracle_suite},
  };
  return defs;
}

inline const ExperimentDef& find_experiment(const std::string& name) {
  for (const auto& d : catalog())
    if (d.name == name) return d;
  std::string names;
  for (const auto& d : catalog()) names += (names.empty() ? "" : ", ") + d.name;
  throw error("unknown experiment '" + name + "'; available: " + names);
}

/// "name" or "name(v1,v2,...)"; positional values bind to the declared parameters in order.
inline ExperimentSpec parse_experiment(std::string_view text) {
  ExperimentSpec spec;
  auto const open = text.find('(');
  spec.name = std::string(text.substr(0, open));
  if (open == std::string_view::npos) return spec;
  if (text.back() != ')') throw error("experiment '" + std::string(text) + "' lacks a closing parenthesis");
  const ExperimentDef& def = find_experiment(spec.name);
  std::string_view args = text.substr(open + 1, text.size() - open - 2);
  std::size_t i = 0;
  while (!args.empty()) {
    auto const comma = args.find(',');
    std::string_view item = args.substr(0, comma);
    auto const eq = item.find('=');
    if (eq != std::string_view::npos) {
      spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    } else {
      if (i >= def.params.size()) throw error("too many arguments for experiment " + spec.name);
      spec.params[def.params[i].name] = std::string(item);
    }
    ++i;
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return spec;
}

inline Report run(const ExperimentSpec& spec) {
  const ExperimentDef& def = find_experiment(spec.name);
  Params const params(def.params, spec.params, def.name);
  if (spec.horizon && def.default_horizon == 0) throw error("experiment " + def.name + " takes no horizon");
  std::size_t const horizon = spec.horizon.value_or(def.default_horizon);
  if (def.default_horizon != 0 && horizon == 0) throw error("horizon must be positive");
  return def.run(params, horizon);
}

}  // namespace richlab
