// richlab: word generation, single-word analysis and the reproduction experiments.

#include <fstream>
#include <iostream>
#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "richlab/experiments.hpp"

namespace {

using namespace richlab;

Report analyze(const std::string& word_expr, const std::string& group_expr, std::size_t N,
               std::optional<std::size_t> n_opt) {
  WordSource const src = parse_source(word_expr);
  SymmetryGroup const g = parse_group(group_expr, src.alphabet());
  if (N < 3) throw error("analyze needs a horizon of at least 3");
  std::size_t const n = n_opt.value_or(std::clamp<std::size_t>(N / default_reliability_ratio, 1, 50));
  if (n + 2 > N) throw error("horizon " + std::to_string(N) + " is too small for n = " + std::to_string(n));

  Report r("analyze", json{{"word", word_expr}, {"group", group_expr}, {"n", n}});
  Word const w = prefix(src, N);
  FactorIndex const idx(w, n + 1);

  auto& s0 = r.section("source", N);
  s0.values["expression"] = describe(src);
  s0.values["modulus"] = src.alphabet().modulus();
  s0.values["letters"] = detail::letters_json(w);
  s0.values["prefix"] = to_string(w.prefix(std::min<std::size_t>(N, 60)));
  s0.values["group"] = g.description();

  auto const cp = complexity(idx, n);
  auto const pp = palindrome_profile(w, g, n);
  auto& s1 = r.section("profile", N, n);
  Table tab{"profile", {"n", "C", "dC"}, {}};
  for (const auto& psi : pp.antimorphisms) tab.columns.push_back("P_" + psi.name());
  tab.columns.push_back("orbits");
  bool const distinguishing = is_one_distinguishing(g);
  std::optional<EqualityAudit> audit;
  if (distinguishing) {
    audit = equality_audit(idx, g, n);
    tab.columns.push_back("slack");
  }
  bool const has_r = g.contains(SymmetryElement::psi(0, g.alphabet()));
  std::vector<long long> T;
  if (has_r) {
    T = t_series(idx, n);
    tab.columns.push_back("T");
  }
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<json> row{k, cp.C[k], cp.dC[k]};
    for (const auto& P : pp.P) row.emplace_back(P[k]);
    row.emplace_back(pp.orbits[k]);
    if (audit) row.emplace_back(k ? json(audit->slack[k]) : json(nullptr));
    if (has_r) row.emplace_back(k ? json(T[k]) : json(nullptr));
    tab.rows.push_back(std::move(row));
  }
  s1.tables.push_back(std::move(tab));
  if (audit) {
    detail::audit_values(s1, *audit);
    if (audit->closure.complete()) r.check("slack is nonnegative on a closed language", audit->nonnegative());
  } else {
    s1.values["closure_length"] = n + 1;
    s1.values["closure_fraction"] = closure_check(idx, g, n + 1).fraction();
    s1.values["equality_audit"] = "skipped: 1 is not distinguishing for the group";
  }

  auto const verdict = richness_verdict(src, g, N);
  auto& s2 = r.section("verdict", N);
  detail::verdict_values(s2, verdict);
  return r;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw error("cannot open output file " + out);
  f << text;
  if (!f) throw error("failed writing " + out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"richlab: palindromic richness of infinite words"};
  app.require_subcommand(1);

  std::string format = "text", out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", out, "write the report to a file");
  };

  auto* run_cmd = app.add_subcommand("run", "run a registered experiment");
  std::string experiment;
  std::vector<std::string> params;
  std::optional<std::size_t> horizon;
  run_cmd->add_option("experiment", experiment, "experiment name, optionally name(v1,v2,...)")->required();
  run_cmd->add_option("--param", params, "parameter k=v (repeatable)");
  run_cmd->add_option("--horizon", horizon, "prefix length");
  add_output(run_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "profile one word against one group");
  std::string word_expr, group_expr;
  std::size_t analyze_horizon = 10'000;
  std::optional<std::size_t> n_opt;
  analyze_cmd->add_option("--word", word_expr, "word expression")->required();
  analyze_cmd->add_option("--group", group_expr, "group expression")->required();
  analyze_cmd->add_option("--horizon", analyze_horizon, "prefix length")->capture_default_str();
  analyze_cmd->add_option("--n", n_opt, "largest audited factor length (default min(50, horizon/100))");
  add_output(analyze_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "print a prefix of a word");
  std::string gen_expr;
  std::size_t length = 0;
  gen_cmd->add_option("--word", gen_expr, "word expression")->required();
  gen_cmd->add_option("--length", length, "prefix length")->required();

  auto* list_cmd = app.add_subcommand("list", "list the registered experiments");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      ExperimentSpec spec = parse_experiment(experiment);
      for (const auto& kv : params) {
        auto const eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw error("--param expects k=v, got '" + kv + "'");
        spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      spec.horizon = horizon;
      Report const r = run(spec);
      emit(render(r, format), out);
      return r.passed() ? 0 : 1;
    }
    if (*analyze_cmd) {
      Report const r = analyze(word_expr, group_expr, analyze_horizon, n_opt);
      emit(render(r, format), out);
      return r.passed() ? 0 : 1;
    }
    if (*gen_cmd) {
      std::cout << to_string(prefix(parse_source(gen_expr), length)) << "\n";
      return 0;
    }
    if (*list_cmd) {
      for (const auto& d : catalog()) {
        std::cout << d.name;
        if (!d.params.empty()) {
          std::cout << " (";
          for (std::size_t i = 0; i < d.params.size(); ++i)
            std::cout << (i ? ", " : "") << d.params[i].name << "=" << d.params[i].default_value;
          std::cout << ")";
        }
        if (d.default_horizon) std::cout << " [horizon " << d.default_horizon << "]";
        std::cout << "\n    " << d.summary << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "richlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
