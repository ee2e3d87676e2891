#pragma once

// Experiment reports: sections of values and tables, each tagged with its horizon, plus pass/fail assertions.
// Rendered as text, JSON or CSV; output depends only on the report contents.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "richlab/factor_index.hpp"
#include "richlab/source.hpp"

namespace richlab {

using json = nlohmann::ordered_json;

inline constexpr const char* version = "0.1.0";

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Section {
  std::string title;
  std::size_t prefix_length = 0;
  std::optional<std::size_t> n_max;  // absent for prefix-level values
  json values = json::object();
  std::vector<Table> tables;

  /// Length statistics count as reliable when n_max <= prefix_length / ratio.
  [[nodiscard]] bool reliable(std::size_t ratio = default_reliability_ratio) const {
    return !n_max || *n_max * ratio <= prefix_length;
  }
};

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

class Report {
 public:
  explicit Report(std::string experiment, json params = json::object())
      : experiment_(std::move(experiment)), params_(std::move(params)) {}

  Section& section(std::string title, std::size_t prefix_length, std::optional<std::size_t> n_max = std::nullopt) {
    sections_.push_back(Section{std::move(title), prefix_length, n_max, json::object(), {}});
    return sections_.back();
  }
  bool check(std::string name, bool passed, std::string detail = {}) {
    assertions_.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }

  [[nodiscard]] const std::string& experiment() const noexcept { return experiment_; }
  [[nodiscard]] const json& params() const noexcept { return params_; }
  [[nodiscard]] const std::vector<Section>& sections() const noexcept { return sections_; }
  [[nodiscard]] const std::vector<Assertion>& assertions() const noexcept { return assertions_; }
  [[nodiscard]] bool passed() const {
    for (const auto& a : assertions_)
      if (!a.passed) return false;
    return true;
  }

 private:
  std::string experiment_;
  json params_;
  std::vector<Section> sections_;
  std::vector<Assertion> assertions_;
};

inline json environment_stamp() {
  return json{{"tool", "richlab"}, {"version", version}, {"max_prefix", max_prefix_from_env()},
              {"reliability_ratio", default_reliability_ratio}};
}

inline json to_json(const Report& r) {
  json doc;
  doc["experiment"] = r.experiment();
  doc["params"] = r.params();
  doc["environment"] = environment_stamp();
  json sections = json::array();
  for (const auto& s : r.sections()) {
    json js;
    js["title"] = s.title;
    js["horizon"] = {{"prefix_length", s.prefix_length},
                     {"n_max", s.n_max ? json(*s.n_max) : json(nullptr)},
                     {"reliable", s.reliable()}};
    js["values"] = s.values;
    json tables = json::array();
    for (const auto& t : s.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
    js["tables"] = tables;
    sections.push_back(js);
  }
  doc["sections"] = sections;
  json asserts = json::array();
  for (const auto& a : r.assertions()) asserts.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  doc["assertions"] = asserts;
  doc["passed"] = r.passed();
  return doc;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace detail {

inline std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string csv_cell(const json& v) {
  std::string s = cell(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string horizon_text(const Section& s) {
  std::string h = "prefix " + std::to_string(s.prefix_length);
  if (s.n_max) h += ", n <= " + std::to_string(*s.n_max) + (s.reliable() ? " (reliable)" : " (beyond reliable range)");
  return h;
}

}  // namespace detail

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "experiment: " << r.experiment() << "\n";
  if (!r.params().empty()) out << "params: " << r.params().dump() << "\n";
  out << "environment: " << environment_stamp().dump() << "\n";
  for (const auto& s : r.sections()) {
    out << "\n== " << s.title << " [" << detail::horizon_text(s) << "]\n";
    for (const auto& [k, v] : s.values.items()) out << "  " << k << ": " << detail::cell(v) << "\n";
    for (const auto& t : s.tables) {
      out << "  -- " << t.name << "\n";
      std::vector<std::size_t> width;
      for (const auto& c : t.columns) width.push_back(c.size());
      for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
          width[i] = std::max(width[i], detail::cell(row[i]).size());
      auto line = [&](const std::vector<std::string>& cells) {
        out << "  ";
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "") << std::string(width[i] - std::min(width[i], cells[i].size()), ' ') << cells[i];
        }
        out << "\n";
      };
      line(t.columns);
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& v : row) cells.push_back(detail::cell(v));
        line(cells);
      }
    }
  }
  out << "\nassertions:\n";
  for (const auto& a : r.assertions()) {
    out << "  [" << (a.passed ? "PASS" : "FAIL") << "] " << a.name;
    if (!a.detail.empty()) out << " -- " << a.detail;
    out << "\n";
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

/// Every table as CSV, each preceded by a comment line naming its section and horizon.
inline std::string render_csv(const Report& r) {
  std::ostringstream out;
  for (const auto& s : r.sections()) {
    for (const auto& t : s.tables) {
      out << "# " << r.experiment() << " / " << s.title << " / " << t.name << " [" << detail::horizon_text(s)
          << "]\n";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << detail::csv_cell(t.columns[i]);
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_cell(row[i]);
        out << "\n";
      }
    }
  }
  out << "# assertions\nname,passed,detail\n";
  for (const auto& a : r.assertions()) {
    out << detail::csv_cell(a.name) << "," << (a.passed ? "true" : "false") << "," << detail::csv_cell(a.detail) << "\n";
  }
  return out.str();
}

inline std::string render(const Report& r, std::string_view format) {
  if (format == "text") return render_text(r);
  if (format == "json") return render_json(r);
  if (format == "csv") return render_csv(r);
  throw error("unknown report format '" + std::string(format) + "' (text, json or csv)");
}

}  // namespace richlab
