#include <gtest/gtest.h>

#include "richlab/experiments.hpp"

using namespace richlab;

TEST(Catalog, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto& d : catalog()) EXPECT_TRUE(names.insert(d.name).second) << d.name;
  for (const char* n : {"example-3-1", "pd-transfer", "tb2-rich", "rote-hrich", "tm-not-rrich", "welldoc-sturmian",
                        "asijo", "asijojednou", "gtm-tables", "s-tbm-rich", "s4", "oracle-suite"}) {
    EXPECT_TRUE(names.contains(n)) << n;
  }
  EXPECT_THROW(find_experiment("nope"), error);
}

TEST(Catalog, ParseExperiment) {
  auto const s = parse_experiment("gtm-tables(4,m=4)");
  EXPECT_EQ(s.name, "gtm-tables");
  EXPECT_EQ(s.params.at("b"), "4");
  EXPECT_EQ(s.params.at("m"), "4");
  EXPECT_EQ(parse_experiment("asijo").params.size(), 0u);
  EXPECT_THROW(parse_experiment("gtm-tables(1,2,3)"), error);
  EXPECT_THROW(parse_experiment("gtm-tables(4"), error);
}

TEST(Catalog, UnknownParameterAndHorizon) {
  EXPECT_THROW(run({"tb2-rich", {{"bogus", "1"}}, std::nullopt}), error);
  EXPECT_THROW(run({"example-3-1", {}, 100}), error);
  EXPECT_THROW(run({"pd-transfer", {}, 100}), error);
  EXPECT_THROW(run({"tb2-rich", {{"n", "x"}}, std::nullopt}), error);
}

namespace {

Report small(const std::string& name, std::map<std::string, std::string> params, std::size_t horizon) {
  return run({name, std::move(params), horizon});
}

}  // namespace

TEST(Smoke, SmallHorizons) {
  EXPECT_TRUE(small("pd-transfer", {{"n", "20"}}, 5000).passed());
  EXPECT_TRUE(small("tb2-rich", {{"n", "20"}, {"b", "2,3"}}, 5000).passed());
  EXPECT_TRUE(small("rote-hrich", {{"n", "20"}, {"window", "10"}}, 5000).passed());
  EXPECT_TRUE(small("tm-not-rrich", {{"n", "10"}, {"cap", "12"}}, 4096).passed());
  EXPECT_TRUE(small("welldoc-sturmian", {{"n", "4"}, {"budget", "2000"}}, 6000).passed());
  EXPECT_TRUE(small("asijo", {{"k", "2"}, {"b", "2"}}, 5000).passed());
  EXPECT_TRUE(small("gtm-tables", {{"b", "3"}, {"m", "3"}}, 5000).passed());
  EXPECT_TRUE(small("s-tbm-rich", {{"n", "20"}, {"window", "10"}}, 5000).passed());
  EXPECT_TRUE(small("s4", {{"n", "20"}, {"k", "3"}}, 5000).passed());
}

TEST(Smoke, OracleSuite) {
  auto const r = run({"oracle-suite", {{"binary_length", "8"}, {"psi_length", "5"}, {"words", "10"}, {"length", "50"},
                                       {"s_length", "8"}, {"pq_length", "8"}},
                      std::nullopt});
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.assertions().empty());
}

TEST(Smoke, ExampleReportsItsFindings) {
  auto const r = run({"example-3-1", {}, std::nullopt});
  std::map<std::string, bool> by_name;
  for (const auto& a : r.assertions()) by_name[a.name] = a.passed;
  EXPECT_TRUE(by_name.at("D^R = 2"));
  EXPECT_TRUE(by_name.at("D^H = 0"));
  EXPECT_TRUE(by_name.at("palindromic tree agrees with brute-force enumeration"));
}

TEST(Smoke, ReportsAreDeterministic) {
  auto const a = render(small("gtm-tables", {}, 5000), "json");
  auto const b = render(small("gtm-tables", {}, 5000), "json");
  EXPECT_EQ(a, b);
}

TEST(Smoke, HorizonTooSmall) { EXPECT_THROW(small("pd-transfer", {{"n", "100"}}, 1000), error); }
