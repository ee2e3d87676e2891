#include <gtest/gtest.h>

#include "richlab/report.hpp"

using namespace richlab;

namespace {

Report sample() {
  Report r("sample", json{{"n", 3}});
  auto& s = r.section("counts", 1000, 5);
  s.values["word"] = "0110";
  s.tables.push_back(Table{"t", {"n", "label"}, {{1, "a,b"}, {2, "plain"}}});
  r.section("prefix", 1000).values["defect"] = 0;
  r.check("first", true);
  r.check("second", false, "because");
  return r;
}

}  // namespace

TEST(Report, PassedIsConjunction) {
  Report r("x");
  EXPECT_TRUE(r.passed());
  r.check("a", true);
  EXPECT_TRUE(r.passed());
  r.check("b", false);
  EXPECT_FALSE(r.passed());
}

TEST(Report, Reliability) {
  Section s{"s", 1000, 10, json::object(), {}};
  EXPECT_TRUE(s.reliable());
  s.n_max = 11;
  EXPECT_FALSE(s.reliable());
  s.n_max.reset();
  EXPECT_TRUE(s.reliable());
}

TEST(Report, JsonShape) {
  json const j = to_json(sample());
  EXPECT_EQ(j["experiment"], "sample");
  EXPECT_EQ(j["sections"].size(), 2u);
  EXPECT_EQ(j["sections"][0]["horizon"]["n_max"], 5);
  EXPECT_TRUE(j["sections"][0]["horizon"]["reliable"].get<bool>());
  EXPECT_TRUE(j["sections"][1]["horizon"]["n_max"].is_null());
  EXPECT_EQ(j["assertions"][1]["detail"], "because");
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(json::parse(render_json(sample())), j);
}

TEST(Report, TextAndCsv) {
  std::string const t = render_text(sample());
  EXPECT_NE(t.find("== counts [prefix 1000, n <= 5 (reliable)]"), std::string::npos);
  EXPECT_NE(t.find("[FAIL] second -- because"), std::string::npos);
  EXPECT_NE(t.find("result: FAIL"), std::string::npos);
  std::string const c = render_csv(sample());
  EXPECT_NE(c.find("# sample / counts / t [prefix 1000, n <= 5 (reliable)]"), std::string::npos);
  EXPECT_NE(c.find("1,\"a,b\""), std::string::npos);
  EXPECT_NE(c.find("second,false,because"), std::string::npos);
}

TEST(Report, Deterministic) {
  for (const char* f : {"text", "json", "csv"}) EXPECT_EQ(render(sample(), f), render(sample(), f));
  EXPECT_THROW(render(sample(), "xml"), error);
}
