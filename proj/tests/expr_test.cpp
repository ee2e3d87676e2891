#include <gtest/gtest.h>

#include "richlab/expr.hpp"

using namespace richlab;

TEST(ParseSource, Basics) {
  EXPECT_EQ(prefix(parse_source("tm(2,2)"), 50), prefix(thue_morse(2, 2), 50));
  EXPECT_EQ(prefix(parse_source(" S( tm(3,4) ) "), 50), prefix(WordSource::s_image(thue_morse(3, 4)), 50));
  EXPECT_EQ(prefix(parse_source("pd"), 50), prefix(period_doubling_source(), 50));
  EXPECT_EQ(prefix(parse_source("sturmian()"), 50), prefix(sturmian_source(), 50));
  EXPECT_EQ(prefix(parse_source("rote()"), 50), prefix(rote_source(), 50));
  EXPECT_EQ(prefix(parse_source("sturmian(2/5)"), 50), prefix(sturmian_source(2, 5), 50));
  EXPECT_EQ(prefix(parse_source("Sinv(sturmian(),1)"), 50), prefix(iterate_s_preimage(sturmian_source(), 1, 1), 50));
}

TEST(ParseSource, MorphicAndExplicit) {
  EXPECT_EQ(prefix(parse_source("fix(0->01,1->10;0)"), 64), prefix(thue_morse(2, 2), 64));
  WordSource const p = parse_source("periodic(13;4)");
  EXPECT_EQ(p.alphabet().modulus(), 4u);
  EXPECT_EQ(to_string(prefix(p, 5)), "13131");
  WordSource const w = parse_source("word(0110)");
  EXPECT_EQ(w.length_limit(), std::optional<std::size_t>(4));
  EXPECT_EQ(parse_source("word()").length_limit(), std::optional<std::size_t>(0));
  EXPECT_EQ(parse_source("periodic(0.11.3)").alphabet().modulus(), 12u);
}

TEST(ParseSource, Errors) {
  for (const char* bad : {"", "tm(1,2)", "tm(2,2", "tm(2,2)x", "fix(0->01;0)", "fix(0->01,0->10;0)",
                          "periodic(13;3)", "sturmian(3/2)", "Sinv(tm(2,2),2)", "foo", "S()"}) {
    EXPECT_THROW(parse_source(bad), error) << bad;
  }
}

TEST(Describe, RoundTrips) {
  for (const char* e : {"tm(3,4)", "S(tm(4,4))", "pd", "sturmian()", "rote()", "sturmian(2/5)", "periodic(13;4)",
                        "word(0110)", "Sinv(S(tm(2,2)),1)", "fix(0->012,1->12,2->0;0)", "S(S(tm(3,4)))"}) {
    WordSource const src = parse_source(e);
    WordSource const again = parse_source(describe(src));
    std::size_t const n = src.length_limit().value_or(500);
    EXPECT_EQ(prefix(again, n), prefix(src, n)) << e << " -> " << describe(src);
    EXPECT_EQ(describe(again), describe(src));
  }
}

TEST(ParseGroup, Names) {
  EXPECT_EQ(parse_group("R", 2).size(), 2u);
  EXPECT_EQ(parse_group("H", 2).size(), 4u);
  EXPECT_EQ(parse_group("E", 2).antimorphisms().front(), SymmetryElement::psi(1, 2));
  EXPECT_EQ(parse_group("I2(5)", 5).size(), 10u);
  EXPECT_EQ(parse_group("I2p(4)", 4).size(), 4u);
  auto const g = parse_group("gen(psi:0, pi:2)", 4);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.label(), "gen(psi:0,pi:2)");
}

TEST(ParseGroup, Errors) {
  EXPECT_THROW(parse_group("I2(4)", 5), error);
  EXPECT_THROW(parse_group("E", 3), error);
  EXPECT_THROW(parse_group("gen(pi:1)", 4), error);
  EXPECT_THROW(parse_group("gen(psi:9)", 4), error);
  EXPECT_THROW(parse_group("X", 2), error);
}
