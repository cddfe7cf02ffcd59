#include <gtest/gtest.h>

#include <random>

#include "support/random.hpp"
#include "zvk/error.hpp"
#include "zvk/parse.hpp"

using namespace zvk;

namespace {

template <typename F>
std::pair<std::size_t, std::size_t> error_position(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError raised";
  return {0, 0};
}

}  // namespace

TEST(ParseWord, Examples) {
  const Word w = parse_word("p q^-1 p^3");
  EXPECT_EQ(w, (Word{{Symbol("p"), 1}, {Symbol("q"), -1}, {Symbol("p"), 3}}));
  EXPECT_EQ(parse_word("1"), Word{});
  EXPECT_EQ(parse_word("  g+^-1 p g+  ").to_string(), "g+^-1 p g+");
  // Free reduction happens on construction.
  EXPECT_EQ(parse_word("p q q^-1 p^-1"), Word{});
}

TEST(ParseWord, Errors) {
  EXPECT_EQ(error_position([] { parse_word("p q^0"); }), std::make_pair(1ul, 5ul));
  EXPECT_EQ(error_position([] { parse_word("p ^2"); }), std::make_pair(1ul, 3ul));
  EXPECT_THROW(parse_word("p r", {Symbol("p"), Symbol("q")}), ParseError);
  EXPECT_THROW(parse_word(""), ParseError);
}

TEST(ParseWord, RoundTrip) {
  zvk::testing::Rng rng(7);
  const std::vector<Symbol> gens{Symbol("p"), Symbol("q"), Symbol("g+"), Symbol("g-")};
  for (int i = 0; i < 200; ++i) {
    const Word w = zvk::testing::random_word(rng, gens, 12, 4);
    EXPECT_EQ(parse_word(w.empty() ? "1" : w.to_string()), w);
  }
}

TEST(ParseBraid, InfersStrands) {
  const BraidWord b = parse_braid("s1^-3 s2 s1^3");
  EXPECT_EQ(b.strands(), 3);
  EXPECT_EQ(b.letters().size(), 7u);
  EXPECT_EQ(parse_braid("s1").strands(), 2);
  EXPECT_EQ(parse_braid("s1", 4).strands(), 4);
  EXPECT_THROW(parse_braid("s0"), ParseError);
  EXPECT_THROW(parse_braid("s3", 3), Error);
  EXPECT_THROW(parse_braid("t1"), ParseError);
}

TEST(ParsePresentation, Examples) {
  const Presentation p = parse_presentation("gens: p, q, g+; rels: p^9, g+^-1 p g+ p^-4");
  EXPECT_EQ(p.generators().size(), 3u);
  EXPECT_EQ(p.relators().size(), 2u);
  EXPECT_EQ(parse_presentation(p.to_string()), p);
  EXPECT_EQ(parse_presentation("gens: a; rels:").relators().size(), 0u);
}

TEST(ParsePresentation, Errors) {
  EXPECT_THROW(parse_presentation("gens: a; rels: b"), ParseError);
  EXPECT_THROW(parse_presentation("gens: a, a; rels: a"), Error);
  EXPECT_THROW(parse_presentation("rels: a"), ParseError);
  const auto pos = error_position([] { parse_presentation("# comment\ngens: a; rels: a^0"); });
  EXPECT_EQ(pos.first, 2u);
}

TEST(ParsePolynomial, Examples) {
  const MultiPoly f = parse_polynomial("y^3 + y^2 + x^2 - 4/27");
  EXPECT_EQ(f.to_string(), "x^2 + y^3 + y^2 - 4/27");
  EXPECT_EQ(parse_polynomial("2x(y + 1)"), parse_polynomial("2*x*y + 2*x"));
  EXPECT_EQ(parse_polynomial("-(x - 1)^2"), parse_polynomial("-x^2 + 2*x - 1"));
  EXPECT_EQ(parse_polynomial("x/2"), parse_polynomial("1/2*x"));
  EXPECT_EQ(parse_polynomial("eps^3"), MultiPoly(QEps(1), Field::Eisenstein));
  EXPECT_EQ(parse_polynomial("eps x").field(), Field::Eisenstein);
}

TEST(ParsePolynomial, Errors) {
  EXPECT_THROW(parse_polynomial("x/y"), ParseError);
  EXPECT_THROW(parse_polynomial("x/0"), Error);
  EXPECT_THROW(parse_polynomial("x^"), ParseError);
  EXPECT_THROW(parse_polynomial("(x + 1"), ParseError);
}

TEST(ParsePolynomial, RoundTrip) {
  for (const char* s : {"x^2 + y^3 + y^2 - 4/27", "(1/3)*eps*x + y", "b^15 - 3*b + 1"}) {
    const MultiPoly f = parse_polynomial(s);
    EXPECT_EQ(parse_polynomial(f.to_string()), f) << s;
  }
}

TEST(ParseWeights, Examples) {
  const std::vector<Symbol> gens{Symbol("g"), Symbol("p")};
  const Weights w = parse_weights("g=1, p=0", gens);
  EXPECT_EQ(w.at(Symbol("g")), 1);
  EXPECT_EQ(w.at(Symbol("p")), 0);
  EXPECT_EQ(parse_weights("g=-2,p=3", gens).at(Symbol("g")), -2);
  EXPECT_THROW(parse_weights("h=1", gens), ParseError);
  EXPECT_THROW(parse_weights("g=1,g=2", gens), ParseError);
}

TEST(ParseZvkInput, Example) {
  const ZvkInput in = parse_zvk_input(
      "# reference sextic\n"
      "kept: s2\n"
      "\n"
      "removed g+: s1^-3 s2 s1^3\n");
  ASSERT_EQ(in.kept.size(), 1u);
  EXPECT_EQ(in.kept[0].strands(), 3);
  ASSERT_EQ(in.removed.size(), 1u);
  EXPECT_EQ(in.removed[0].first, Symbol("g+"));
  const auto pos = error_position([] { parse_zvk_input("kept: s2\nkeep: s1\n"); });
  EXPECT_EQ(pos, std::make_pair(2ul, 1ul));
}
