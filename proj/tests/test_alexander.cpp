#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "zvk/alexander.hpp"
#include "zvk/error.hpp"
#include "zvk/parse.hpp"
#include "zvk/pipeline.hpp"

using namespace zvk;

namespace {

LaurentPoly t_pow(std::int64_t k, long c = 1) { return LaurentPoly::monomial(k, c); }

// 1 - t + t^2
LaurentPoly cyclotomic6() { return t_pow(2) - t_pow(1) + LaurentPoly(1); }

Weights all_t(const Presentation& p) { return WeightedPresentation::uniform(p).weights; }

}  // namespace

TEST(LaurentPoly, Printing) {
  EXPECT_EQ(cyclotomic6().to_string(), "t^2 - t + 1");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(t_pow(-2, -3).to_string(), "-3*t^-2");
}

TEST(LaurentPoly, NormalizedShiftsAndFixesSign) {
  EXPECT_EQ((t_pow(-3, -1) + t_pow(-1, 2)).normalized(), LaurentPoly(1) - t_pow(2, 2));
}

TEST(LaurentPoly, GcdUsesContent) {
  const LaurentPoly a = cyclotomic6() * LaurentPoly(6) * (t_pow(1) + LaurentPoly(1));
  const LaurentPoly b = cyclotomic6() * LaurentPoly(4) * t_pow(-5);
  EXPECT_EQ(gcd(a, b), cyclotomic6() * LaurentPoly(2));
  EXPECT_EQ(gcd(LaurentPoly(), b), (cyclotomic6() * LaurentPoly(4)));
}

TEST(LaurentPoly, DeterminantMatchesCofactor) {
  const LaurentPoly t = t_pow(1), ti = t_pow(-1);
  const std::vector<std::vector<LaurentPoly>> m{{t, ti, LaurentPoly(2)},
                                                {LaurentPoly(1), t, LaurentPoly()},
                                                {ti, LaurentPoly(3), t}};
  // Expansion along the first row.
  const LaurentPoly expected = t * (t * t - LaurentPoly()) - ti * (LaurentPoly(1) * t - LaurentPoly() * ti) +
                               LaurentPoly(2) * (LaurentPoly(3) - t * ti);
  EXPECT_EQ(determinant(m), expected);
}

TEST(FoxDerivative, Examples) {
  const Symbol g("g"), s1("s1");
  EXPECT_EQ(fox_derivative(Word::generator(g), g, {{g, 1}}), LaurentPoly(1));
  const Presentation b3 = torus_braid_quotient();
  const Weights w = all_t(b3);
  EXPECT_EQ(fox_derivative(b3.relators()[0], s1, w), cyclotomic6());
  EXPECT_EQ(fox_derivative(b3.relators()[1], s1, w), LaurentPoly(1) + t_pow(2) + t_pow(4));
}

TEST(FoxDerivative, MatchesLetterOracle) {
  const Presentation b3 = torus_braid_quotient();
  const Weights w{{Symbol("s1"), 2}, {Symbol("s2"), -1}};
  for (const auto& r : b3.relators()) {
    for (Symbol g : b3.generators()) {
      LaurentPoly oracle;
      for (const auto& [k, c] : zvk::testing::fox_by_letters(r, g, w)) oracle += LaurentPoly::monomial(k, c);
      EXPECT_EQ(fox_derivative(r, g, w), oracle);
    }
  }
}

TEST(FoxDerivative, UnknownGeneratorThrows) {
  EXPECT_THROW(fox_derivative(parse_word("a b"), Symbol("a"), {{Symbol("a"), 1}}), Error);
}

TEST(AlexanderMatrix, TorusQuotient) {
  const auto m = alexander_matrix(WeightedPresentation::uniform(torus_braid_quotient()));
  const LaurentPoly c = LaurentPoly(1) + t_pow(2) + t_pow(4);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0][0], cyclotomic6());
  EXPECT_EQ(m[0][1], -cyclotomic6());
  EXPECT_EQ(m[1][0], c);
  EXPECT_EQ(m[1][1], t_pow(1) * c);
}

TEST(AlexanderMatrix, OneRelatorExamples) {
  const auto a6 = alexander_matrix(WeightedPresentation::uniform(parse_presentation("gens: a; rels: a^6")));
  EXPECT_EQ(a6[0][0].to_string(), "t^5 + t^4 + t^3 + t^2 + t + 1");
  const auto comm = alexander_matrix(
      WeightedPresentation::uniform(parse_presentation("gens: a, b; rels: a b a^-1 b^-1")));
  EXPECT_EQ(comm[0][0], LaurentPoly(1) - t_pow(1));
  EXPECT_EQ(comm[0][1], t_pow(1) - LaurentPoly(1));
}

TEST(AlexanderPolynomial, Examples) {
  const auto poly = [](const std::string& pres) {
    return alexander_polynomial(WeightedPresentation::uniform(parse_presentation(pres))).to_string();
  };
  EXPECT_EQ(alexander_polynomial(WeightedPresentation::uniform(torus_braid_quotient())).to_string(),
            "t^2 - t + 1");
  EXPECT_EQ(poly("gens: a; rels: a^6"), "1");
  EXPECT_EQ(poly("gens: s1, s2; rels: s1 s2 s1 s2^-1 s1^-1 s2^-1"), "t^2 - t + 1");
  // Trefoil via Wirtinger-style two-generator presentation.
  EXPECT_EQ(poly("gens: x, y; rels: x y x y^-1 x^-1 y^-1"), "t^2 - t + 1");
  // Too few relators: every (n-1)-minor vanishes.
  EXPECT_EQ(poly("gens: a, b, c; rels: a b a^-1 b^-1"), "0");
}

TEST(AlexanderPolynomial, WeightsValidated) {
  const Presentation p = parse_presentation("gens: a, b; rels: a b^-1");
  EXPECT_THROW(WeightedPresentation(p, {{Symbol("a"), 1}}), Error);
  const WeightedPresentation unbalanced(p, {{Symbol("a"), 1}, {Symbol("b"), 2}});
  EXPECT_FALSE(unbalanced.balanced());
  AlexanderOptions strict;
  strict.require_balanced = true;
  EXPECT_THROW(alexander_polynomial(unbalanced, strict), Error);
  EXPECT_NO_THROW(alexander_polynomial(unbalanced));
}

TEST(AlexanderPolynomial, SerialMatchesParallel) {
  const Presentation p = parse_presentation(
      "gens: a, b, c, d; rels: a b a^-1 c^-1, b c b^-1 d^-1, c d c^-1 a^-1, d a d^-1 b^-1");
  const auto m = alexander_matrix(WeightedPresentation::uniform(p));
  EXPECT_EQ(minors_gcd(m, 3, Execution::Serial), minors_gcd(m, 3, Execution::Parallel));
  EXPECT_EQ(minors_gcd(m, 2, Execution::Serial), minors_gcd(m, 2, Execution::Parallel));
}
