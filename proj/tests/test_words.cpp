#include <gtest/gtest.h>

#include "zvk/error.hpp"
#include "zvk/parse.hpp"
#include "zvk/words.hpp"

using namespace zvk;

namespace {

const Symbol a("a"), p("p"), q("q");
const Symbol a1("a1"), a2("a2"), a3("a3");

FreeEndo endo(const std::string& pimg, const std::string& qimg) {
  return FreeEndo({p, q}, {parse_word(pimg), parse_word(qimg)});
}

}  // namespace

TEST(Reduce, CancelsInverse) { EXPECT_TRUE((Word{{a, 1}, {a, -1}}).empty()); }

TEST(Reduce, MergesExponents) {
  EXPECT_EQ((Word{{p, 1}, {q, 1}, {q, -1}, {p, 1}}), Word::generator(p, 2));
}

TEST(Reduce, InnerCancellation) {
  EXPECT_EQ((Word{{a1, 1}, {a2, 1}, {a2, -1}, {a3, 1}}), (Word{{a1, 1}, {a3, 1}}));
}

TEST(Word, LengthInverseAndPower) {
  const Word w = parse_word("p q^-1 p^3");
  EXPECT_EQ(w.length(), 5);
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(w.pow(3), w * w * w);
  EXPECT_EQ(w.pow(-2), w.inverse() * w.inverse());
  EXPECT_EQ(w.exponent_sum(p), 4);
  EXPECT_EQ(Word().to_string(), "1");
}

TEST(Word, CyclicReductionAndRotation) {
  const Word w = parse_word("q p^2 q^-1");
  EXPECT_EQ(w.cyclically_reduced(), Word::generator(p, 2));
  const Word r = parse_word("p q^-1 p^3 q");
  EXPECT_EQ(r.rotated(1), parse_word("q^-1 p^3 q p"));
}

TEST(Word, ExponentOverflowThrows) {
  const Word big = Word::generator(p, std::numeric_limits<Exponent>::max());
  EXPECT_THROW(big * Word::generator(p, 1), Error);
}

TEST(FreeEndo, ApplyLiftOfSigma2) {
  const FreeEndo m = endo("p q", "q");
  EXPECT_EQ(m.apply(parse_word("p")), parse_word("p q"));
  EXPECT_EQ(m.apply(parse_word("p q^-1")), parse_word("p"));
}

TEST(FreeEndo, IdentityFixesWords) {
  const FreeEndo id = FreeEndo::identity({p, q});
  const Word w = parse_word("p q^-2 p^5 q");
  EXPECT_EQ(id.apply(w), w);
}

TEST(FreeEndo, UnknownGeneratorThrows) {
  EXPECT_THROW(endo("p q", "q").apply(parse_word("a")), Error);
  EXPECT_THROW(FreeEndo({p, q}, {parse_word("a"), parse_word("q")}), Error);
}

TEST(Compose, WithIdentity) {
  const FreeEndo e = endo("p q p^3", "p^-4 q^-1");
  EXPECT_EQ(compose(e, FreeEndo::identity({p, q})), e);
  EXPECT_EQ(compose(FreeEndo::identity({p, q}), e), e);
}

TEST(Compose, DomainMismatchThrows) {
  EXPECT_THROW(compose(FreeEndo::identity({p, q}), FreeEndo::identity({a})), Error);
}

TEST(Compose, Sigma1WithItsInverse) {
  const BraidWord s1(3, {{1, 1}});
  EXPECT_EQ(compose(braid_action(s1), braid_action(s1.inverse())),
            FreeEndo::identity(fiber_generators(3)));
}

TEST(BraidAction, Sigma2) {
  const FreeEndo m = braid_action(parse_braid("s2"));
  EXPECT_EQ(m.to_string(), "a1 -> a1, a2 -> a2 a3 a2^-1, a3 -> a2");
  EXPECT_TRUE(m.is_automorphism());
}

TEST(BraidAction, EmptyBraidIsIdentity) {
  EXPECT_EQ(braid_action(BraidWord(3)), FreeEndo::identity(fiber_generators(3)));
}

TEST(BraidAction, BraidRelation) {
  EXPECT_EQ(braid_action(parse_braid("s1 s2 s1")), braid_action(parse_braid("s2 s1 s2")));
}

TEST(BraidAction, FlippedConventionDiffers) {
  const BraidWord b = parse_braid("s2");
  EXPECT_NE(braid_action(b, BraidConvention::Flipped), braid_action(b));
  // The flipped generator is the standard action of the inverse letter.
  EXPECT_EQ(braid_action(b, BraidConvention::Flipped), braid_action(b.inverse()));
}

TEST(BraidWord, Validation) {
  EXPECT_THROW(BraidWord(3, {{3, 1}}), Error);
  EXPECT_THROW(BraidWord(3, {{1, 2}}), Error);
  EXPECT_THROW(BraidWord(3, {{1, 1}}).with_strands(2), Error);
  EXPECT_EQ(BraidWord(3, {{1, 1}, {2, -1}}).to_string(), "s1 s2^-1");
}
