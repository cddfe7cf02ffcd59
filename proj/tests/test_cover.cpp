#include <gtest/gtest.h>

#include "zvk/cover.hpp"
#include "zvk/error.hpp"
#include "zvk/parse.hpp"

using namespace zvk;

namespace {

const Symbol a1("a1"), a2("a2"), a3("a3");

InvolutionWord iw(const std::string& text) { return involution_reduce(parse_word(text)); }

std::string lift_of(const std::string& braid) {
  return lift_monodromy(braid_action(parse_braid(braid, 3))).to_string();
}

}  // namespace

TEST(InvolutionReduce, Examples) {
  EXPECT_EQ(iw("a1 a1").size(), 0u);
  EXPECT_EQ(iw("a1^-1"), iw("a1"));
  EXPECT_EQ(iw("a1 a2 a2 a3"), iw("a1 a3"));
  EXPECT_THROW(iw("p"), Error);
}

TEST(Grade, Examples) {
  EXPECT_EQ(grade(InvolutionWord()), 0);
  EXPECT_EQ(grade(iw("a1")), 1);
  EXPECT_EQ(grade(iw("a1 a2")), 0);
}

TEST(RewriteToPQ, Generators) {
  EXPECT_EQ(rewrite_to_pq(iw("a1 a2")), parse_word("p"));
  EXPECT_EQ(rewrite_to_pq(iw("a3 a2")), parse_word("q"));
  EXPECT_EQ(rewrite_to_pq(iw("a1 a3")), parse_word("p q^-1"));
}

TEST(RewriteToPQ, OddLengthThrows) { EXPECT_THROW(rewrite_to_pq(iw("a1 a2 a3")), Error); }

TEST(RewriteToPQ, ExpandInverts) {
  EXPECT_EQ(expand_from_pq(parse_word("p q^-1")), iw("a1 a3"));
}

TEST(LiftMonodromy, Sigma2) { EXPECT_EQ(lift_of("s2"), "p -> p q, q -> q"); }

TEST(LiftMonodromy, MPlus) {
  EXPECT_EQ(lift_of("s1^-3 s2 s1^3"), "p -> p q p^3, q -> p^-4 q^-1 p^-4 q^-1 p^-1");
}

TEST(LiftMonodromy, MMinus) {
  const FreeEndo m = lift_monodromy(braid_action(parse_braid("s1^-1 s2^2 s1 s2^-2 s1")));
  const Word pq = parse_word("p q");
  const Word p2q = parse_word("p^2 q");
  const Word p2q_inv = parse_word("p^-2 q^-1");
  EXPECT_EQ(m.image(kernel_p()), pq.pow(2) * p2q.pow(2) * parse_word("p"));
  EXPECT_EQ(m.image(kernel_q()), parse_word("p^-1 q^-1") * p2q_inv.pow(3) * parse_word("p^-1 q^-1 p^-1"));
}

TEST(LiftMonodromy, RequiresFiberDomain) {
  EXPECT_THROW(lift_monodromy(FreeEndo::identity({kernel_p(), kernel_q()})), Error);
}

TEST(LiftMonodromy, GradeOneImageThrows) {
  // a1 -> a1 a2 is not grade-preserving, so it escapes the kernel.
  const FreeEndo bad({a1, a2, a3}, {parse_word("a1 a2"), parse_word("a2"), parse_word("a3")});
  EXPECT_THROW(lift_monodromy(bad), Error);
}

TEST(LiftMonodromy, FlippedConventionMissesMTilde1) {
  EXPECT_NE(lift_monodromy(braid_action(parse_braid("s2"), BraidConvention::Flipped)).to_string(),
            "p -> p q, q -> q");
}
