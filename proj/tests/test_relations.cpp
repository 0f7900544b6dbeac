#include "support.hpp"

#include <gtest/gtest.h>

using namespace agl;

namespace {

void expect_all_pass(const VerificationReport& r)
{
  for (const auto& c : r.results)
    EXPECT_TRUE(c.passed) << c.id << ": " << c.anchor << (c.witness ? " residual " + c.witness->to_string() : "");
}

const CheckResult& find(const VerificationReport& r, const std::string& id)
{
  for (const auto& c : r.results)
    if (c.id == id)
      return c;
  throw std::out_of_range("no check " + id);
}

}  // namespace

TEST(VerifyIdentity, PassAndFail)
{
  const TriangleContext ctx(2);
  const SkewElement h1 = build_Xkk(ctx, 1), h2 = build_Xkk(ctx, 2);
  EXPECT_TRUE(verify_identity("same", "X11 = X11", h1, h1).passed);
  EXPECT_TRUE(verify_identity("bracket", "[X1+, X1-] = X11 - X22",
                              commutator(build_X(ctx, 1, Sign::plus), build_X(ctx, 1, Sign::minus)), h1 - h2)
                  .passed);
  const CheckResult bad = verify_identity("bad", "X11 = X22", h1, h2);
  EXPECT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(*bad.witness, h1 - h2);
}

TEST(Suites, Gl2)
{
  const VerificationReport r = suite_gl2(TriangleContext(2));
  EXPECT_EQ(r.results.size(), 22U);
  expect_all_pass(r);
  EXPECT_TRUE(find(r, "gwa-yx").passed);
  EXPECT_TRUE(find(r, "swap2-negates[V2]").passed);
}

TEST(Suites, Gl2InsideGl3)
{
  expect_all_pass(suite_gl2(TriangleContext(3)));
}

TEST(Suites, Gl3)
{
  const VerificationReport r = suite_gl3();
  expect_all_pass(r);
  EXPECT_GE(r.results.size(), 70U);
  for (const char* family : {"(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)", "(viii)", "(ix)"}) {
    bool seen = false;
    for (const auto& c : r.results)
      seen = seen || c.id.rfind(family, 0) == 0;
    EXPECT_TRUE(seen) << family;
  }
}

TEST(Suites, InvariantsAndLocalized)
{
  expect_all_pass(suite_invariants_and_counterexamples());
  const VerificationReport loc = suite_localized();
  EXPECT_EQ(loc.results.size(), 6U);
  expect_all_pass(loc);
}

TEST(Suites, RunSuiteDispatch)
{
  EXPECT_TRUE(run_suite("all", 3).passed());
  EXPECT_EQ(run_suite("all", 2).results.size(), 22U);
  EXPECT_THROW(run_suite("gl3", 2), std::invalid_argument);
  EXPECT_THROW(run_suite("nope", 3), std::invalid_argument);
}

TEST(Suites, UglPresentationHoldsForN4)
{
  const TriangleContext ctx(4);
  auto env = skew_env(ctx);
  auto rels = ugl_relations<SkewElement>(4);
  auto vrels = vandermonde_relations<SkewElement>(4);
  rels.insert(rels.end(), vrels.begin(), vrels.end());
  expect_all_pass(run_relations("gl4", rels, env));
}

TEST(KnownValues, CommutatorExamples)
{
  const TriangleContext ctx(3);
  auto env = skew_env(ctx);
  EXPECT_TRUE(commutator(env("V3"), env("A21+")).is_zero());
  EXPECT_EQ(commutator(env("V2"), env("A22+")), -env("A22+"));
  EXPECT_EQ(commutator(env("V2"), env("A21+")), env("A21+"));
  EXPECT_EQ(commutator(env("A11-"), env("A22-")), a11m_a22m_commutator());
  // the right coefficient carries no x11
  for (const auto& [mu, alpha] : a11m_a22m_commutator().right_form())
    for (VarId w : alpha.num().variables())
      EXPECT_NE(w.row, 1);
}

TEST(LiteralForms, V2IdentityOrientationFlipsSign)
{
  const TriangleContext ctx(3);
  auto env = skew_env(ctx);
  for (Sign s : both_signs) {
    const std::string p(1, sign_char(s));
    const SkewElement literal = Rational(sign_value(s)) * commutator(env("X2" + p), env("V2"));
    EXPECT_EQ(literal, -env("Xt2" + p));
  }
}

TEST(LiteralForms, NegatedA11mA22mBracketLeavesResidual)
{
  const TriangleContext ctx(3);
  auto env = skew_env(ctx);
  const SkewElement residual = commutator(env("A11-"), env("A22-")) - (-a11m_a22m_commutator());
  EXPECT_EQ(residual, Rational(2) * a11m_a22m_commutator());
}

TEST(LiteralForms, CenterConstantMinusOneDiffersByTwo)
{
  const TriangleContext ctx(2);
  const SkewElement v2 = build_V(ctx, 2);
  EXPECT_EQ(v2 * v2, gl2_center_combination(ctx, 1));
  EXPECT_EQ(v2 * v2 - gl2_center_combination(ctx, -1), SkewElement(2));
}

TEST(KnownValues, ExampleProductDisplay)
{
  const TriangleContext ctx(3);
  const SkewElement prod = build_A(ctx, 2, 1, Sign::plus) * build_A(ctx, 2, 1, Sign::minus);
  ASSERT_TRUE(prod.is_degree_zero());
  // independent check at a point
  const auto at = agl::testing::at_point({Rational(1, 3), Rational(2), Rational(-5, 7), Rational(3), Rational(1, 2), Rational(11, 5)});
  auto X = [&](int k, int i) { return at(VarId::triangle(k, i)); };
  Rational expected = -1;
  for (int i = 1; i <= 3; ++i)
    expected *= X(3, i) - X(2, 1) + 1;
  expected *= (X(1, 1) - X(2, 1)) / ((X(2, 2) - X(2, 1) + 1) * (X(2, 2) - X(2, 1)));
  EXPECT_EQ(prod.coefficient(ShiftVector{}).evaluate(at), expected);
  EXPECT_EQ(prod.coefficient(ShiftVector{}), example_product_display());
}

TEST(KnownValues, FourfoldProductIsSymmetricWithDenominator)
{
  const TriangleContext ctx(3);
  auto env = skew_env(ctx);
  const SkewElement four = env("A21+") * env("A21-") * env("A22+") * env("A22-");
  EXPECT_EQ(group_act(RowPermutation::transposition(3, 2, 1, 2), four), four);
  EXPECT_FALSE(four.coefficient(ShiftVector{}).den().empty());
}

TEST(Reports, FailureCount)
{
  VerificationReport r{"x", {}};
  r.results.push_back(verify_identity("a", "1 = 1", SkewElement(1), SkewElement(1)));
  r.results.push_back(verify_identity("b", "1 = 2", SkewElement(1), SkewElement(2)));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 1U);
}
