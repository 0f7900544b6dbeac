#include "support.hpp"

#include <gtest/gtest.h>

using namespace agl;
using agl::testing::Gen;
using agl::testing::at_point;

namespace {

Poly v(int k, int i) { return Poly::var(VarId::triangle(k, i)); }
constexpr int kTrials = 1000;

RatFunc by_shift(const RatFunc& p, VarId var, long power) { return apply_shift(p, ShiftVector::unit(var, power)); }

}  // namespace

TEST(Rational, ParseAndPrint)
{
  EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational(" 4 ")), "4");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(pow(make_rational(2, 3), 3), make_rational(8, 27));
}

TEST(Poly, DifferenceOfSquares)
{
  EXPECT_EQ((v(2, 1) + v(2, 2)) * (v(2, 1) - v(2, 2)), v(2, 1) * v(2, 1) - v(2, 2) * v(2, 2));
}

TEST(Poly, AdditiveIdentityAndExpansion)
{
  const Poly p = v(1, 1) * v(2, 2) + Poly(3);
  EXPECT_EQ(p + Poly{}, p);
  EXPECT_EQ(v(1, 1) * (v(1, 1) - Poly(1)), v(1, 1).pow(2) - v(1, 1));
  EXPECT_EQ((v(1, 1) * (v(1, 1) - Poly(1))).to_string(), "x11^2 - x11");
}

TEST(Poly, ExactDivision)
{
  const auto d21_22 = LinearFactor::difference(VarId::triangle(2, 1), VarId::triangle(2, 2), 0);
  ASSERT_EQ(d21_22.first, 1);
  const auto q = (v(2, 1).pow(2) - v(2, 2).pow(2)).exact_div(d21_22.second);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, v(2, 1) + v(2, 2));
  EXPECT_FALSE((v(2, 1) + Poly(1)).exact_div(d21_22.second));

  const auto d11_21 = LinearFactor::difference(VarId::triangle(1, 1), VarId::triangle(2, 1), 0);
  const Poly num = (v(1, 1) - v(2, 1)) * (v(2, 2) - v(2, 1));
  const auto q2 = num.exact_div(d11_21.second);
  ASSERT_TRUE(q2);
  EXPECT_EQ(Rational(d11_21.first) * *q2, v(2, 2) - v(2, 1));
}

TEST(Shift, ShiftOfDifference)
{
  const RatFunc v2 = v(2, 1) - v(2, 2);
  EXPECT_EQ(by_shift(v2, VarId::triangle(2, 1), 1), RatFunc(v(2, 1) - v(2, 2) - Poly(1)));
  EXPECT_EQ(apply_shift(v2, ShiftVector{}), v2);
}

TEST(Shift, ShiftMatchesSubstitutionOracle)
{
  const Poly p = -(v(2, 1) - v(1, 1)) * (v(2, 2) - v(1, 1));
  const Poly expected = -(v(2, 1) - v(1, 1) + Poly(1)) * (v(2, 2) - v(1, 1) + Poly(1));
  EXPECT_EQ(by_shift(RatFunc(p), VarId::triangle(1, 1), 1), RatFunc(expected));
  const Poly substituted = p.substitute([](VarId w) -> std::optional<Poly> {
    if (w == VarId::triangle(1, 1))
      return v(1, 1) - Poly(1);
    return std::nullopt;
  });
  EXPECT_EQ(substituted, expected);
}

TEST(Shift, DenominatorStaysLinear)
{
  const RatFunc r = RatFunc::reciprocal(LinearFactor::difference(VarId::triangle(2, 1), VarId::triangle(2, 2), 0).second);
  const RatFunc s = by_shift(r, VarId::triangle(2, 2), -3);
  ASSERT_EQ(s.den().size(), 1U);
  EXPECT_EQ(s.den().front().first.c(), Rational(-3));
}

TEST(Permutation, ActionOnSpecialPolynomials)
{
  const auto t = RowPermutation::transposition(3, 2, 1, 2);
  EXPECT_EQ(apply_permutation(RatFunc(vandermonde(2)), t), RatFunc(-vandermonde(2)));
  EXPECT_EQ(apply_permutation(RatFunc(v(2, 1) * v(1, 1)), RowPermutation::identity(3)), RatFunc(v(2, 1) * v(1, 1)));
  const auto c = RowPermutation::three_cycle(3, 3, 1, 2, 3);
  EXPECT_EQ(apply_permutation(RatFunc(elementary_symmetric(3, 1)), c), RatFunc(elementary_symmetric(3, 1)));
}

TEST(RatFunc, CancellationExamples)
{
  const auto [s, f] = LinearFactor::difference(VarId::triangle(2, 1), VarId::triangle(2, 2), 0);
  const auto [s2, f2] = LinearFactor::difference(VarId::triangle(2, 2), VarId::triangle(2, 1), 0);
  EXPECT_EQ(Rational(s) * RatFunc::reciprocal(f) + Rational(s2) * RatFunc::reciprocal(f2), RatFunc{});

  const RatFunc q = RatFunc(v(1, 1) - v(2, 1)) * (Rational(s2) * RatFunc::reciprocal(f2));
  EXPECT_EQ(q * RatFunc(v(2, 2) - v(2, 1)), RatFunc(v(1, 1) - v(2, 1)));
}

TEST(RatFunc, ProductOfCoefficientsMatchesCrossMultiplication)
{
  const TriangleContext ctx(3);
  const RatFunc a = build_a(ctx, 2, 1, Sign::plus);
  const RatFunc b = build_a(ctx, 2, 2, Sign::plus);
  const RatFunc prod = a * b;
  // prod * den(a) * den(b) == num(a) * num(b), as polynomials
  EXPECT_EQ(prod.numerator() * a.denominator() * b.denominator(), a.numerator() * b.numerator() * prod.denominator());
}

TEST(Special, Definitions)
{
  EXPECT_EQ(elementary_symmetric(2, 1), v(2, 1) + v(2, 2));
  EXPECT_EQ(elementary_symmetric(3, 0), Poly(1));
  EXPECT_EQ(vandermonde(2), v(2, 1) - v(2, 2));
  EXPECT_EQ(shifted_vandermonde(2, {1}), v(2, 1) - v(2, 2) + Poly(1));
  const Poly v3 = (v(3, 1) - v(3, 2)) * (v(3, 1) - v(3, 3)) * (v(3, 2) - v(3, 3));
  EXPECT_EQ(vandermonde(3), v3);
  EXPECT_EQ(vandermonde(3).size(), 6U);
  EXPECT_THROW(shifted_vandermonde(3, {1}), std::out_of_range);
  EXPECT_THROW(elementary_symmetric(2, 3), std::out_of_range);
}

TEST(Properties, PolyRingAxioms)
{
  Gen g(1);
  for (int t = 0; t < kTrials; ++t) {
    const Poly a = g.poly(), b = g.poly(), c = g.poly();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Poly{});
    ASSERT_EQ(a * Poly(1), a);
  }
}

TEST(Properties, RatFuncFieldAxioms)
{
  Gen g(2);
  for (int t = 0; t < kTrials; ++t) {
    const RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c)) << a.to_string() << " | " << b.to_string() << " | " << c.to_string();
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, RatFunc{});
    // only numerators inside the linear-factor class are invertible
    if (!a.is_zero() && (a.num().is_constant() || LinearFactor::recognize(a.num()))) {
      ASSERT_EQ(a * a.inverse(), RatFunc(1));
    }
  }
}

TEST(Properties, RatFuncAgreesWithPointEvaluation)
{
  Gen g(3);
  int checked = 0;
  for (int t = 0; t < kTrials; ++t) {
    const RatFunc a = g.ratfunc(), b = g.ratfunc();
    const auto at = at_point(g.point());
    try {
      const Rational ea = a.evaluate(at), eb = b.evaluate(at);
      ASSERT_EQ((a + b).evaluate(at), ea + eb);
      ASSERT_EQ((a * b).evaluate(at), ea * eb);
      ASSERT_EQ((a - b).evaluate(at), ea - eb);
      ++checked;
    } catch (const std::domain_error&) {
    }
  }
  EXPECT_GT(checked, kTrials * 9 / 10);
}

TEST(Properties, ShiftAndPermutationAreRingHomomorphisms)
{
  Gen g(4);
  const auto perms = group_generators(3, GroupKind::symmetric);
  for (int t = 0; t < kTrials; ++t) {
    const RatFunc a = g.ratfunc(), b = g.ratfunc();
    const ShiftVector mu = g.shift(), nu = g.shift();
    ASSERT_EQ(apply_shift(a * b, mu), apply_shift(a, mu) * apply_shift(b, mu));
    ASSERT_EQ(apply_shift(a + b, mu), apply_shift(a, mu) + apply_shift(b, mu));
    ASSERT_EQ(apply_shift(apply_shift(a, mu), nu), apply_shift(a, mu + nu));
    ASSERT_EQ(apply_shift(apply_shift(a, mu), -mu), a);
    const auto& p = perms[static_cast<std::size_t>(t) % perms.size()];
    ASSERT_EQ(apply_permutation(a * b, p), apply_permutation(a, p) * apply_permutation(b, p));
    ASSERT_EQ(apply_permutation(a + b, p), apply_permutation(a, p) + apply_permutation(b, p));
    ASSERT_EQ(apply_permutation(apply_permutation(a, p), p.inverse()), a);
  }
}

TEST(Properties, NormalizeIsIdempotent)
{
  Gen g(5);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<LinearFactor> den;
    for (long i = g.integer(0, 3); i > 0; --i)
      den.push_back(g.factor());
    // numerators that share factors with the denominator
    Poly num = g.poly();
    if (!den.empty() && g.coin())
      num *= den.front().to_poly();
    RatFunc r = RatFunc::from_parts(num, den, g.rational());
    RatFunc once = r;
    once.normalize();
    RatFunc twice = once;
    twice.normalize();
    ASSERT_EQ(once, twice);
    ASSERT_EQ(once.to_string(), twice.to_string());
    for (const auto& [f, e] : once.den())
      ASSERT_FALSE(once.num().exact_div(f)) << once.to_string();
  }
}
