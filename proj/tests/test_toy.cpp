#include "support.hpp"

#include <gtest/gtest.h>

using namespace agl;
using agl::testing::Gen;

namespace {

Poly x() { return toy_x(); }
RatFunc over(const Poly& num, const std::vector<long>& shifts)
{
  RatFunc r(num);
  for (long c : shifts)
    r *= RatFunc::reciprocal(LinearFactor::shifted_var(VarId::toy(), c));
  return r;
}

}  // namespace

TEST(ToySpec, Parsing)
{
  EXPECT_EQ(ToySpec::parse("3x^3+x+5").f(), Poly(3) * x().pow(3) + x() + Poly(5));
  EXPECT_EQ(ToySpec::parse("x^2+1").a0(), Rational(1));
  EXPECT_THROW(ToySpec::parse("x^2"), std::invalid_argument);
  EXPECT_THROW(ToySpec::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(ToySpec::parse("y+1"), std::invalid_argument);
  EXPECT_EQ(parse_toy_target("1/(x-2)"), -2);
  EXPECT_EQ(parse_toy_target("1/x"), 0);
  EXPECT_THROW(parse_toy_target("2/(x-2)"), std::invalid_argument);
  EXPECT_THROW(parse_toy_target("1/(x^2+1)"), std::invalid_argument);
}

TEST(Toy, BasicProducts)
{
  const auto g = build_toy(ToySpec(x() + Poly(2)));
  EXPECT_EQ(g.Y * g.X, SkewElement(over(x() + Poly(2), {0})));
  EXPECT_EQ(g.X * g.Y, SkewElement(over(x() + Poly(1), {-1})));
  EXPECT_EQ(g.Y.pow(2) * g.X.pow(2), SkewElement(over((x() + Poly(3)) * (x() + Poly(2)), {1, 0})));
}

TEST(Toy, DegreeZeroForms)
{
  const auto g = build_toy(ToySpec(x() + Poly(2)));
  const auto yx = degree_zero_form(g.Y * g.X);
  ASSERT_TRUE(yx);
  EXPECT_EQ(yx->coefficient, over(x() + Poly(2), {0}));
  EXPECT_TRUE(yx->in_localization);
  EXPECT_FALSE(degree_zero_form(g.X));
  const auto mixed = degree_zero_form((g.X * g.Y) * (g.Y * g.X));
  ASSERT_TRUE(mixed);
  EXPECT_TRUE(mixed->in_localization);
  EXPECT_EQ(mixed->coefficient, over(x() + Poly(1), {-1}) * over(x() + Poly(2), {0}));
}

TEST(Witness, SpecExamples)
{
  const ToySpec f(x() + Poly(2));
  const ToyWitness w0 = witness_inverse(f, 0);
  EXPECT_TRUE(w0.verified);
  const auto g = build_toy(f);
  EXPECT_EQ(w0.element, Rational(1, 2) * (g.Y * g.X - SkewElement(1)));
  const ToyWitness w1 = witness_inverse(f, 1);
  EXPECT_TRUE(w1.verified);
  EXPECT_EQ(w1.trace.front(), "m = 0");
  EXPECT_TRUE(witness_inverse(ToySpec::parse("x^2+1"), -2).verified);
}

TEST(Witness, StandardTargets)
{
  for (const char* f : {"x+2", "x^2+1", "3x^3+x+5", "1"}) {
    const ToySpec spec = ToySpec::parse(f);
    for (long k : {0, -1, 1, 2, -2, -3, 3, -4})
      EXPECT_TRUE(witness_inverse(spec, k).verified) << f << " k=" << k;
    EXPECT_TRUE(toy_supports_generate(spec));
  }
}

TEST(Witness, PositiveMultiplicity)
{
  // f has the factor (x + 1), so f(x+1) shares a root with the target 1/(x+2)
  const ToySpec spec((x() + Poly(1)) * (x() + Poly(3)));
  const ToyWitness w = witness_inverse(spec, 2);
  EXPECT_TRUE(w.verified);
  EXPECT_NE(w.trace.front(), "m = 0");
}

TEST(Properties, RandomPolynomialsAllTargetsVerify)
{
  Gen g(31);
  int trials = 0;
  while (trials < 60) {
    Poly f;
    const long deg = g.integer(0, 4);
    for (long d = 0; d <= deg; ++d)
      f += Poly(Rational(g.integer(-3, 3))) * x().pow(static_cast<unsigned>(d));
    if (g.coin())
      f *= x() + Poly(g.integer(1, 3));
    if (f.is_zero() || f.constant_term() == 0)
      continue;
    ++trials;
    const ToySpec spec(f);
    for (long k = -5; k <= 5; ++k)
      ASSERT_TRUE(witness_inverse(spec, k).verified) << f.to_string() << " k=" << k;
  }
}

TEST(Census, DegreeZeroWordsLieInLocalization)
{
  const auto words = toy_words(6);
  EXPECT_EQ(words.size(), 126U);
  for (const char* f : {"x+2", "x^2+1", "3x^3+x+5"}) {
    const auto g = build_toy(ToySpec::parse(f));
    int degree_zero = 0;
    for (const auto& w : words)
      if (auto d = degree_zero_form(evaluate_word(g, w))) {
        ++degree_zero;
        EXPECT_TRUE(d->in_localization) << w;
      }
    EXPECT_EQ(degree_zero, 28);
  }
}

TEST(Helpers, TranslateAndMultiplicity)
{
  EXPECT_EQ(toy_translate(x().pow(2), 1), x().pow(2) + Poly(2) * x() + Poly(1));
  EXPECT_EQ(multiplicity((x() + Poly(1)).pow(3) * (x() - Poly(2)), 1), 3U);
  EXPECT_EQ(multiplicity(x() + Poly(5), 1), 0U);
}
