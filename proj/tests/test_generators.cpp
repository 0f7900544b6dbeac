#include "support.hpp"

#include <gtest/gtest.h>

using namespace agl;

namespace {

Poly v(int k, int i) { return Poly::var(VarId::triangle(k, i)); }
const TriangleContext ctx2(2);
const TriangleContext ctx3(3);

}  // namespace

TEST(Context, Bounds)
{
  EXPECT_EQ(ctx3.lattice_rank(), 3);
  EXPECT_EQ(ctx3.variables().size(), 6U);
  EXPECT_EQ(ctx3.shift_coordinates().size(), 3U);
  EXPECT_THROW(TriangleContext(0), std::out_of_range);
  EXPECT_THROW(TriangleContext(10), std::out_of_range);
}

TEST(BuildA, Examples)
{
  EXPECT_EQ(build_a(ctx2, 1, 1, Sign::plus), RatFunc(-(v(2, 1) - v(1, 1)) * (v(2, 2) - v(1, 1))));
  EXPECT_TRUE(build_a(ctx2, 1, 1, Sign::plus).is_polynomial());
  EXPECT_EQ(build_a(ctx2, 1, 1, Sign::minus), RatFunc(1));
  const RatFunc expected =
      RatFunc(v(1, 1) - v(2, 1)) * RatFunc::reciprocal(LinearFactor::difference(VarId::triangle(2, 1), VarId::triangle(2, 2), 0).second) *
      RatFunc(-1);
  EXPECT_EQ(build_a(ctx3, 2, 1, Sign::minus), expected);
  EXPECT_THROW(build_a(ctx3, 3, 1, Sign::plus), std::out_of_range);
  EXPECT_THROW(build_a(ctx3, 2, 3, Sign::plus), std::out_of_range);
}

TEST(BuildGenerator, Examples)
{
  EXPECT_EQ(build_Xkk(ctx2, 1), SkewElement(v(1, 1)));
  EXPECT_EQ(build_Xkk(ctx2, 2), SkewElement(v(2, 1) + v(2, 2) + Poly(1) - v(1, 1)));
  for (Sign s : both_signs)
    EXPECT_EQ(build_A(ctx3, 2, 1, s) + build_A(ctx3, 2, 2, s), build_X(ctx3, 2, s));
  EXPECT_EQ(build_V(ctx3, 3), SkewElement(vandermonde(3)));
  EXPECT_THROW(build_X(ctx3, 3, Sign::plus), std::out_of_range);
  EXPECT_THROW(build_Xtilde2(ctx2, Sign::plus), std::out_of_range);
}

TEST(MatrixUnits, Images)
{
  EXPECT_EQ(build_Eij_image(ctx3, 1, 2), build_X(ctx3, 1, Sign::plus));
  EXPECT_EQ(build_Eij_image(ctx3, 2, 1), build_X(ctx3, 1, Sign::minus));
  EXPECT_EQ(build_Eij_image(ctx3, 1, 1), SkewElement(v(1, 1)));
  MatrixUnitImages e(ctx3);
  EXPECT_EQ(commutator(e(1, 3), e(3, 1)), e(1, 1) - e(3, 3));
  EXPECT_EQ(commutator(e(1, 2), e(2, 3)), e(1, 3));
}

TEST(MatrixUnits, Gl4Brackets)
{
  const TriangleContext ctx4(4);
  MatrixUnitImages e(ctx4);
  EXPECT_EQ(commutator(e(1, 4), e(4, 1)), e(1, 1) - e(4, 4));
  EXPECT_EQ(commutator(e(2, 4), e(4, 3)), e(2, 3));
}

TEST(GelfandInvariants, Images)
{
  EXPECT_EQ(gelfand_invariant_image(ctx2, 2, 1), SkewElement(v(2, 1) + v(2, 2) + Poly(1)));
  EXPECT_EQ(gelfand_invariant_image(ctx2, 2, 2), SkewElement(v(2, 1).pow(2) + v(2, 2).pow(2) + v(2, 1) + v(2, 2)));
  EXPECT_EQ(gelfand_invariant_image(TriangleContext(1), 1, 1), SkewElement(v(1, 1)));
}

TEST(GelfandInvariants, CentralInGl3)
{
  const SkewElement c = gelfand_invariant_image(ctx3, 3, 2);
  ASSERT_TRUE(c.is_degree_zero());
  for (const auto& [name, g] : algebra_generators(ctx3))
    if (name[0] == 'X') {
      EXPECT_TRUE(commutator(c, g).is_zero()) << name;
    }
}

TEST(Membership, Examples)
{
  EXPECT_TRUE(membership(ctx3, SkewElement(elementary_symmetric(2, 1)), Membership::gamma));
  EXPECT_TRUE(membership(ctx3, build_V(ctx3, 2), Membership::gamma_tilde));
  EXPECT_FALSE(membership(ctx3, build_V(ctx3, 2), Membership::gamma));
  const SkewElement prod = build_A(ctx3, 2, 1, Sign::plus) * build_A(ctx3, 2, 1, Sign::minus);
  EXPECT_FALSE(membership(ctx3, prod, Membership::gamma_tilde));
  EXPECT_FALSE(membership(ctx3, build_X(ctx3, 1, Sign::plus), Membership::gamma));
}

TEST(Lookup, Names)
{
  EXPECT_EQ(*lookup_element(ctx3, "X2+"), build_X(ctx3, 2, Sign::plus));
  EXPECT_EQ(*lookup_element(ctx3, "A21-"), build_A(ctx3, 2, 1, Sign::minus));
  EXPECT_EQ(*lookup_element(ctx3, "V3"), build_V(ctx3, 3));
  EXPECT_EQ(*lookup_element(ctx3, "c22"), gelfand_invariant_image(ctx3, 2, 2));
  EXPECT_EQ(*lookup_element(ctx3, "d21"), SkewElement::shift(delta(2, 1)));
  EXPECT_FALSE(lookup_element(ctx3, "Q7"));
  EXPECT_THROW(lookup_element(ctx3, "X5+"), std::out_of_range);
  EXPECT_THROW(lookup_element(ctx3, "X12"), std::out_of_range);
}

TEST(Census, GeneratorsInvariantUpToN4)
{
  for (int n = 1; n <= 4; ++n) {
    const TriangleContext ctx(n);
    for (const auto& [name, u] : algebra_generators(ctx)) {
      EXPECT_TRUE(is_invariant(u, n, GroupKind::alternating)) << "n=" << n << " " << name;
      const bool s_inv = is_invariant(u, n, GroupKind::symmetric);
      if (name[0] == 'V') {
        EXPECT_FALSE(s_inv) << "n=" << n << " " << name;
      } else {
        EXPECT_TRUE(s_inv) << "n=" << n << " " << name;
      }
    }
  }
}

TEST(Census, VandermondeFlipsSignUnderTransposition)
{
  const TriangleContext ctx(4);
  for (int k = 2; k <= 4; ++k)
    EXPECT_EQ(group_act(RowPermutation::transposition(4, k, 1, 2), build_V(ctx, k)), -build_V(ctx, k));
}

TEST(Census, LowRowSummandsAreAlternatingInvariant)
{
  const TriangleContext ctx(4);
  for (Sign s : both_signs) {
    EXPECT_TRUE(is_invariant(build_A(ctx, 1, 1, s), 4, GroupKind::alternating));
    EXPECT_TRUE(is_invariant(build_A(ctx, 2, 1, s), 4, GroupKind::alternating));
    EXPECT_TRUE(is_invariant(build_A(ctx, 2, 2, s), 4, GroupKind::alternating));
  }
}

TEST(Census, Row3SummandsArePermutedByThreeCycles)
{
  const TriangleContext ctx(4);
  const auto c = RowPermutation::three_cycle(4, 3, 1, 2, 3);
  for (Sign s : both_signs) {
    EXPECT_FALSE(is_invariant(build_A(ctx, 3, 1, s), 4, GroupKind::alternating));
    SkewElement images;
    for (int i = 1; i <= 3; ++i)
      images += group_act(c, build_A(ctx, 3, i, s));
    EXPECT_EQ(images, build_X(ctx, 3, s));
  }
}
