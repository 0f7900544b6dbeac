#include "support.hpp"

#include <gtest/gtest.h>

using namespace agl;
using agl::testing::Gen;

namespace {

ShiftVector e(int i, long p) { return ShiftVector::unit(VarId::triangle(3, i), p); }
std::vector<VarId> coords(int d)
{
  std::vector<VarId> c;
  for (int i = 1; i <= d; ++i)
    c.push_back(VarId::triangle(3, i));
  return c;
}

// Independent oracle: the gcd of all maximal minors is 1 iff the rows span Z^d.
Integer det(std::vector<std::vector<Integer>> m)
{
  const std::size_t n = m.size();
  Rational d = 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m[i][j];
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        a[r][j] -= f * a[c][j];
    }
  }
  return Integer(d);
}

Integer minor_gcd(const std::vector<std::vector<Integer>>& rows, std::size_t d)
{
  Integer g = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == d) {
      std::vector<std::vector<Integer>> m;
      for (auto i : pick)
        m.push_back(rows[i]);
      g = gcd(g, abs(det(m)));
      return;
    }
    for (std::size_t i = from; i < rows.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return g;
}

}  // namespace

TEST(InvariantFactors, Diagonal)
{
  EXPECT_EQ(invariant_factors({{2, 0}, {0, 3}}), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(invariant_factors({{2, 4}, {6, 8}}), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(invariant_factors({{0, 0}, {0, 0}}), std::vector<Integer>{});
}

TEST(SupportsGenerate, Examples)
{
  EXPECT_FALSE(supports_generate_group({e(1, 2), e(1, -2)}, coords(1)));
  EXPECT_TRUE(supports_generate_group({e(1, 1), e(1, -1), e(1, 1) + e(2, 1), -(e(1, 1) + e(2, 1))}, coords(2)));
  EXPECT_FALSE(supports_generate_group({e(1, 1), e(1, -1)}, coords(2)));
}

TEST(SupportsGenerate, GeneratorSupportsAtN3)
{
  const TriangleContext ctx(3);
  std::set<ShiftVector> s;
  for (int k = 1; k < 3; ++k)
    for (Sign sign : both_signs)
      for (const auto& mu : build_X(ctx, k, sign).support())
        s.insert(mu);
  EXPECT_TRUE(supports_generate_group(s, ctx.shift_coordinates()));
}

TEST(SupportsGenerate, MonoidCaseIsRejected)
{
  EXPECT_THROW(supports_generate_group({e(1, 1)}, coords(1)), std::invalid_argument);
  EXPECT_THROW(supports_generate_group({e(2, 1), e(2, -1)}, coords(1)), std::invalid_argument);
}

TEST(Properties, SmithAgreesWithMinorGcd)
{
  Gen g(21);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 3));
    std::set<ShiftVector> s;
    std::vector<std::vector<Integer>> rows;
    for (long r = g.integer(1, 3); r > 0; --r) {
      std::vector<ShiftVector::Entry> entries;
      std::vector<Integer> row(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        const long p = g.integer(-3, 3);
        row[i] = p;
        entries.emplace_back(VarId::triangle(3, static_cast<int>(i) + 1), p);
      }
      const auto mu = ShiftVector::from_entries(entries);
      if (s.insert(mu).second && !mu.is_identity()) {
        s.insert(-mu);
        rows.push_back(row);
      }
    }
    bool oracle = false;
    if (rows.size() >= d)
      oracle = minor_gcd(rows, d) == 1;
    if (s.size() == 1 && s.begin()->is_identity())
      s.clear();
    std::erase_if(s, [](const ShiftVector& mu) { return mu.is_identity(); });
    ASSERT_EQ(supports_generate_group(s, coords(static_cast<int>(d))), oracle);
  }
}
