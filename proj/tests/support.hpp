#pragma once

#include "agl/agl.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace agl {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RatFunc& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const SkewElement& u, std::ostream* os) { *os << u.to_string(); }
inline void PrintTo(const ShiftVector& mu, std::ostream* os) { *os << mu.to_string(); }
inline void PrintTo(const Matrix& m, std::ostream* os) { *os << m.to_string(); }

}  // namespace agl

namespace agl::testing {

/// Small random inputs over a handful of triangle variables.
class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  VarId var(int n = 3)
  {
    const int k = static_cast<int>(integer(1, n));
    return VarId::triangle(k, static_cast<int>(integer(1, k)));
  }

  Rational rational()
  {
    return make_rational(integer(-4, 4), integer(1, 3));
  }

  Poly poly(int n = 3, int max_terms = 3, unsigned max_degree = 2)
  {
    Poly p;
    const long terms = integer(0, max_terms);
    for (long t = 0; t < terms; ++t) {
      const long vars = integer(0, static_cast<long>(max_degree));
      Poly m(rational());
      for (long v = 0; v < vars; ++v)
        m *= Poly::var(var(n));
      p += m;
    }
    return p;
  }

  LinearFactor factor(int n = 3)
  {
    const VarId a = var(n);
    const long c = integer(-2, 2);
    if (coin()) {
      VarId b = var(n);
      if (!(b == a))
        return LinearFactor::difference(a, b, c).second;
    }
    return LinearFactor::shifted_var(a, c);
  }

  RatFunc ratfunc(int n = 3)
  {
    std::vector<LinearFactor> den;
    const long d = integer(0, 2);
    for (long i = 0; i < d; ++i)
      den.push_back(factor(n));
    return RatFunc::from_parts(poly(n), den, rational()).normalize();
  }

  ShiftVector shift(int n = 3)
  {
    std::vector<ShiftVector::Entry> entries;
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i)
        if (integer(0, 2) == 0)
          entries.emplace_back(VarId::triangle(k, i), integer(-2, 2));
    return ShiftVector::from_entries(std::move(entries));
  }

  SkewElement skew(int n = 3, int max_terms = 2)
  {
    SkewElement u;
    const long terms = integer(0, max_terms);
    for (long t = 0; t < terms; ++t)
      u += SkewElement::left(ratfunc(n), shift(n));
    return u;
  }

  /// Point with pairwise generic rational coordinates, so poles are rare.
  std::vector<Rational> point(int n = 3)
  {
    std::vector<Rational> p;
    for (int i = 0; i < n * (n + 1) / 2; ++i)
      p.push_back(make_rational(integer(-40, 40), 13) + make_rational(i, 7));
    return p;
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

inline auto at_point(const std::vector<Rational>& p)
{
  return [p](VarId v) { return p.at(static_cast<std::size_t>(v.row * (v.row - 1) / 2 + v.col - 1)); };
}

}  // namespace agl::testing
