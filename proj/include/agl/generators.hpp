#pragma once

#include "agl/lattice.hpp"
#include "agl/skew.hpp"
#include "agl/special.hpp"

#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace agl {

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Rank n of gl_n: variables x_ki (1 <= i <= k <= n), shift lattice on
/// rows 1..n-1 of rank n(n-1)/2.
class TriangleContext {
public:
  explicit TriangleContext(int n) : n_(n)
  {
    if (n < 1 || n > 9)
      throw std::out_of_range("rank n must lie in 1..9");
  }

  int n() const { return n_; }
  int lattice_rank() const { return n_ * (n_ - 1) / 2; }

  std::vector<VarId> variables() const
  {
    std::vector<VarId> vs;
    for (int k = 1; k <= n_; ++k)
      for (int i = 1; i <= k; ++i)
        vs.push_back(VarId::triangle(k, i));
    return vs;
  }

  /// Coordinates of the shift lattice: x_ki with k <= n - 1.
  std::vector<VarId> shift_coordinates() const
  {
    std::vector<VarId> vs;
    for (int k = 1; k < n_; ++k)
      for (int i = 1; i <= k; ++i)
        vs.push_back(VarId::triangle(k, i));
    return vs;
  }

  void require_row(int k, int lo, int hi, const char* what) const
  {
    if (k < lo || k > hi)
      throw std::out_of_range(std::string(what) + ": row " + std::to_string(k) + " out of range for n = " +
                              std::to_string(n_));
  }

private:
  int n_;
};

inline Poly x(int k, int i) { return Poly::var(VarId::triangle(k, i)); }

/// a_ki^+ = -prod_j (x_{k+1,j} - x_ki) / prod_{j != i} (x_kj - x_ki)
/// a_ki^- = +prod_j (x_{k-1,j} - x_ki) / prod_{j != i} (x_kj - x_ki)
inline RatFunc build_a(const TriangleContext& ctx, int k, int i, Sign sign)
{
  ctx.require_row(k, 1, ctx.n() - 1, "build_a");
  if (i < 1 || i > k)
    throw std::out_of_range("build_a: column out of range");
  const int other = sign == Sign::plus ? k + 1 : k - 1;
  Poly num(sign == Sign::plus ? -1 : 1);
  for (int j = 1; j <= other; ++j)
    num *= x(other, j) - x(k, i);
  Rational scale = 1;
  std::vector<LinearFactor> den;
  for (int j = 1; j <= k; ++j) {
    if (j == i)
      continue;
    auto [s, f] = LinearFactor::difference(VarId::triangle(k, j), VarId::triangle(k, i), 0);
    scale *= s;
    den.push_back(f);
  }
  return RatFunc::from_parts(num, den, Rational(1 / scale)).normalize();
}

inline ShiftVector delta(int k, int i, long power = 1) { return ShiftVector::unit(VarId::triangle(k, i), power); }

/// A_ki^{+-} = (delta^{ki})^{+-1} a_ki^{+-}, coefficient on the right.
inline SkewElement build_A(const TriangleContext& ctx, int k, int i, Sign sign)
{
  return SkewElement::right(delta(k, i, sign_value(sign)), build_a(ctx, k, i, sign));
}

/// X_k^{+-} = sum_i A_ki^{+-}, the image of E_{k,k+1} / E_{k+1,k}.
inline SkewElement build_X(const TriangleContext& ctx, int k, Sign sign)
{
  ctx.require_row(k, 1, ctx.n() - 1, "build_X");
  SkewElement u;
  for (int i = 1; i <= k; ++i)
    u += build_A(ctx, k, i, sign);
  return u;
}

/// X_kk = sum_j (x_kj + j - 1) - sum_i (x_{k-1,i} + i - 1)
inline SkewElement build_Xkk(const TriangleContext& ctx, int k)
{
  ctx.require_row(k, 1, ctx.n(), "build_Xkk");
  Poly p;
  for (int j = 1; j <= k; ++j)
    p += x(k, j) + Poly(j - 1);
  for (int i = 1; i < k; ++i)
    p -= x(k - 1, i) + Poly(i - 1);
  return SkewElement(p);
}

inline SkewElement build_V(const TriangleContext& ctx, int k)
{
  ctx.require_row(k, 1, ctx.n(), "build_V");
  return SkewElement(vandermonde(k));
}

/// (delta^{21})^{+-1} a_21 - (delta^{22})^{+-1} a_22
inline SkewElement build_Xtilde2(const TriangleContext& ctx, Sign sign)
{
  ctx.require_row(3, 3, ctx.n(), "build_Xtilde2");
  return build_A(ctx, 2, 1, sign) - build_A(ctx, 2, 2, sign);
}

/// Image of the matrix unit E_ij. Off-diagonal units beyond the Chevalley
/// generators come from E_ij = [E_{i,i+1}, E_{i+1,j}] (i < j) and
/// E_ij = [E_{i,i-1}, E_{i-1,j}] (i > j).
class MatrixUnitImages {
public:
  explicit MatrixUnitImages(const TriangleContext& ctx) : ctx_(ctx) {}

  const SkewElement& operator()(int i, int j)
  {
    if (i < 1 || j < 1 || i > ctx_.n() || j > ctx_.n())
      throw std::out_of_range("matrix unit index out of range");
    auto key = std::make_pair(i, j);
    if (auto it = cache_.find(key); it != cache_.end())
      return it->second;
    SkewElement u;
    if (i == j)
      u = build_Xkk(ctx_, i);
    else if (j == i + 1)
      u = build_X(ctx_, i, Sign::plus);
    else if (i == j + 1)
      u = build_X(ctx_, j, Sign::minus);
    else if (i < j)
      u = commutator((*this)(i, i + 1), (*this)(i + 1, j));
    else
      u = commutator((*this)(i, i - 1), (*this)(i - 1, j));
    return cache_.emplace(key, std::move(u)).first->second;
  }

  const TriangleContext& context() const { return ctx_; }

private:
  TriangleContext ctx_;
  std::map<std::pair<int, int>, SkewElement> cache_;
};

inline SkewElement build_Eij_image(const TriangleContext& ctx, int i, int j)
{
  MatrixUnitImages images(ctx);
  return images(i, j);
}

/// phi(c_mk) = sum over (i_1..i_k) in [m]^k of E_{i1 i2} E_{i2 i3} ... E_{ik i1},
/// computed by brute force; m <= ctx.n().
inline SkewElement gelfand_invariant_image(const TriangleContext& ctx, int m, int k)
{
  ctx.require_row(m, 1, ctx.n(), "gelfand_invariant_image");
  if (k < 1)
    throw std::out_of_range("gelfand_invariant_image: degree must be positive");
  MatrixUnitImages images(ctx);
  // chains[a][b] = sum over paths a -> ... -> b of length `len` of E products
  std::vector<std::vector<SkewElement>> chains(static_cast<std::size_t>(m),
                                               std::vector<SkewElement>(static_cast<std::size_t>(m)));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      chains[a - 1][b - 1] = images(a, b);
  for (int len = 2; len <= k; ++len) {
    auto next = chains;
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b) {
        SkewElement sum;
        for (int c = 1; c <= m; ++c)
          sum += chains[a - 1][c - 1] * images(c, b);
        next[a - 1][b - 1] = std::move(sum);
      }
    chains = std::move(next);
  }
  SkewElement trace;
  for (int a = 1; a <= m; ++a)
    trace += chains[a - 1][a - 1];
  return trace;
}

enum class Membership { gamma, gamma_tilde, localized };

/// gamma: polynomial, identity support, S-invariant. gamma_tilde: same with the
/// alternating product. localized: identity support, every denominator factor a
/// shifted row difference x_ki - x_kj + c (c integer, 2 <= k <= n-1), A-invariant.
inline bool membership(const TriangleContext& ctx, const SkewElement& u, Membership set)
{
  if (!u.is_degree_zero())
    return false;
  const RatFunc a = u.coefficient(ShiftVector{});
  switch (set) {
    case Membership::gamma:
      return a.is_polynomial() && is_invariant(u, ctx.n(), GroupKind::symmetric);
    case Membership::gamma_tilde:
      return a.is_polynomial() && is_invariant(u, ctx.n(), GroupKind::alternating);
    case Membership::localized:
      for (const auto& [f, e] : a.den()) {
        if (!f.b() || f.a().row != f.b()->row || !is_integer(f.c()))
          return false;
        if (f.a().row < 2 || f.a().row > ctx.n() - 1)
          return false;
      }
      return is_invariant(u, ctx.n(), GroupKind::alternating);
  }
  return false;
}

/// Resolves registry keys: "X2+", "X11", "V3", "A21-", "Xt2+", "E13", "c22",
/// "e21", "x21", "d21". Returns nullopt for unknown names; throws
/// std::out_of_range for known names with invalid indices.
inline std::optional<SkewElement> lookup_element(const TriangleContext& ctx, const std::string& name)
{
  static const std::regex x_pm(R"(X([1-9])([+-]))");
  static const std::regex x_kk(R"(X([1-9])([1-9]))");
  static const std::regex v_k(R"(V([1-9]))");
  static const std::regex a_ki(R"(A([1-9])([1-9])([+-]))");
  static const std::regex xt(R"(Xt2([+-]))");
  static const std::regex e_ij(R"(E([1-9])([1-9]))");
  static const std::regex c_mk(R"(c([1-9])([1-9]))");
  static const std::regex e_ki(R"(e([1-9])([0-9]))");
  static const std::regex var(R"(x([1-9])([1-9]))");
  static const std::regex d_ki(R"(d([1-9])([1-9]))");
  std::smatch m;
  auto digit = [&](int idx) { return m[idx].str()[0] - '0'; };
  auto sign = [&](int idx) { return m[idx].str() == "+" ? Sign::plus : Sign::minus; };
  if (std::regex_match(name, m, x_pm))
    return build_X(ctx, digit(1), sign(2));
  if (std::regex_match(name, m, x_kk)) {
    if (digit(1) != digit(2))
      throw std::out_of_range("X" + m[1].str() + m[2].str() + ": use E" + m[1].str() + m[2].str() +
                              " for off-diagonal matrix units");
    return build_Xkk(ctx, digit(1));
  }
  if (std::regex_match(name, m, v_k))
    return build_V(ctx, digit(1));
  if (std::regex_match(name, m, a_ki))
    return build_A(ctx, digit(1), digit(2), sign(3));
  if (std::regex_match(name, m, xt))
    return build_Xtilde2(ctx, sign(1));
  if (std::regex_match(name, m, e_ij))
    return build_Eij_image(ctx, digit(1), digit(2));
  if (std::regex_match(name, m, c_mk))
    return gelfand_invariant_image(ctx, digit(1), digit(2));
  if (std::regex_match(name, m, e_ki)) {
    ctx.require_row(digit(1), 1, ctx.n(), "e");
    return SkewElement(elementary_symmetric(digit(1), digit(2)));
  }
  if (std::regex_match(name, m, var)) {
    ctx.require_row(digit(1), 1, ctx.n(), "x");
    return SkewElement(Poly::var(VarId::triangle(digit(1), digit(2))));
  }
  if (std::regex_match(name, m, d_ki)) {
    ctx.require_row(digit(1), 1, ctx.n() - 1, "d");
    return SkewElement::shift(delta(digit(1), digit(2)));
  }
  return std::nullopt;
}

/// The generating set of A(gl_n): X_k^{+-} (k < n), X_kk (k <= n), V_k (2 <= k <= n).
inline std::vector<std::pair<std::string, SkewElement>> algebra_generators(const TriangleContext& ctx)
{
  std::vector<std::pair<std::string, SkewElement>> gens;
  for (int k = 1; k < ctx.n(); ++k) {
    gens.emplace_back("X" + std::to_string(k) + "+", build_X(ctx, k, Sign::plus));
    gens.emplace_back("X" + std::to_string(k) + "-", build_X(ctx, k, Sign::minus));
  }
  for (int k = 1; k <= ctx.n(); ++k)
    gens.emplace_back("X" + std::to_string(k) + std::to_string(k), build_Xkk(ctx, k));
  for (int k = 2; k <= ctx.n(); ++k)
    gens.emplace_back("V" + std::to_string(k), build_V(ctx, k));
  return gens;
}

}  // namespace agl
