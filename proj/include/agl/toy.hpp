#pragma once

#include "agl/expr.hpp"
#include "agl/lattice.hpp"
#include "agl/skew.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace agl {

inline Poly toy_x() { return Poly::var(VarId::toy()); }
inline ShiftVector toy_delta(long power = 1) { return ShiftVector::unit(VarId::toy(), power); }

/// Univariate f in the toy variable x with f(0) != 0.
class ToySpec {
public:
  explicit ToySpec(Poly f) : f_(std::move(f))
  {
    for (VarId v : f_.variables())
      if (!v.is_toy())
        throw std::invalid_argument("f must be a polynomial in x only");
    if (f_.evaluate([](VarId) { return Rational(0); }) == 0)
      throw std::invalid_argument("f(0) must be nonzero");
  }

  /// Parses e.g. "x^2+1" or "3x^3+x+5".
  static ToySpec parse(const std::string& text)
  {
    SkewElement u = parse_expression(text, [](const std::string& name) -> std::optional<SkewElement> {
      if (name == "x")
        return SkewElement(toy_x());
      return std::nullopt;
    });
    if (!u.is_degree_zero())
      throw std::invalid_argument("f must be a polynomial in x");
    RatFunc c = u.coefficient(ShiftVector{});
    if (!c.is_polynomial())
      throw std::invalid_argument("f must be a polynomial in x");
    return ToySpec(c.as_poly());
  }

  const Poly& f() const { return f_; }
  Rational a0() const { return f_.constant_term(); }

private:
  Poly f_;
};

struct ToyGenerators {
  SkewElement X;
  SkewElement Y;
};

/// X = delta * (f(x)/x) (coefficient on the right), Y = delta^{-1}, delta(x) = x - 1.
inline ToyGenerators build_toy(const ToySpec& spec)
{
  RatFunc f_over_x = RatFunc(spec.f()) * RatFunc::reciprocal(LinearFactor::shifted_var(VarId::toy(), 0));
  return {SkewElement::right(toy_delta(), f_over_x), SkewElement::shift(toy_delta(-1))};
}

/// p(x + c)
inline Poly toy_translate(const Poly& p, long c)
{
  return apply_shift(RatFunc(p), toy_delta(-c)).as_poly();
}

/// Multiplicity of (x + c) in p (p nonzero).
inline unsigned multiplicity(Poly p, long c)
{
  const LinearFactor f = LinearFactor::shifted_var(VarId::toy(), c);
  unsigned m = 0;
  while (auto q = p.exact_div(f)) {
    p = std::move(*q);
    ++m;
  }
  return m;
}

struct ToyWitness {
  long k = 0;  ///< target is 1/(x + k)
  std::string expression;
  std::vector<std::string> trace;
  SkewElement element;
  bool verified = false;
};

namespace detail {

inline std::string word(const std::string& letters, unsigned e)
{
  if (e == 0)
    return "";
  std::string base = letters.size() > 1 ? "(" + letters + ")" : letters;
  return e == 1 ? base : base + "^" + std::to_string(e);
}

inline std::string join_words(const std::vector<std::string>& parts)
{
  std::string out;
  for (const auto& p : parts) {
    if (p.empty())
      continue;
    out += (out.empty() ? "" : "*") + p;
  }
  return out.empty() ? "1" : out;
}

}  // namespace detail

/// Element of U_f equal to 1/(x + k):
///   k = 0:   (1/a0)(YX - q(x)),       q = (f - a0)/x
///   k = -1:  (1/a0)(XY - q(x - 1))
///   k >= 1:  Y^{k+1} (XY)^m X^{k+1} * prod_{j<k} (x + j) = R/(x + k)
///   k <= -2: X^K (YX)^m Y^K * prod_{j=1}^{K-1} (x - j) = R/(x - K),  K = -k
/// then 1/(x + k) = (R/(x + k) - S)/R(-k) with S = (R - R(-k))/(x + k).
inline ToyWitness witness_inverse(const ToySpec& spec, long k)
{
  const auto [X, Y] = build_toy(spec);
  const Poly& f = spec.f();
  const Rational a0 = spec.a0();
  const LinearFactor target_factor = LinearFactor::shifted_var(VarId::toy(), k);
  ToyWitness w;
  w.k = k;
  std::ostringstream trace;

  if (k == 0 || k == -1) {
    Poly q = *(f - Poly(a0)).exact_div(LinearFactor::shifted_var(VarId::toy(), 0));
    if (k == -1)
      q = toy_translate(q, -1);
    const std::string base = k == 0 ? "Y*X" : "X*Y";
    w.element = Rational(1 / a0) * ((k == 0 ? Y * X : X * Y) - SkewElement(q));
    w.expression = "(" + to_string(Rational(1 / a0)) + ")*(" + base + " - (" + q.to_string() + "))";
    w.trace.push_back("a0 = " + to_string(a0));
    w.trace.push_back("q = " + q.to_string());
  } else {
    const bool plus = k >= 1;
    const long K = plus ? k : -k;
    // auxiliary product whose (x + k)-multiplicity is m
    Poly aux(1);
    Poly cofactor(1);
    if (plus) {
      for (long j = 0; j < K; ++j) {
        aux *= toy_translate(f, j);
        cofactor *= toy_x() + Poly(j);
      }
    } else {
      for (long j = 1; j < K; ++j) {
        aux *= toy_translate(f, -j);
        cofactor *= toy_x() - Poly(j);
      }
    }
    const unsigned m = multiplicity(aux, k);
    w.trace.push_back("m = " + std::to_string(m));
    SkewElement product;
    std::string product_text;
    if (plus) {
      product = Y.pow(static_cast<unsigned>(K + 1)) * (X * Y).pow(m) * X.pow(static_cast<unsigned>(K + 1));
      product_text = detail::join_words({detail::word("Y", static_cast<unsigned>(K + 1)), detail::word("X*Y", m),
                                         detail::word("X", static_cast<unsigned>(K + 1))});
    } else {
      product = X.pow(static_cast<unsigned>(K)) * (Y * X).pow(m) * Y.pow(static_cast<unsigned>(K));
      product_text = detail::join_words({detail::word("X", static_cast<unsigned>(K)), detail::word("Y*X", m),
                                         detail::word("Y", static_cast<unsigned>(K))});
    }
    if (!product.is_degree_zero())
      throw std::logic_error("witness product is not of degree zero");
    const SkewElement scaled = product * SkewElement(cofactor);
    const RatFunc q = scaled.coefficient(ShiftVector{});
    // q = R/(x + k) with R polynomial, R(-k) != 0
    const RatFunc r_func = q * RatFunc(target_factor.to_poly());
    if (!r_func.is_polynomial())
      throw std::logic_error("extraction failed: " + q.to_string() + " is not R/(x + k)");
    const Poly R = r_func.as_poly();
    const Rational r0 = R.evaluate([&](VarId) { return Rational(-k); });
    if (r0 == 0)
      throw std::logic_error("extraction failed: R(-k) = 0");
    const Poly S = *(R - Poly(r0)).exact_div(target_factor);
    w.trace.push_back(product_text + " * (" + cofactor.to_string() + ") = (" + R.to_string() + ")/(" +
                      target_factor.to_string() + ")");
    w.trace.push_back("R(" + std::to_string(-k) + ") = " + to_string(r0));
    w.trace.push_back("S = " + S.to_string());
    w.element = Rational(1 / r0) * (scaled - SkewElement(S));
    w.expression = "(" + to_string(Rational(1 / r0)) + ")*(" + product_text + "*(" + cofactor.to_string() + ") - (" +
                   S.to_string() + "))";
  }
  w.verified = w.element == SkewElement(RatFunc::reciprocal(target_factor));
  return w;
}

/// Parses a target "1/(x + k)" (any form that reduces to it) and returns k.
inline long parse_toy_target(const std::string& text)
{
  SkewElement u = parse_expression(text, [](const std::string& name) -> std::optional<SkewElement> {
    if (name == "x")
      return SkewElement(toy_x());
    return std::nullopt;
  });
  const RatFunc c = u.coefficient(ShiftVector{});
  if (!u.is_degree_zero() || !c.num().is_constant() || c.den().size() != 1 || c.den().front().second != 1)
    throw std::invalid_argument("target must have the form 1/(x + k)");
  const LinearFactor& f = c.den().front().first;
  if (f.b() || !f.a().is_toy() || !is_integer(f.c()) || c.scale() * c.num().constant_term() != 1)
    throw std::invalid_argument("target must have the form 1/(x + k) with integer k");
  return f.c().get_num().get_si();
}

struct DegreeZeroForm {
  RatFunc coefficient;
  bool in_localization = false;  ///< every denominator factor is x + integer
};

inline std::optional<DegreeZeroForm> degree_zero_form(const SkewElement& u)
{
  if (!u.is_degree_zero())
    return std::nullopt;
  DegreeZeroForm d{u.coefficient(ShiftVector{}), true};
  for (const auto& [f, e] : d.coefficient.den())
    if (f.b() || !f.a().is_toy() || !is_integer(f.c()))
      d.in_localization = false;
  return d;
}

/// All words in X, Y of length 1..max_length, in length-then-lex order
/// ("X" < "Y").
inline std::vector<std::string> toy_words(unsigned max_length)
{
  std::vector<std::string> out;
  std::vector<std::string> layer = {""};
  for (unsigned len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : {'X', 'Y'})
        next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline SkewElement evaluate_word(const ToyGenerators& g, const std::string& w)
{
  SkewElement u(1);
  for (char c : w)
    u = u * (c == 'X' ? g.X : g.Y);
  return u;
}

inline bool toy_supports_generate(const ToySpec& spec)
{
  const auto [X, Y] = build_toy(spec);
  std::set<ShiftVector> supports = X.support();
  for (const auto& mu : Y.support())
    supports.insert(mu);
  return supports_generate_group(supports, {VarId::toy()});
}

}  // namespace agl
