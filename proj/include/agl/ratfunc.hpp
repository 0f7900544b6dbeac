#pragma once

#include "agl/poly.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agl {

/// Affine-linear atom x_a - x_b + c (with a < b) or x_a + c.
class LinearFactor {
public:
  /// x_a + c
  static LinearFactor shifted_var(VarId a, const Rational& c) { return LinearFactor(a, std::nullopt, c); }

  /// x_p - x_q + c, normalized so the earlier variable carries +1.
  /// Returns the sign absorbed by the normalization (+1 or -1).
  static std::pair<int, LinearFactor> difference(VarId p, VarId q, const Rational& c)
  {
    if (p == q)
      throw std::invalid_argument("difference of a variable with itself is constant");
    if (p < q)
      return {1, LinearFactor(p, q, c)};
    return {-1, LinearFactor(q, p, -c)};
  }

  /// Recognizes s * (x_a - x_b + c) or s * (x_a + c) in a degree-one polynomial.
  /// Returns (s, factor) or nullopt when the polynomial is not of that shape.
  static std::optional<std::pair<Rational, LinearFactor>> recognize(const Poly& p)
  {
    if (p.total_degree() != 1)
      return std::nullopt;
    std::vector<std::pair<VarId, Rational>> linear;
    Rational constant = 0;
    for (const auto& [m, c] : p.terms()) {
      if (m.is_one()) {
        constant = c;
        continue;
      }
      if (m.degree() != 1)
        return std::nullopt;
      linear.emplace_back(m.entries().front().first, c);
    }
    std::sort(linear.begin(), linear.end());
    if (linear.size() == 1) {
      const auto& [v, s] = linear.front();
      return std::make_pair(s, shifted_var(v, constant / s));
    }
    if (linear.size() == 2 && linear[0].second == -linear[1].second) {
      const Rational s = linear[0].second;
      return std::make_pair(s, LinearFactor(linear[0].first, linear[1].first, constant / s));
    }
    return std::nullopt;
  }

  VarId a() const { return a_; }
  const std::optional<VarId>& b() const { return b_; }
  const Rational& c() const { return c_; }

  Poly to_poly() const
  {
    Poly p = Poly::var(a_) + Poly(c_);
    if (b_)
      p -= Poly::var(*b_);
    return p;
  }

  /// Image under x_v -> x_v - shift(v). Stays in the class; only c changes.
  LinearFactor shifted(const std::function<long(VarId)>& shift) const
  {
    Rational c = c_ - shift(a_);
    if (b_)
      c += shift(*b_);
    return LinearFactor(a_, b_, c);
  }

  /// Image under a renaming of variables; returns (sign, factor).
  std::pair<int, LinearFactor> renamed(const std::function<VarId(VarId)>& image) const
  {
    if (!b_)
      return {1, shifted_var(image(a_), c_)};
    return difference(image(a_), image(*b_), c_);
  }

  Rational evaluate(const std::function<Rational(VarId)>& value_of) const
  {
    Rational v = value_of(a_) + c_;
    if (b_)
      v -= value_of(*b_);
    return v;
  }

  std::string to_string() const
  {
    std::ostringstream os;
    os << agl::to_string(a_);
    if (b_)
      os << " - " << agl::to_string(*b_);
    if (c_ > 0)
      os << " + " << c_.get_str();
    else if (c_ < 0)
      os << " - " << Rational(-c_).get_str();
    return os.str();
  }

  friend bool operator==(const LinearFactor& x, const LinearFactor& y)
  {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend bool operator<(const LinearFactor& x, const LinearFactor& y)
  {
    if (x.a_ != y.a_)
      return x.a_ < y.a_;
    if (x.b_ != y.b_)
      return x.b_ < y.b_;
    return x.c_ < y.c_;
  }

private:
  LinearFactor(VarId a, std::optional<VarId> b, Rational c) : a_(a), b_(b), c_(std::move(c)) {}

  VarId a_;
  std::optional<VarId> b_;
  Rational c_;
};

/// Synthetic division in the variable a of the factor (x_a - r).
inline std::optional<Poly> Poly::exact_div(const LinearFactor& f) const
{
  if (is_zero())
    return Poly{};
  const VarId a = f.a();
  // f = x_a - r
  Poly r = -Poly(f.c());
  if (f.b())
    r += Poly::var(*f.b());
  if (degree_in(a) == 0)
    return std::nullopt;
  // a nonzero value (mod p) on the hyperplane x_a = r rules out divisibility
  auto probe = [](VarId v) { return modp::pow(1000003 + 7919 * v.row + 104729 * v.col, 3); };
  if (const auto r_at = r.residue_at(probe)) {
    const auto value = residue_at([&](VarId v) { return v == a ? *r_at : probe(v); });
    if (value && *value != 0)
      return std::nullopt;
  }
  std::vector<Poly> parts = split_by(a);
  const std::size_t m = parts.size() - 1;
  std::vector<Poly> quotient(m);
  quotient[m - 1] = parts[m];
  for (std::size_t j = m - 1; j >= 1; --j)
    quotient[j - 1] = parts[j] + r * quotient[j];
  Poly remainder = parts[0] + r * quotient[0];
  if (!remainder.is_zero())
    return std::nullopt;
  return Poly::join_by(a, quotient);
}

/// Element of Frac(Lambda) of the form scale * num / prod(den factors).
///
/// Canonical form: num is zero or has leading grlex coefficient 1, no
/// denominator factor divides num, and zero is (num = 0, den = {}, scale = 0).
/// Reduced forms are unique because linear factors are irreducible and
/// distinct canonical factors are non-associate, so equality is structural.
class RatFunc {
public:
  using Denominator = std::vector<std::pair<LinearFactor, unsigned>>;

  RatFunc() = default;
  RatFunc(const Poly& p)  // NOLINT(google-explicit-constructor)
      : num_(p), scale_(1)
  {
    normalize();
  }
  RatFunc(const Rational& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Poly(c)) {}             // NOLINT(google-explicit-constructor)

  /// Assembles without normalizing; call normalize() to canonicalize.
  static RatFunc from_parts(Poly num, const std::vector<LinearFactor>& den, Rational scale)
  {
    RatFunc r;
    r.num_ = std::move(num);
    r.scale_ = std::move(scale);
    std::map<LinearFactor, unsigned> counts;
    for (const auto& f : den)
      ++counts[f];
    r.den_.assign(counts.begin(), counts.end());
    return r;
  }

  /// 1 / factor
  static RatFunc reciprocal(const LinearFactor& f)
  {
    RatFunc r;
    r.num_ = Poly(1);
    r.scale_ = 1;
    r.den_.emplace_back(f, 1U);
    return r;
  }

  const Poly& num() const { return num_; }
  const Denominator& den() const { return den_; }
  const Rational& scale() const { return scale_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  /// scale * num; meaningful when is_polynomial().
  Poly numerator() const { return num_ * scale_; }
  Poly as_poly() const
  {
    if (!is_polynomial())
      throw std::logic_error("rational function has a nontrivial denominator");
    return numerator();
  }

  Poly denominator() const
  {
    Poly d(1);
    for (const auto& [f, e] : den_)
      d *= f.to_poly().pow(e);
    return d;
  }

  std::vector<LinearFactor> den_factors() const
  {
    std::vector<LinearFactor> fs;
    for (const auto& [f, e] : den_)
      for (unsigned k = 0; k < e; ++k)
        fs.push_back(f);
    return fs;
  }

  /// Cancels every denominator factor that divides the numerator, then makes num monic.
  RatFunc& normalize()
  {
    if (num_.is_zero() || scale_ == 0) {
      num_ = Poly{};
      den_.clear();
      scale_ = 0;
      return *this;
    }
    Denominator kept;
    for (auto& [f, e] : den_) {
      unsigned left = e;
      while (left > 0) {
        auto q = num_.exact_div(f);
        if (!q)
          break;
        num_ = std::move(*q);
        --left;
      }
      if (left > 0)
        kept.emplace_back(f, left);
    }
    den_ = std::move(kept);
    make_monic();
    return *this;
  }

  RatFunc& operator*=(const RatFunc& rhs)
  {
    if (is_zero() || rhs.is_zero())
      return *this = RatFunc{};
    // cancel across before multiplying; each side is already reduced
    Poly other = rhs.num_;
    Denominator mine = cancel_into(num_, rhs.den_);
    Denominator theirs = cancel_into(other, den_);
    num_ *= other;
    scale_ *= rhs.scale_;
    den_ = merge(mine, theirs, [](unsigned x, unsigned y) { return x + y; });
    make_monic();
    return *this;
  }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }

  RatFunc& operator+=(const RatFunc& rhs)
  {
    if (rhs.is_zero())
      return *this;
    if (is_zero())
      return *this = rhs;
    Denominator lcm = merge(den_, rhs.den_, [](unsigned x, unsigned y) { return std::max(x, y); });
    Poly total = cofactor(lcm, den_) * num_ * scale_ + cofactor(lcm, rhs.den_) * rhs.num_ * rhs.scale_;
    num_ = std::move(total);
    scale_ = 1;
    den_ = std::move(lcm);
    return normalize();
  }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }

  friend RatFunc operator-(RatFunc a)
  {
    a.scale_ = -a.scale_;
    return a;
  }
  RatFunc& operator-=(const RatFunc& rhs) { return *this += -rhs; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }

  friend bool operator==(const RatFunc& x, const RatFunc& y)
  {
    return x.scale_ == y.scale_ && x.num_ == y.num_ && x.den_ == y.den_;
  }

  /// 1/r; requires num to be constant or a single linear factor.
  RatFunc inverse() const
  {
    if (is_zero())
      throw std::domain_error("division by zero");
    if (num_.is_constant())
      return from_parts(denominator(), {}, Rational(1 / (scale_ * num_.constant_term()))).normalize();
    auto lin = LinearFactor::recognize(num_);
    if (!lin)
      throw std::domain_error("cannot invert: numerator " + num_.to_string() +
                              " is not a single affine-linear factor");
    return from_parts(denominator(), {lin->second}, Rational(1 / (scale_ * lin->first))).normalize();
  }

  /// x_v -> x_v - shift(v) on numerator and every factor.
  RatFunc shifted(const std::function<long(VarId)>& shift) const
  {
    if (is_zero())
      return {};
    RatFunc r;
    r.num_ = num_.substitute([&](VarId v) -> std::optional<Poly> {
      long s = shift(v);
      if (s == 0)
        return std::nullopt;
      return Poly::var(v) - Poly(s);
    });
    r.scale_ = scale_;
    std::map<LinearFactor, unsigned> counts;
    for (const auto& [f, e] : den_)
      counts[f.shifted(shift)] += e;
    r.den_.assign(counts.begin(), counts.end());
    return r.normalize();
  }

  /// Renames variables (a permutation within rows); canonical form restored.
  RatFunc renamed(const std::function<VarId(VarId)>& image) const
  {
    if (is_zero())
      return {};
    RatFunc r;
    r.num_ = num_.rename(image);
    r.scale_ = scale_;
    std::map<LinearFactor, unsigned> counts;
    for (const auto& [f, e] : den_) {
      auto [sign, g] = f.renamed(image);
      if (sign < 0 && (e % 2U) == 1U)
        r.scale_ = -r.scale_;
      counts[g] += e;
    }
    r.den_.assign(counts.begin(), counts.end());
    return r.normalize();
  }

  /// Throws std::domain_error when a denominator factor vanishes at the point.
  Rational evaluate(const std::function<Rational(VarId)>& value_of) const
  {
    if (is_zero())
      return 0;
    Rational d = 1;
    for (const auto& [f, e] : den_) {
      Rational v = f.evaluate(value_of);
      if (v == 0)
        throw std::domain_error("denominator factor (" + f.to_string() + ") vanishes at evaluation point");
      d *= agl::pow(v, e);
    }
    return scale_ * num_.evaluate(value_of) / d;
  }

  std::string to_string() const
  {
    const Poly top = numerator();
    if (den_.empty())
      return top.to_string();
    std::ostringstream os;
    if (top.size() > 1)
      os << "(" << top.to_string() << ")";
    else
      os << top.to_string();
    os << "/";
    const bool group = den_.size() > 1 || den_.front().second > 1;
    if (group)
      os << "(";
    bool first = true;
    for (const auto& [f, e] : den_) {
      if (!first)
        os << "*";
      first = false;
      os << "(" << f.to_string() << ")";
      if (e > 1)
        os << "^" << e;
    }
    if (group)
      os << ")";
    return os.str();
  }

private:
  template <class Combine>
  static Denominator merge(const Denominator& x, const Denominator& y, Combine combine)
  {
    std::map<LinearFactor, unsigned> counts;
    for (const auto& [f, e] : x)
      counts[f] = e;
    for (const auto& [f, e] : y) {
      auto it = counts.find(f);
      if (it == counts.end())
        counts.emplace(f, combine(0U, e));
      else
        it->second = combine(it->second, e);
    }
    return Denominator(counts.begin(), counts.end());
  }

  void make_monic()
  {
    const Rational lc = num_.leading_term().second;
    if (lc != 1) {
      num_ *= Rational(1 / lc);
      scale_ *= lc;
    }
  }

  /// Divides p by as many factors of den as possible; returns what is left of den.
  static Denominator cancel_into(Poly& p, const Denominator& den)
  {
    Denominator kept;
    for (const auto& [f, e] : den) {
      unsigned left = e;
      while (left > 0) {
        auto q = p.exact_div(f);
        if (!q)
          break;
        p = std::move(*q);
        --left;
      }
      if (left > 0)
        kept.emplace_back(f, left);
    }
    return kept;
  }

  /// prod over lcm of f^(e_lcm - e_part)
  static Poly cofactor(const Denominator& lcm, const Denominator& part)
  {
    Poly p(1);
    std::size_t j = 0;
    for (const auto& [f, e] : lcm) {
      unsigned have = 0;
      while (j < part.size() && part[j].first < f)
        ++j;
      if (j < part.size() && part[j].first == f)
        have = part[j].second;
      if (e > have)
        p *= f.to_poly().pow(e - have);
    }
    return p;
  }

  Poly num_;
  Denominator den_;
  Rational scale_ = 0;
};

}  // namespace agl
