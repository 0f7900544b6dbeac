#pragma once

#include "agl/permutation.hpp"
#include "agl/ratfunc.hpp"
#include "agl/shift.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace agl {

/// mu(p) for mu = prod (delta^v)^{s(v)}: substitutes x_v -> x_v - s(v).
inline RatFunc apply_shift(const RatFunc& p, const ShiftVector& mu)
{
  if (mu.is_identity())
    return p;
  return p.shifted([&](VarId v) { return mu[v]; });
}

inline RatFunc apply_permutation(const RatFunc& p, const RowPermutation& g)
{
  return p.renamed([&](VarId v) { return g.apply(v); });
}

/// g mu g^{-1}: shift entries travel with their variables.
inline ShiftVector conjugate(const RowPermutation& g, const ShiftVector& mu)
{
  std::vector<ShiftVector::Entry> entries;
  for (const auto& [v, p] : mu.entries())
    entries.emplace_back(g.apply(v), p);
  return ShiftVector::from_entries(std::move(entries));
}

/// Element sum_mu a_mu * mu of the skew group ring L # M, stored with
/// coefficients on the left. Multiplication: (a mu)(b nu) = a mu(b) (mu nu).
class SkewElement {
public:
  using TermMap = std::map<ShiftVector, RatFunc>;

  SkewElement() = default;
  SkewElement(const RatFunc& a)  // NOLINT(google-explicit-constructor)
  {
    add(ShiftVector{}, a);
  }
  SkewElement(const Poly& p) : SkewElement(RatFunc(p)) {}      // NOLINT(google-explicit-constructor)
  SkewElement(const Rational& c) : SkewElement(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  SkewElement(long c) : SkewElement(RatFunc(c)) {}             // NOLINT(google-explicit-constructor)

  /// a * mu
  static SkewElement left(const RatFunc& a, const ShiftVector& mu)
  {
    SkewElement u;
    u.add(mu, a);
    return u;
  }
  /// mu * alpha = mu(alpha) * mu
  static SkewElement right(const ShiftVector& mu, const RatFunc& alpha) { return left(apply_shift(alpha, mu), mu); }
  static SkewElement shift(const ShiftVector& mu) { return left(RatFunc(1), mu); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Left coefficient of mu (zero when mu is outside the support).
  RatFunc coefficient(const ShiftVector& mu) const
  {
    auto it = terms_.find(mu);
    return it == terms_.end() ? RatFunc{} : it->second;
  }

  std::set<ShiftVector> support() const
  {
    std::set<ShiftVector> s;
    for (const auto& entry : terms_)
      s.insert(entry.first);
    return s;
  }

  /// True when the support is {e} or empty.
  bool is_degree_zero() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity()); }

  /// Right coefficients alpha_mu with u = sum mu * alpha_mu.
  TermMap right_form() const
  {
    TermMap out;
    for (const auto& [mu, a] : terms_)
      out.emplace(mu, apply_shift(a, -mu));
    return out;
  }
  static SkewElement from_right_form(const TermMap& right_terms)
  {
    SkewElement u;
    for (const auto& [mu, alpha] : right_terms)
      u.add(mu, apply_shift(alpha, mu));
    return u;
  }

  SkewElement& operator+=(const SkewElement& rhs)
  {
    for (const auto& [mu, a] : rhs.terms_)
      add(mu, a);
    return *this;
  }
  SkewElement& operator-=(const SkewElement& rhs)
  {
    for (const auto& [mu, a] : rhs.terms_)
      add(mu, -a);
    return *this;
  }
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend SkewElement operator-(SkewElement a)
  {
    for (auto& entry : a.terms_)
      entry.second = -entry.second;
    return a;
  }

  friend SkewElement operator*(const SkewElement& lhs, const SkewElement& rhs)
  {
    SkewElement out;
    for (const auto& [mu, a] : lhs.terms_)
      for (const auto& [nu, b] : rhs.terms_)
        out.add(mu + nu, a * apply_shift(b, mu));
    return out;
  }
  SkewElement& operator*=(const SkewElement& rhs) { return *this = *this * rhs; }

  friend SkewElement operator*(const Rational& c, SkewElement u)
  {
    if (c == 0)
      return {};
    for (auto& entry : u.terms_)
      entry.second *= RatFunc(c);
    return u;
  }

  friend bool operator==(const SkewElement&, const SkewElement&) = default;

  SkewElement pow(unsigned e) const
  {
    SkewElement result(1);
    for (unsigned k = 0; k < e; ++k)
      result *= *this;
    return result;
  }

  /// (a mu)^{-1} = mu^{-1}(a^{-1}) mu^{-1}; only single-term elements qualify.
  SkewElement inverse() const
  {
    if (terms_.size() != 1)
      throw std::domain_error("only single-term skew elements are invertible here");
    const auto& [mu, a] = *terms_.begin();
    return left(apply_shift(a.inverse(), -mu), -mu);
  }

  /// "(coeff)*d21 + ..." ordered by shift vector; coefficients on the left.
  std::string to_string() const { return render(terms_, false); }
  /// "d21*(coeff) + ..." with right coefficients.
  std::string to_string_right() const { return render(right_form(), true); }

private:
  void add(const ShiftVector& mu, const RatFunc& a)
  {
    if (a.is_zero())
      return;
    auto [it, inserted] = terms_.emplace(mu, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  static std::string render(const TermMap& terms, bool coefficient_right)
  {
    if (terms.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, a] : terms) {
      if (!first)
        os << " + ";
      first = false;
      if (mu.is_identity()) {
        os << "(" << a.to_string() << ")";
      } else if (a == RatFunc(1)) {
        os << mu.to_string();
      } else if (coefficient_right) {
        os << mu.to_string() << "*(" << a.to_string() << ")";
      } else {
        os << "(" << a.to_string() << ")*" << mu.to_string();
      }
    }
    return os.str();
  }

  TermMap terms_;
};

inline SkewElement commutator(const SkewElement& a, const SkewElement& b) { return a * b - b * a; }

/// X(a) = sum mu(alpha_mu * a), alpha_mu the right coefficients.
inline RatFunc evaluate(const SkewElement& u, const RatFunc& a)
{
  RatFunc total;
  for (const auto& [mu, alpha] : u.right_form())
    total += apply_shift(alpha * a, mu);
  return total;
}

/// X^dagger(a) = sum alpha_mu * mu^{-1}(a).
inline RatFunc coevaluate(const SkewElement& u, const RatFunc& a)
{
  RatFunc total;
  for (const auto& [mu, alpha] : u.right_form())
    total += alpha * apply_shift(a, -mu);
  return total;
}

/// g(sum a_mu mu) = sum g(a_mu) (g mu g^{-1}).
inline SkewElement group_act(const RowPermutation& g, const SkewElement& u)
{
  SkewElement out;
  for (const auto& [mu, a] : u.terms())
    out += SkewElement::left(apply_permutation(a, g), conjugate(g, mu));
  return out;
}

/// Invariance under S_1 x ... x S_n or A_1 x ... x A_n, decided on generators.
inline bool is_invariant(const SkewElement& u, int n, GroupKind kind)
{
  for (const auto& g : group_generators(n, kind))
    if (!(group_act(g, u) == u))
      return false;
  return true;
}

}  // namespace agl
