#pragma once

#include "agl/rational.hpp"
#include "agl/var.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace agl {

/// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
/// exponents strictly positive.
class Monomial {
public:
  using Entry = std::pair<VarId, unsigned>;

  Monomial() = default;

  static Monomial var(VarId v, unsigned e = 1)
  {
    Monomial m;
    if (e != 0)
      m.entries_.emplace_back(v, e);
    return m;
  }

  /// Builds from unsorted entries, merging duplicates and dropping zeros.
  static Monomial from_entries(std::vector<Entry> entries)
  {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [v, e] : entries) {
      if (e == 0)
        continue;
      if (!m.entries_.empty() && m.entries_.back().first == v)
        m.entries_.back().second += e;
      else
        m.entries_.emplace_back(v, e);
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  unsigned degree() const
  {
    unsigned d = 0;
    for (const auto& entry : entries_)
      d += entry.second;
    return d;
  }

  unsigned exponent(VarId v) const
  {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VarId key) { return e.first < key; });
    return (it != entries_.end() && it->first == v) ? it->second : 0U;
  }

  /// Same monomial with variable v removed.
  Monomial without(VarId v) const
  {
    Monomial m;
    for (const auto& entry : entries_)
      if (entry.first != v)
        m.entries_.push_back(entry);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b)
  {
    Monomial m;
    m.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
        m.entries_.push_back(*i++);
      } else if (i == a.entries_.end() || j->first < i->first) {
        m.entries_.push_back(*j++);
      } else {
        m.entries_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Entry> entries_;
};

/// Graded lexicographic order; earlier variables (row-major) are more significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const
  {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db)
      return da < db;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ea.size() && j < eb.size()) {
      if (ea[i].first != eb[j].first)
        return eb[j].first < ea[i].first;  // b has the earlier variable, so b > a
      if (ea[i].second != eb[j].second)
        return ea[i].second < eb[j].second;
      ++i;
      ++j;
    }
    return i == ea.size() && j < eb.size();
  }
};

class LinearFactor;

/// Exact sparse multivariate polynomial over the rationals.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Poly() = default;
  Poly(const Rational& c)  // NOLINT(google-explicit-constructor)
  {
    if (c != 0)
      terms_.emplace(Monomial{}, c);
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(VarId v) { return monomial(Monomial::var(v), 1); }
  static Poly monomial(const Monomial& m, const Rational& c)
  {
    Poly p;
    if (c != 0)
      p.terms_.emplace(m, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const
  {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Rational constant_term() const
  {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned total_degree() const { return terms_.empty() ? 0U : terms_.rbegin()->first.degree(); }

  unsigned degree_in(VarId v) const
  {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, m.exponent(v));
    return d;
  }

  /// Greatest term in grlex order. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const { return *terms_.rbegin(); }

  std::vector<VarId> variables() const
  {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.entries())
        vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  Poly& operator+=(const Poly& rhs)
  {
    for (const auto& [m, c] : rhs.terms_)
      add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& rhs)
  {
    for (const auto& [m, c] : rhs.terms_)
      add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_)
      entry.second *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a)
  {
    for (auto& entry : a.terms_)
      entry.second = -entry.second;
    return a;
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b)
  {
    Poly p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        p.add_term(ma * mb, ca * cb);
    return p;
  }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  Poly pow(unsigned e) const
  {
    Poly result(1);
    Poly base = *this;
    while (e != 0) {
      if (e & 1U)
        result *= base;
      e >>= 1U;
      if (e != 0)
        base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Substitutes each variable v with poly_of(v) (returns nullopt to keep v).
  Poly substitute(const std::function<std::optional<Poly>(VarId)>& poly_of) const
  {
    std::map<std::pair<VarId, unsigned>, Poly> power_cache;
    Poly result;
    for (const auto& [m, c] : terms_) {
      Poly term(c);
      std::vector<Monomial::Entry> kept;
      for (const auto& [v, e] : m.entries()) {
        auto image = poly_of(v);
        if (!image) {
          kept.emplace_back(v, e);
          continue;
        }
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end())
          it = power_cache.emplace(key, image->pow(e)).first;
        term *= it->second;
      }
      if (!kept.empty())
        term *= monomial(Monomial::from_entries(std::move(kept)), 1);
      result += term;
    }
    return result;
  }

  /// Renames variables; the map must be injective on the variables present.
  Poly rename(const std::function<VarId(VarId)>& image) const
  {
    Poly result;
    for (const auto& [m, c] : terms_) {
      std::vector<Monomial::Entry> entries;
      entries.reserve(m.entries().size());
      for (const auto& [v, e] : m.entries())
        entries.emplace_back(image(v), e);
      result.add_term(Monomial::from_entries(std::move(entries)), c);
    }
    return result;
  }

  /// Coefficients of powers of v: result[j] multiplies v^j.
  std::vector<Poly> split_by(VarId v) const
  {
    std::vector<Poly> parts(degree_in(v) + 1);
    for (const auto& [m, c] : terms_)
      parts[m.exponent(v)].add_term(m.without(v), c);
    return parts;
  }

  static Poly join_by(VarId v, const std::vector<Poly>& parts)
  {
    Poly result;
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (const auto& [m, c] : parts[j].terms_)
        result.add_term(m * Monomial::var(v, static_cast<unsigned>(j)), c);
    return result;
  }

  /// Evaluates at a point; value_of must return a value for every variable present.
  Rational evaluate(const std::function<Rational(VarId)>& value_of) const
  {
    Rational total = 0;
    std::map<VarId, Rational> cache;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const auto& [v, e] : m.entries()) {
        auto it = cache.find(v);
        if (it == cache.end())
          it = cache.emplace(v, value_of(v)).first;
        t *= agl::pow(it->second, e);
      }
      total += t;
    }
    return total;
  }

  /// Value modulo modp::prime; nullopt when a coefficient has no residue.
  std::optional<std::uint64_t> residue_at(const std::function<std::uint64_t(VarId)>& value_of) const
  {
    std::uint64_t total = 0;
    std::map<VarId, std::uint64_t> cache;
    for (const auto& [m, c] : terms_) {
      auto t = modp::residue(c);
      if (!t)
        return std::nullopt;
      for (const auto& [v, e] : m.entries()) {
        auto it = cache.find(v);
        if (it == cache.end())
          it = cache.emplace(v, value_of(v)).first;
        *t = modp::mul(*t, modp::pow(it->second, e));
      }
      total = modp::add(total, *t);
    }
    return total;
  }

  std::optional<Poly> exact_div(const LinearFactor& f) const;

  std::string to_string() const
  {
    if (terms_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (c < 0)
          os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (m.is_one()) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1)
        os << mag.get_str() << "*";
      bool first_var = true;
      for (const auto& [v, e] : m.entries()) {
        if (!first_var)
          os << "*";
        first_var = false;
        os << agl::to_string(v);
        if (e != 1)
          os << "^" << e;
      }
    }
    return os.str();
  }

  void add_term(const Monomial& m, const Rational& c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

private:
  TermMap terms_;
};

}  // namespace agl
