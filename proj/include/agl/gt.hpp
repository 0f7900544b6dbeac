#pragma once

#include "agl/matrix.hpp"
#include "agl/relations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace agl {

/// Triangular array lambda_ki, 1 <= i <= k <= n; row k stored at index k - 1.
class GTPattern {
public:
  GTPattern() = default;
  explicit GTPattern(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows))
  {
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (rows_[k].size() != k + 1)
        throw std::invalid_argument("pattern row k must have k entries");
  }

  int n() const { return static_cast<int>(rows_.size()); }
  const std::vector<Rational>& row(int k) const { return rows_.at(static_cast<std::size_t>(k - 1)); }
  const Rational& at(int k, int i) const { return row(k).at(static_cast<std::size_t>(i - 1)); }
  void set(int k, int i, const Rational& v) { rows_.at(static_cast<std::size_t>(k - 1)).at(static_cast<std::size_t>(i - 1)) = v; }

  /// x_ki = lambda_ki - i + 1
  Rational point(VarId v) const { return at(v.row, v.col) - v.col + 1; }

  bool is_integral() const
  {
    for (const auto& r : rows_)
      for (const auto& v : r)
        if (!is_integer(v))
          return false;
    return true;
  }

  bool interlaces() const
  {
    for (int k = 1; k < n(); ++k)
      for (int i = 1; i <= k; ++i)
        if (!(at(k + 1, i) >= at(k, i) && at(k, i) >= at(k + 1, i + 1)))
          return false;
    return true;
  }

  friend auto operator<=>(const GTPattern& a, const GTPattern& b)
  {
    return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end(),
                                                  [](const auto& x, const auto& y) {
                                                    return std::lexicographical_compare_three_way(
                                                        x.begin(), x.end(), y.begin(), y.end(),
                                                        [](const Rational& p, const Rational& q) {
                                                          return p < q   ? std::weak_ordering::less
                                                                 : q < p ? std::weak_ordering::greater
                                                                         : std::weak_ordering::equivalent;
                                                        });
                                                  });
  }
  friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows_ == b.rows_; }

  /// Rows from the top: "2 1 0 | 2 0 | 1"
  std::string to_string() const
  {
    std::ostringstream os;
    for (int k = n(); k >= 1; --k) {
      for (int i = 1; i <= k; ++i)
        os << (i == 1 ? "" : " ") << agl::to_string(at(k, i));
      if (k > 1)
        os << " | ";
    }
    return os.str();
  }

private:
  std::vector<std::vector<Rational>> rows_;
};

inline void require_dominant(const std::vector<long>& top)
{
  if (top.empty())
    throw std::invalid_argument("top row is empty");
  for (std::size_t i = 1; i < top.size(); ++i)
    if (top[i - 1] < top[i])
      throw std::invalid_argument("top row must be weakly decreasing (dominant integral)");
}

/// All integral interlacing patterns with the given top row, in increasing
/// pattern order.
inline std::vector<GTPattern> enumerate_patterns(const std::vector<long>& top)
{
  require_dominant(top);
  const int n = static_cast<int>(top.size());
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    rows[k - 1].assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < n; ++i)
    rows[n - 1][i] = top[i];
  std::vector<GTPattern> out;
  // fill row k, column i, given row k + 1
  std::function<void(int, int)> fill = [&](int k, int i) {
    if (k == 0) {
      out.emplace_back(rows);
      return;
    }
    if (i > k) {
      fill(k - 1, 1);
      return;
    }
    const auto& upper = rows[k];
    long hi = upper[i - 1].get_num().get_si();
    long lo = upper[i].get_num().get_si();
    for (long v = lo; v <= hi; ++v) {
      rows[k - 1][i - 1] = v;
      fill(k, i + 1);
    }
  };
  fill(n - 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct row-k fillings, sorted lexicographically descending.
inline std::vector<std::vector<Rational>> row_fillings(const std::vector<long>& top, int k)
{
  if (k < 1 || k > static_cast<int>(top.size()))
    throw std::out_of_range("row index out of range");
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : enumerate_patterns(top))
    rows.push_back(p.row(k));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::reverse(rows.begin(), rows.end());
  return rows;
}

inline std::size_t count_row_fillings(const std::vector<long>& top, int k) { return row_fillings(top, k).size(); }

/// epsilon_k for rows k = 2..n: one sign per distinct row-k filling, indexed
/// in the order of row_fillings.
class SignData {
public:
  static SignData uniform(const std::vector<long>& top, int sign)
  {
    SignData s;
    for (int k = 2; k <= static_cast<int>(top.size()); ++k)
      for (auto& f : row_fillings(top, k))
        s.signs_[k][f] = sign;
    return s;
  }

  /// per_row[k - 2] lists the signs for row k.
  static SignData from_rows(const std::vector<long>& top, const std::vector<std::vector<int>>& per_row)
  {
    const int n = static_cast<int>(top.size());
    if (static_cast<int>(per_row.size()) != n - 1)
      throw std::invalid_argument("sign data needs one list per row 2.." + std::to_string(n));
    SignData s;
    for (int k = 2; k <= n; ++k) {
      auto fills = row_fillings(top, k);
      const auto& given = per_row[k - 2];
      if (given.size() != fills.size())
        throw std::invalid_argument("row " + std::to_string(k) + " needs " + std::to_string(fills.size()) +
                                    " signs, got " + std::to_string(given.size()));
      for (std::size_t j = 0; j < fills.size(); ++j) {
        if (given[j] != 1 && given[j] != -1)
          throw std::invalid_argument("signs must be +1 or -1");
        s.signs_[k][fills[j]] = given[j];
      }
    }
    return s;
  }

  int sign(int k, const std::vector<Rational>& filling) const
  {
    auto row = signs_.find(k);
    if (row == signs_.end())
      throw std::out_of_range("no signs for row " + std::to_string(k));
    auto it = row->second.find(filling);
    if (it == row->second.end())
      throw std::out_of_range("no sign for this row filling");
    return it->second;
  }

  /// True when every row carries a single sign.
  bool row_uniform() const
  {
    for (const auto& [k, m] : signs_) {
      for (const auto& [f, s] : m)
        if (s != m.begin()->second)
          return false;
    }
    return true;
  }

  /// Row 2 first, rows separated by " / ", signs in row_fillings order.
  std::string to_string() const
  {
    std::ostringstream os;
    for (const auto& [k, m] : signs_) {
      os << (k == signs_.begin()->first ? "" : " / ");
      bool first = true;
      for (auto it = m.rbegin(); it != m.rend(); ++it) {
        os << (first ? "" : ",") << (it->second > 0 ? "+" : "-");
        first = false;
      }
    }
    return os.str();
  }

private:
  std::map<int, std::map<std::vector<Rational>, int>> signs_;
};

/// "all-plus", "all-minus", "+,-,+ / +" (rows 2..n separated by '/'), or a
/// flat comma list covering rows 2..n in order; a flat list that stops after
/// row n - 1 leaves epsilon_n = +.
inline SignData parse_signs(const std::vector<long>& top, const std::string& text)
{
  if (text == "all-plus")
    return SignData::uniform(top, 1);
  if (text == "all-minus")
    return SignData::uniform(top, -1);
  auto parse_list = [](const std::string& part) {
    std::vector<int> signs;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      if (item == "+" || item == "+1" || item == "1")
        signs.push_back(1);
      else if (item == "-" || item == "-1")
        signs.push_back(-1);
      else
        throw std::invalid_argument("bad sign '" + item + "' (use + or -)");
    }
    return signs;
  };
  const int n = static_cast<int>(top.size());
  std::vector<std::vector<int>> rows;
  if (text.find('/') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '/'))
      rows.push_back(parse_list(part));
    if (static_cast<int>(rows.size()) == n - 2)
      rows.push_back({1});
    return SignData::from_rows(top, rows);
  }
  std::vector<int> flat = parse_list(text);
  std::size_t pos = 0;
  for (int k = 2; k <= n; ++k) {
    const std::size_t r = count_row_fillings(top, k);
    if (k == n && pos == flat.size()) {
      rows.push_back(std::vector<int>(r, 1));
      break;
    }
    if (pos + r > flat.size())
      throw std::invalid_argument("too few signs for row " + std::to_string(k));
    rows.emplace_back(flat.begin() + static_cast<long>(pos), flat.begin() + static_cast<long>(pos + r));
    pos += r;
  }
  if (pos != flat.size())
    throw std::invalid_argument("too many signs");
  return SignData::from_rows(top, rows);
}

/// epsilon * prod_{i<j} (lambda_ki - lambda_kj + j - i)
inline Rational act_vandermonde(int k, const GTPattern& p, const SignData& signs)
{
  Rational value = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      value *= p.at(k, i) - p.at(k, j) + j - i;
  return signs.sign(k, p.row(k)) * value;
}

/// Formal sum of (coefficient, target) produced by one skew element on one pattern.
using PatternSum = std::vector<std::pair<Rational, GTPattern>>;

/// Action of u = sum mu * alpha_mu on the basis vector of p: a term whose shift
/// adds s to coordinate (k, i) sends p to p + s e_ki with coefficient
/// alpha_mu evaluated at the rho-shifted point of p.
inline PatternSum act_skew(const SkewElement& u, const GTPattern& p)
{
  PatternSum out;
  auto value_of = [&](VarId v) { return p.point(v); };
  for (const auto& [mu, alpha] : u.right_form()) {
    Rational c = alpha.evaluate(value_of);
    if (c == 0)
      continue;
    GTPattern target = p;
    for (const auto& [v, s] : mu.entries())
      target.set(v.row, v.col, target.at(v.row, v.col) + s);
    out.emplace_back(std::move(c), std::move(target));
  }
  return out;
}

/// Interlacing violation that the coefficient must kill on its own: raising
/// lambda_ki past lambda_{k+1,i}, or lowering it past lambda_{k-1,i}.
inline bool forced_zero_violation(const GTPattern& source, const GTPattern& target)
{
  for (int k = 1; k < source.n(); ++k)
    for (int i = 1; i <= k; ++i) {
      if (target.at(k, i) > source.at(k, i) && target.at(k, i) > target.at(k + 1, i))
        return true;
      if (target.at(k, i) < source.at(k, i) && i < k && target.at(k, i) < target.at(k - 1, i))
        return true;
    }
  return false;
}

/// Generator name -> matrix on a fixed basis.
struct ModuleRealization {
  std::vector<GTPattern> basis;
  std::map<std::string, Matrix> matrices;
  /// Chebyshev distance of each basis vector from the base point (generic modules).
  std::vector<int> radius;
  int window = 0;

  std::size_t dim() const { return basis.size(); }

  const Matrix& operator[](const std::string& name) const
  {
    auto it = matrices.find(name);
    if (it == matrices.end())
      throw std::invalid_argument("module has no matrix for '" + name + "'");
    return it->second;
  }
  Relation<Matrix>::Env env() const
  {
    return [this](const std::string& name) { return (*this)[name]; };
  }
};

namespace detail {

inline std::map<GTPattern, std::size_t> index_of(const std::vector<GTPattern>& basis)
{
  std::map<GTPattern, std::size_t> idx;
  for (std::size_t j = 0; j < basis.size(); ++j)
    idx.emplace(basis[j], j);
  return idx;
}

enum class Boundary { finite, truncate };

inline Matrix skew_matrix(const SkewElement& u, const std::vector<GTPattern>& basis,
                          const std::map<GTPattern, std::size_t>& idx, Boundary boundary)
{
  Matrix m(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (auto& [c, target] : act_skew(u, basis[j])) {
      auto it = idx.find(target);
      if (it != idx.end()) {
        m.add_to(it->second, j, c);
      } else if (boundary == Boundary::finite && forced_zero_violation(basis[j], target)) {
        throw std::logic_error("nonzero coefficient " + agl::to_string(c) + " towards inadmissible pattern " +
                               target.to_string());
      }
    }
  return m;
}

inline void add_a2_matrices(ModuleRealization& mod)
{
  for (Sign s : both_signs) {
    const std::string p(1, sign_char(s));
    const Matrix& x2 = mod["X2" + p];
    Matrix xt = Rational(sign_value(s)) * commutator(mod["V2"], x2);
    mod.matrices["Xt2" + p] = xt;
    mod.matrices["A21" + p] = Rational(1, 2) * (x2 + xt);
    mod.matrices["A22" + p] = Rational(1, 2) * (x2 - xt);
  }
}

}  // namespace detail

/// V(lambda, epsilon): matrices of X_k^{+-}, X_kk, V_k on the GT basis, plus
/// A11 = X1 and A21, A22 = (X2 +- Xt2)/2 with Xt2 = +-[V2, X2] when n >= 3.
inline ModuleRealization build_module(const std::vector<long>& top, const SignData& signs)
{
  const int n = static_cast<int>(top.size());
  TriangleContext ctx(n);
  ModuleRealization mod;
  mod.basis = enumerate_patterns(top);
  mod.radius.assign(mod.basis.size(), 0);
  const auto idx = detail::index_of(mod.basis);
  for (int k = 1; k < n; ++k)
    for (Sign s : both_signs)
      mod.matrices["X" + std::to_string(k) + sign_char(s)] =
          detail::skew_matrix(build_X(ctx, k, s), mod.basis, idx, detail::Boundary::finite);
  for (int k = 1; k <= n; ++k)
    mod.matrices["X" + std::to_string(k) + std::to_string(k)] =
        detail::skew_matrix(build_Xkk(ctx, k), mod.basis, idx, detail::Boundary::finite);
  for (int k = 2; k <= n; ++k) {
    Matrix v(mod.dim());
    for (std::size_t j = 0; j < mod.dim(); ++j)
      v.add_to(j, j, act_vandermonde(k, mod.basis[j], signs));
    mod.matrices["V" + std::to_string(k)] = std::move(v);
  }
  if (n >= 2) {
    mod.matrices["A11+"] = mod["X1+"];
    mod.matrices["A11-"] = mod["X1-"];
  }
  if (n >= 3)
    detail::add_a2_matrices(mod);
  return mod;
}

/// Diagonal matrix of the polynomial V_k^2 evaluated at each basis point.
inline Matrix evaluated_vandermonde_square(const ModuleRealization& mod, int k)
{
  const Poly sq = vandermonde(k).pow(2);
  Matrix m(mod.dim());
  for (std::size_t j = 0; j < mod.dim(); ++j)
    m.add_to(j, j, sq.evaluate([&](VarId v) { return mod.basis[j].point(v); }));
  return m;
}

/// Every rho-shifted row of the point (rows 1..n-1) has pairwise non-integer differences.
inline bool is_regular_point(const GTPattern& point)
{
  for (int k = 1; k < point.n(); ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (is_integer(point.at(k, i) - point.at(k, j)))
          return false;
  return true;
}

/// Basis point + l for l in the box [-window, window]^{n(n-1)/2} over rows 1..n-1.
inline ModuleRealization build_generic_module(const GTPattern& point, int window)
{
  if (window < 0)
    throw std::invalid_argument("window radius must be nonnegative");
  if (!is_regular_point(point))
    throw std::invalid_argument("point is not regular: some row has an integer difference");
  const int n = point.n();
  TriangleContext ctx(n);
  const auto coords = ctx.shift_coordinates();
  ModuleRealization mod;
  mod.window = window;
  std::vector<long> offset(coords.size(), -window);
  while (true) {
    GTPattern p = point;
    int norm = 0;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      p.set(coords[c].row, coords[c].col, p.at(coords[c].row, coords[c].col) + offset[c]);
      norm = std::max(norm, static_cast<int>(std::labs(offset[c])));
    }
    mod.basis.push_back(std::move(p));
    mod.radius.push_back(norm);
    std::size_t c = 0;
    while (c < offset.size() && offset[c] == window)
      offset[c++] = -window;
    if (c == offset.size())
      break;
    ++offset[c];
  }
  const auto idx = detail::index_of(mod.basis);
  auto add = [&](const std::string& name, const SkewElement& u) {
    mod.matrices[name] = detail::skew_matrix(u, mod.basis, idx, detail::Boundary::truncate);
  };
  for (int k = 1; k < n; ++k)
    for (Sign s : both_signs)
      add("X" + std::to_string(k) + sign_char(s), build_X(ctx, k, s));
  for (int k = 1; k <= n; ++k)
    add("X" + std::to_string(k) + std::to_string(k), build_Xkk(ctx, k));
  for (int k = 2; k <= n; ++k)
    add("V" + std::to_string(k), build_V(ctx, k));
  if (n >= 2) {
    mod.matrices["A11+"] = mod["X1+"];
    mod.matrices["A11-"] = mod["X1-"];
  }
  if (n >= 3)
    for (Sign s : both_signs)
      for (int i = 1; i <= 2; ++i)
        add("A2" + std::to_string(i) + sign_char(s), build_A(ctx, 2, i, s));
  return mod;
}

/// Relation residuals on the module; for windowed modules only columns of
/// vectors at distance <= window - (depth - 1) from the point are compared.
inline VerificationReport check_module(const std::string& suite, const ModuleRealization& mod,
                                       const std::vector<Relation<Matrix>>& rels)
{
  VerificationReport report{suite, {}};
  auto env = mod.env();
  for (const auto& rel : rels) {
    auto start = std::chrono::steady_clock::now();
    Matrix residual = rel.residual(env);
    if (mod.window > 0) {
      std::vector<bool> keep(mod.dim());
      for (std::size_t j = 0; j < mod.dim(); ++j)
        keep[j] = mod.radius[j] <= mod.window - (rel.depth - 1);
      residual = residual.restrict_columns(keep);
    }
    CheckResult r;
    r.id = rel.id;
    r.anchor = rel.anchor;
    r.passed = residual.is_zero();
    if (!r.passed)
      r.matrix_witness = std::move(residual);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(r));
  }
  return report;
}

/// Relations every module V(lambda, epsilon) satisfies: U(gl_n), the
/// Vandermonde commutations, and V_k^2 equal to the evaluated polynomial.
/// With all-plus (or row-uniform) signs and n = 3, the nine A(gl_3) families too.
inline VerificationReport check_finite_module(const ModuleRealization& mod, int n, bool include_agl3)
{
  auto rels = ugl_relations<Matrix>(n);
  auto vrels = vandermonde_relations<Matrix>(n);
  rels.insert(rels.end(), vrels.begin(), vrels.end());
  if (include_agl3) {
    auto a = agl3_relations<Matrix>();
    rels.insert(rels.end(), a.begin(), a.end());
  }
  VerificationReport report = check_module("module", mod, rels);
  for (int k = 2; k <= n; ++k) {
    CheckResult r;
    r.id = "V" + std::to_string(k) + "-square";
    r.anchor = "V" + std::to_string(k) + "^2 = evaluated polynomial V" + std::to_string(k) + "^2";
    Matrix diff = mod["V" + std::to_string(k)] * mod["V" + std::to_string(k)] - evaluated_vandermonde_square(mod, k);
    r.passed = diff.is_zero();
    if (!r.passed)
      r.matrix_witness = std::move(diff);
    report.results.push_back(std::move(r));
  }
  return report;
}

/// Sorted distinct diagonal entries of a diagonal matrix.
inline std::vector<Rational> diagonal_spectrum(const Matrix& m)
{
  if (!m.is_diagonal())
    throw std::invalid_argument("matrix is not diagonal");
  std::vector<Rational> vals;
  for (std::size_t j = 0; j < m.dim(); ++j)
    vals.push_back(m.at(j, j));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

/// V(0) + V(0) with trivial U(gl_2) action and V2 = [[1, alpha], [0, -1]].
inline ModuleRealization example_nonsemisimple(const Rational& alpha)
{
  if (alpha == 0)
    throw std::invalid_argument("alpha must be nonzero");
  ModuleRealization mod;
  GTPattern zero({{0}, {0, 0}});
  mod.basis = {zero, zero};
  mod.radius = {0, 0};
  for (const char* name : {"X1+", "X1-", "X11", "X22"})
    mod.matrices[name] = Matrix(2);
  Matrix v(2);
  v.add_to(0, 0, 1);
  v.add_to(0, 1, alpha);
  v.add_to(1, 1, -1);
  mod.matrices["V2"] = v;
  return mod;
}

/// -1 eigenvector of V2 in example_nonsemisimple: (alpha, -2).
inline std::vector<Rational> nonsemisimple_complement(const Rational& alpha) { return {alpha, Rational(-2)}; }

inline std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v)
{
  std::vector<Rational> out(m.dim(), 0);
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (const auto& [i, a] : m.column(j))
      out[i] += a * v.at(j);
  return out;
}

}  // namespace agl
