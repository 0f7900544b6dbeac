#pragma once

#include "agl/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace agl {

/// Sparse square matrix over the rationals, stored column by column
/// (column j holds the image of basis vector j).
class Matrix {
public:
  using Column = std::map<std::size_t, Rational>;

  Matrix() = default;
  explicit Matrix(std::size_t dim) : cols_(dim) {}

  static Matrix identity(std::size_t dim, const Rational& c = 1)
  {
    Matrix m(dim);
    if (c != 0)
      for (std::size_t j = 0; j < dim; ++j)
        m.cols_[j][j] = c;
    return m;
  }

  std::size_t dim() const { return cols_.size(); }
  const Column& column(std::size_t j) const { return cols_.at(j); }

  Rational at(std::size_t i, std::size_t j) const
  {
    const auto& col = cols_.at(j);
    auto it = col.find(i);
    return it == col.end() ? Rational(0) : it->second;
  }

  void add_to(std::size_t i, std::size_t j, const Rational& v)
  {
    if (v == 0)
      return;
    if (i >= dim() || j >= dim())
      throw std::out_of_range("matrix index out of range");
    auto& col = cols_[j];
    auto [it, inserted] = col.emplace(i, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0)
        col.erase(it);
    }
  }

  bool is_zero() const
  {
    for (const auto& col : cols_)
      if (!col.empty())
        return false;
    return true;
  }

  bool is_diagonal() const
  {
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [i, v] : cols_[j])
        if (i != j)
          return false;
    return true;
  }

  Matrix& operator+=(const Matrix& rhs)
  {
    check_dim(rhs);
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [i, v] : rhs.cols_[j])
        add_to(i, j, v);
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs)
  {
    check_dim(rhs);
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [i, v] : rhs.cols_[j])
        add_to(i, j, -v);
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a)
  {
    for (auto& col : a.cols_)
      for (auto& entry : col)
        entry.second = -entry.second;
    return a;
  }

  friend Matrix operator*(const Rational& c, Matrix m)
  {
    if (c == 0)
      return Matrix(m.dim());
    for (auto& col : m.cols_)
      for (auto& entry : col)
        entry.second *= c;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b)
  {
    a.check_dim(b);
    Matrix out(a.dim());
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& [k, bkj] : b.cols_[j])
        for (const auto& [i, aik] : a.cols_[k])
          out.add_to(i, j, aik * bkj);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Columns outside `keep` zeroed.
  Matrix restrict_columns(const std::vector<bool>& keep) const
  {
    Matrix out = *this;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!keep.at(j))
        out.cols_[j].clear();
    return out;
  }

  std::vector<std::vector<Rational>> dense() const
  {
    std::vector<std::vector<Rational>> rows(dim(), std::vector<Rational>(dim(), 0));
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [i, v] : cols_[j])
        rows[i][j] = v;
    return rows;
  }

  std::string to_string() const
  {
    std::ostringstream os;
    for (const auto& row : dense()) {
      os << "[";
      for (std::size_t j = 0; j < row.size(); ++j)
        os << (j ? " " : "") << agl::to_string(row[j]);
      os << "]\n";
    }
    return os.str();
  }

private:
  void check_dim(const Matrix& rhs) const
  {
    if (dim() != rhs.dim())
      throw std::invalid_argument("matrix dimensions differ");
  }

  std::vector<Column> cols_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace agl
