#pragma once

#include "agl/var.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace agl {

/// Element of S_1 x S_2 x ... x S_n: row k carries a permutation of {1..k},
/// stored 0-based. Acts on variables by x_ki -> x_{k, g_k(i)}.
class RowPermutation {
public:
  static RowPermutation identity(int n)
  {
    RowPermutation g;
    for (int k = 1; k <= n; ++k) {
      std::vector<int> row(static_cast<std::size_t>(k));
      std::iota(row.begin(), row.end(), 0);
      g.rows_.push_back(std::move(row));
    }
    return g;
  }

  /// Transposition of columns i and j (1-based) in row k.
  static RowPermutation transposition(int n, int k, int i, int j)
  {
    RowPermutation g = identity(n);
    g.check_row(k, i, j);
    std::swap(g.rows_[k - 1][i - 1], g.rows_[k - 1][j - 1]);
    return g;
  }

  /// Cycle i -> j -> l -> i (1-based) in row k.
  static RowPermutation three_cycle(int n, int k, int i, int j, int l)
  {
    RowPermutation g = identity(n);
    g.check_row(k, i, j);
    g.check_row(k, j, l);
    auto& row = g.rows_[k - 1];
    row[i - 1] = j - 1;
    row[j - 1] = l - 1;
    row[l - 1] = i - 1;
    return g;
  }

  /// Each row given 1-based as images of 1..k.
  static RowPermutation from_rows(const std::vector<std::vector<int>>& rows)
  {
    RowPermutation g;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].size() != k + 1)
        throw std::invalid_argument("row permutation sizes must be 1, 2, ..., n");
      std::vector<int> row;
      std::vector<bool> seen(k + 1, false);
      for (int image : rows[k]) {
        if (image < 1 || image > static_cast<int>(k + 1) || seen[image - 1])
          throw std::invalid_argument("row entry is not a permutation");
        seen[image - 1] = true;
        row.push_back(image - 1);
      }
      g.rows_.push_back(std::move(row));
    }
    return g;
  }

  int size() const { return static_cast<int>(rows_.size()); }

  /// Image of column i (1-based) in row k.
  int image(int k, int i) const
  {
    if (k < 1 || k > size())
      return i;
    return rows_[k - 1][i - 1] + 1;
  }

  VarId apply(VarId v) const
  {
    if (v.is_toy() || v.row > size())
      return v;
    return VarId::triangle(v.row, image(v.row, v.col));
  }

  /// (g * h)(v) = g(h(v))
  friend RowPermutation operator*(const RowPermutation& g, const RowPermutation& h)
  {
    if (g.size() != h.size())
      throw std::invalid_argument("row permutations of different sizes");
    RowPermutation out = h;
    for (std::size_t k = 0; k < out.rows_.size(); ++k)
      for (auto& x : out.rows_[k])
        x = g.rows_[k][static_cast<std::size_t>(x)];
    return out;
  }

  RowPermutation inverse() const
  {
    RowPermutation out = *this;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      for (std::size_t i = 0; i < rows_[k].size(); ++i)
        out.rows_[k][static_cast<std::size_t>(rows_[k][i])] = static_cast<int>(i);
    return out;
  }

  /// +1 for even, -1 for odd permutation in row k.
  int parity(int k) const
  {
    const auto& row = rows_.at(static_cast<std::size_t>(k - 1));
    std::vector<bool> seen(row.size(), false);
    int sign = 1;
    for (std::size_t start = 0; start < row.size(); ++start) {
      if (seen[start])
        continue;
      std::size_t length = 0;
      for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(row[i])) {
        seen[i] = true;
        ++length;
      }
      if (length % 2 == 0)
        sign = -sign;
    }
    return sign;
  }

  /// Membership in A_1 x ... x A_n.
  bool is_even() const
  {
    for (int k = 1; k <= size(); ++k)
      if (parity(k) < 0)
        return false;
    return true;
  }

  friend bool operator==(const RowPermutation&, const RowPermutation&) = default;

  std::string to_string() const
  {
    std::ostringstream os;
    for (int k = 1; k <= size(); ++k) {
      os << (k == 1 ? "[" : " | ");
      for (int i = 1; i <= k; ++i)
        os << (i == 1 ? "" : " ") << image(k, i);
    }
    os << "]";
    return os.str();
  }

private:
  void check_row(int k, int i, int j) const
  {
    if (k < 1 || k > size() || i < 1 || j < 1 || i > k || j > k || i == j)
      throw std::out_of_range("permutation indices out of range");
  }

  std::vector<std::vector<int>> rows_;
};

enum class GroupKind { symmetric, alternating };

/// Generators: adjacent transpositions per row (symmetric), or the 3-cycles
/// (1 2 j), 3 <= j <= k, per row k >= 3 (alternating).
inline std::vector<RowPermutation> group_generators(int n, GroupKind kind)
{
  std::vector<RowPermutation> gens;
  for (int k = 2; k <= n; ++k) {
    if (kind == GroupKind::symmetric) {
      for (int i = 1; i < k; ++i)
        gens.push_back(RowPermutation::transposition(n, k, i, i + 1));
    } else {
      for (int j = 3; j <= k; ++j)
        gens.push_back(RowPermutation::three_cycle(n, k, 1, 2, j));
    }
  }
  return gens;
}

}  // namespace agl
