#pragma once

#include "agl/rational.hpp"
#include "agl/shift.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace agl {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonal of the Smith normal form of an integer matrix (nonzero invariant
/// factors d_1 | d_2 | ..., all positive).
inline std::vector<Integer> invariant_factors(IntMatrix a)
{
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero magnitude in the remaining block
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows)
      break;
    std::swap(a[t], a[pr]);
    for (auto& row : a)
      std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0)
          continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0)
          continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a)
            std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility condition d_t | every remaining entry
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k)
                a[t][k] += a[i][k];
              clean = false;
            }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

/// True when the symmetric support set spans Z^d over the listed coordinates.
/// A symmetric set generates M as a monoid iff it generates it as a group.
/// Non-symmetric input throws: submonoid generation is not decided here.
inline bool supports_generate_group(const std::set<ShiftVector>& supports, const std::vector<VarId>& coordinates)
{
  for (const auto& mu : supports)
    if (!supports.contains(-mu))
      throw std::invalid_argument("monoid case unsupported: support set is not closed under negation");
  IntMatrix m;
  for (const auto& mu : supports) {
    std::vector<Integer> row(coordinates.size(), 0);
    for (const auto& [v, p] : mu.entries()) {
      auto it = std::find(coordinates.begin(), coordinates.end(), v);
      if (it == coordinates.end())
        throw std::invalid_argument("shift vector has an entry outside the lattice coordinates");
      row[static_cast<std::size_t>(it - coordinates.begin())] = p;
    }
    m.push_back(std::move(row));
  }
  if (coordinates.empty())
    return true;
  auto factors = invariant_factors(std::move(m));
  if (factors.size() != coordinates.size())
    return false;
  return std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

}  // namespace agl
