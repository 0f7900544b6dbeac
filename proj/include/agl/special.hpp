#pragma once

#include "agl/poly.hpp"

#include <stdexcept>
#include <vector>

namespace agl {

/// e_ki(x_k1, ..., x_kk): sum over i-subsets of row k.
inline Poly elementary_symmetric(int k, int i)
{
  if (k < 1 || i < 0 || i > k)
    throw std::out_of_range("elementary_symmetric: index out of range");
  // e_0..e_k of the first j variables, built incrementally
  std::vector<Poly> e(static_cast<std::size_t>(k) + 1);
  e[0] = Poly(1);
  for (int j = 1; j <= k; ++j) {
    const Poly x = Poly::var(VarId::triangle(k, j));
    for (int d = j; d >= 1; --d)
      e[d] += x * e[d - 1];
  }
  return e[i];
}

/// prod_{i<j} (x_ki - x_kj)
inline Poly vandermonde(int k)
{
  if (k < 1)
    throw std::out_of_range("vandermonde: row must be positive");
  Poly v(1);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      v *= Poly::var(VarId::triangle(k, i)) - Poly::var(VarId::triangle(k, j));
  return v;
}

/// prod_{i<j} (x_ki - x_kj + l_i + ... + l_{j-1}); l has length k - 1.
inline Poly shifted_vandermonde(int k, const std::vector<long>& l)
{
  if (k < 1)
    throw std::out_of_range("shifted_vandermonde: row must be positive");
  if (l.size() != static_cast<std::size_t>(k - 1))
    throw std::out_of_range("shifted_vandermonde: shift vector must have length k - 1");
  Poly v(1);
  for (int i = 1; i <= k; ++i) {
    long offset = 0;
    for (int j = i + 1; j <= k; ++j) {
      offset += l[static_cast<std::size_t>(j - 2)];
      v *= Poly::var(VarId::triangle(k, i)) - Poly::var(VarId::triangle(k, j)) + Poly(offset);
    }
  }
  return v;
}

}  // namespace agl
