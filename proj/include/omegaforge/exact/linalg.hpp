#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "omegaforge/exact/field.hpp"

namespace omegaforge {

/// Dense row-major matrix over an exact field (Rational or FieldElem).
template <class F>
using Matrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    F inv = F(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!is_zero(m[r][k])) m[i][k] = m[i][k] - f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of {x : m·x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols) {
  std::vector<std::vector<F>> basis;
  if (m.empty()) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<F> v(cols, F(0));
      v[c] = F(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace omegaforge
