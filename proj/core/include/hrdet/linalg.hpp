#pragma once

// Small dense exact linear algebra over a field type with
// +,-,*,/,is_zero,inverse.

#include <vector>

#include "hrdet/error.hpp"

namespace hrdet {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
int matrix_rank(Matrix<T> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    T inv = m[rank][c].inverse();
    for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      T factor = m[r][c];
      for (size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Row-reduces and returns the pivot column of each reduced row (echelon
// profile); useful for kernel extraction.
template <class T>
std::vector<int> row_reduce(Matrix<T>& m) {
  std::vector<int> pivots;
  if (m.empty() || m[0].empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    T inv = m[rank][c].inverse();
    for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      T factor = m[r][c];
      for (size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++rank;
  }
  m.resize(rank);
  return pivots;
}

// Basis of the right kernel of m (as column vectors), echelon-normalized.
template <class T>
Matrix<T> right_kernel(Matrix<T> m, const T& one) {
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix<T> basis;
  for (size_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<T> v(cols, T{});
    v[freec] = one;
    for (size_t r = 0; r < m.size(); ++r) {
      // pivot at pivots[r]: value = -m[r][freec]
      v[pivots[r]] = -m[r][freec];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hrdet
