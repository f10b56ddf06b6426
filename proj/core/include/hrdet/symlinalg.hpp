#pragma once

// Fraction-free (Bareiss) elimination over exact polynomials, and certified
// rank / basis selection for matrices of factored rational values.
//
// Rank certification follows the random-evaluation-then-verify pattern: a
// numeric Gaussian elimination at a random point proposes pivot rows and
// columns, the proposed minor is verified nonzero symbolically, and the rank
// upper bound is certified by checking that every bordered minor vanishes
// (exactly). The numeric stage is an accelerator only; a failed proposal
// falls back to exact greedy growth.

#include <functional>
#include <random>

#include "hrdet/bracket.hpp"
#include "hrdet/linalg.hpp"

namespace hrdet {

// Determinant by fraction-free elimination with row pivoting.
template <class K>
SparsePoly<K> bareiss_det(Matrix<SparsePoly<K>> m) {
  size_t n = m.size();
  if (n == 0) return SparsePoly<K>();
  HRDET_ASSERT(m[0].size() == n, "bareiss_det needs a square matrix");
  int sign = 1;
  SparsePoly<K> prev;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return SparsePoly<K>();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        SparsePoly<K> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (k == 0) {
          m[i][j] = std::move(num);
        } else {
          auto q = num.exact_div(prev);
          HRDET_ASSERT(q.has_value(), "Bareiss division must be exact");
          m[i][j] = std::move(*q);
        }
      }
      m[i][k] = SparsePoly<K>();
    }
    prev = m[k][k];
  }
  SparsePoly<K> det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

namespace detail {

// Laplace expansion along the first row; factored denominators keep the
// intermediate values reduced, which beats clearing for small minors.
template <class K>
Factored<K> cofactor_det(FactorTable<K>* table, const Matrix<Factored<K>>& m,
                         const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  if (rows.empty())
    return Factored<K>(table, SparsePoly<K>());  // handled by caller
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Factored<K> acc(table, SparsePoly<K>());
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t p = 0; p < cols.size(); ++p) {
    const Factored<K>& pivot = m[rows[0]][cols[p]];
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    for (size_t q = 0; q < cols.size(); ++q)
      if (q != p) sub_cols.push_back(cols[q]);
    Factored<K> sub = cofactor_det(table, m, sub_rows, sub_cols);
    Factored<K> term = pivot * sub;
    acc += (p % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace detail

// Exact determinant of a matrix of factored values. Denominator-free
// matrices run fraction-free elimination; small matrices with denominators
// expand by cofactors (the factored reduction keeps terms small); larger
// ones clear rows and run Bareiss.
template <class K>
Factored<K> factored_det(FactorTable<K>* table,
                         const Matrix<Factored<K>>& m) {
  size_t n = m.size();
  HRDET_CHECK(n >= 1, ErrorKind::InvalidInput, "determinant of an empty matrix");
  bool has_dens = false;
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.den().empty()) { has_dens = true; break; }
  if (has_dens && n <= 6) {
    std::vector<int> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    return detail::cofactor_det(table, m, idx, idx);
  }
  Matrix<SparsePoly<K>> p(n, std::vector<SparsePoly<K>>(n));
  FactorPowers total_den;
  for (size_t i = 0; i < n; ++i) {
    FactorPowers row_den;
    for (size_t j = 0; j < n; ++j) {
      // exponentwise max
      FactorPowers diff;
      for (auto [id, e] : m[i][j].den()) diff.emplace_back(id, e);
      FactorPowers merged;
      size_t a = 0, b = 0;
      while (a < row_den.size() || b < diff.size()) {
        if (b == diff.size() || (a < row_den.size() && row_den[a].first < diff[b].first))
          merged.push_back(row_den[a++]);
        else if (a == row_den.size() || diff[b].first < row_den[a].first)
          merged.push_back(diff[b++]);
        else {
          merged.emplace_back(row_den[a].first,
                              std::max(row_den[a].second, diff[b].second));
          ++a;
          ++b;
        }
      }
      row_den = std::move(merged);
    }
    for (size_t j = 0; j < n; ++j) {
      SparsePoly<K> num = m[i][j].num();
      // multiply by row_den / den_ij
      FactorPowers need = merge_powers(row_den, m[i][j].den(), -1);
      for (auto [id, e] : need) {
        HRDET_ASSERT(e >= 0, "row denominator must dominate entry denominator");
        for (int t = 0; t < e; ++t) num = num * table->at(id).poly;
      }
      p[i][j] = std::move(num);
    }
    total_den = merge_powers(total_den, row_den);
  }
  SparsePoly<K> det = bareiss_det(std::move(p));
  return Factored<K>(table, std::move(det), std::move(total_den));
}

template <class K>
Factored<K> submatrix_det(FactorTable<K>* table, const Matrix<Factored<K>>& m,
                          const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  Matrix<Factored<K>> sub(rows.size(), std::vector<Factored<K>>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[rows[i]][cols[j]];
  return factored_det(table, sub);
}

// Exact determinant of a square matrix of reduced rational functions: clear
// each row against its denominator, run fraction-free elimination, divide the
// row contents back out.
template <class K>
RatFunc<K> det(const Matrix<RatFunc<K>>& m) {
  size_t n = m.size();
  HRDET_CHECK(n >= 1, ErrorKind::InvalidInput, "determinant of an empty matrix");
  for (const auto& row : m)
    HRDET_CHECK(row.size() == n, ErrorKind::InvalidInput,
                "determinant needs a square matrix");
  Matrix<SparsePoly<K>> p(n, std::vector<SparsePoly<K>>(n));
  RatFunc<K> scale(K{});
  bool scale_set = false;
  for (size_t i = 0; i < n; ++i) {
    SparsePoly<K> row_den;
    for (size_t j = 0; j < n; ++j) {
      if (m[i][j].is_zero()) continue;
      SparsePoly<K> dj = m[i][j].den();
      row_den = row_den.is_zero() ? dj : row_den * *dj.exact_div(gcd(row_den, dj));
    }
    if (row_den.is_zero()) return RatFunc<K>();  // a zero row
    for (size_t j = 0; j < n; ++j) {
      if (m[i][j].is_zero()) continue;
      p[i][j] = m[i][j].num() * *row_den.exact_div(m[i][j].den());
    }
    RatFunc<K> factor(SparsePoly<K>::constant(row_den.leading_coeff().of_int(1)),
                      row_den);
    scale = scale_set ? scale * factor : factor;
    scale_set = true;
  }
  SparsePoly<K> d = bareiss_det(std::move(p));
  return RatFunc<K>(std::move(d)) * scale;
}

struct RankCertificate {
  int rank = 0;
  std::vector<int> row_basis;
  std::vector<int> col_basis;
};

namespace detail {

// Numeric pivot proposal at a random point; nullopt if a denominator
// vanishes or coefficients cannot be mapped.
template <class K, class E>
std::optional<RankCertificate> numeric_pivots(
    const Matrix<Factored<K>>& m, const E& one,
    const std::function<E(const K&)>& conv, std::mt19937_64& rng, int nvars) {
  std::vector<E> point(kMaxVars, one);
  for (int v = 0; v < nvars; ++v) {
    if constexpr (std::is_same_v<E, Fp>) {
      point[v] = random_fp(rng, one.prime());
    } else {
      point[v] = random_gf2m(rng, one.ctx());
    }
  }
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Matrix<E> num(rows, std::vector<E>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      auto v = m[i][j].eval(point, conv);
      if (!v) return std::nullopt;
      num[i][j] = *v;
    }
  RankCertificate cert;
  std::vector<bool> used_row(rows, false);
  for (size_t c = 0; c < cols && cert.row_basis.size() < rows; ++c) {
    size_t piv = rows;
    for (size_t r = 0; r < rows; ++r)
      if (!used_row[r] && !num[r][c].is_zero()) { piv = r; break; }
    if (piv == rows) continue;
    used_row[piv] = true;
    cert.row_basis.push_back(static_cast<int>(piv));
    cert.col_basis.push_back(static_cast<int>(c));
    E inv = num[piv][c].inverse();
    for (size_t r = 0; r < rows; ++r) {
      if (used_row[r] || num[r][c].is_zero()) continue;
      E f = num[r][c] * inv;
      for (size_t j = c; j < cols; ++j) num[r][j] -= f * num[piv][j];
    }
  }
  cert.rank = static_cast<int>(cert.row_basis.size());
  return cert;
}

}  // namespace detail

// Exact rank with verified basis rows/columns. `numeric` proposes pivots;
// pass nullptr to run fully exact. When `exact_upper_bound` is supplied (an
// independently certified bound) and a verified minor reaches it, the
// bordered-minor sweep is skipped.
template <class K>
RankCertificate certified_rank(
    FactorTable<K>* table, const Matrix<Factored<K>>& m,
    const std::function<std::optional<RankCertificate>()>& numeric,
    std::optional<int> exact_upper_bound = std::nullopt) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  RankCertificate cert;
  if (rows == 0 || cols == 0) return cert;

  if (numeric) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      auto prop = numeric();
      if (!prop) continue;
      if (prop->rank == 0) break;
      if (!submatrix_det(table, m, prop->row_basis, prop->col_basis).is_zero()) {
        cert = *prop;
        break;
      }
    }
  }
  if (exact_upper_bound && cert.rank == *exact_upper_bound) return cert;

  // Greedy exact growth: add any (row, col) whose bordered minor is nonzero.
  bool grew = true;
  while (grew) {
    if (exact_upper_bound &&
        static_cast<int>(cert.row_basis.size()) == *exact_upper_bound)
      break;
    grew = false;
    std::vector<bool> in_r(rows, false), in_c(cols, false);
    for (int r : cert.row_basis) in_r[r] = true;
    for (int c : cert.col_basis) in_c[c] = true;
    for (size_t r = 0; r < rows && !grew; ++r) {
      if (in_r[r]) continue;
      for (size_t c = 0; c < cols && !grew; ++c) {
        if (in_c[c]) continue;
        auto rws = cert.row_basis;
        auto cls = cert.col_basis;
        rws.push_back(static_cast<int>(r));
        cls.push_back(static_cast<int>(c));
        if (!submatrix_det(table, m, rws, cls).is_zero()) {
          cert.row_basis = std::move(rws);
          cert.col_basis = std::move(cls);
          grew = true;
        }
      }
    }
  }
  cert.rank = static_cast<int>(cert.row_basis.size());
  return cert;
}

}  // namespace hrdet
