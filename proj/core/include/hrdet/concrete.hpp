#pragma once

// Artinian reductions for a concrete linear system with coefficients in the
// base field k itself (no symbolic variables): the degree map becomes
// scalar-valued and Hilbert functions are plain k-linear algebra. This is the
// path used for finite-field experiments with random systems.

#include <unordered_map>

#include "hrdet/artinian.hpp"

namespace hrdet {

template <class K>
class ConcreteDegree {
 public:
  // mu: d x n matrix over k.
  ConcreteDegree(const SimplicialComplex& c, Orientation o, Matrix<K> mu)
      : c_(&c), o_(std::move(o)), mu_(std::move(mu)) {
    HRDET_CHECK(static_cast<int>(mu_.size()) == c.d() &&
                    static_cast<int>(mu_[0].size()) == c.n(),
                ErrorKind::InvalidInput, "system shape must be d x n");
  }

  const SimplicialComplex& complex() const { return *c_; }
  const Matrix<K>& mu() const { return mu_; }

  K ev_bracket(Face subset) const {
    std::vector<int> cols = face_vertices(subset);
    return det_rec(1, cols);
  }

  bool stanley_ok() const {
    for (Face f : c_->facets())
      if (ev_bracket(f).is_zero()) return false;
    return true;
  }

  // Scalar degree of a degree-d face monomial, by support-growing rewriting.
  K deg(const FaceMonomial& m) {
    HRDET_CHECK(m.deg == c_->d(), ErrorKind::InvalidInput,
                "degree is defined on monomials of total degree d");
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    K val = deg_uncached(m);
    memo_.emplace(m, val);
    return val;
  }

 private:
  K det_rec(int row, std::vector<int> cols) const {
    if (cols.empty()) return mu_[0][0].of_int(1);
    K acc{};
    for (size_t p = 0; p < cols.size(); ++p) {
      std::vector<int> rest;
      for (size_t q = 0; q < cols.size(); ++q)
        if (q != p) rest.push_back(cols[q]);
      K term = mu_[row - 1][cols[p] - 1] * det_rec(row + 1, std::move(rest));
      acc += (p % 2 == 0) ? term : -term;
    }
    return acc;
  }

  K deg_uncached(const FaceMonomial& m) {
    if (!c_->is_face(m.support)) return K{};
    if (m.squarefree()) {
      Face f = m.support;
      HRDET_ASSERT(c_->facet_index(f) >= 0, "size-d face must be a facet");
      K bf = ev_bracket(f);
      HRDET_CHECK(!bf.is_zero(), ErrorKind::NotAnLsop,
                  "facet bracket vanishes: not a linear system of parameters");
      K eps = bf.of_int(o_.sign_of(*c_, f));
      return eps / bf;
    }
    int pivot = 0;
    for (int v = 1; v <= c_->n(); ++v)
      if (m.e[v - 1] > 1) { pivot = v; break; }
    Face facet = 0;
    for (Face f : c_->facets())
      if ((f & m.support) == m.support) { facet = f; break; }
    HRDET_ASSERT(facet != 0, "face not contained in a facet");
    std::vector<int> fvs = face_vertices(facet);
    int mpos = 0;
    for (size_t i = 0; i < fvs.size(); ++i)
      if (fvs[i] == pivot) mpos = static_cast<int>(i) + 1;

    K acc{};
    for (int v = 1; v <= c_->n(); ++v) {
      if (facet & (1u << (v - 1))) continue;
      FaceMonomial m2 = m.div_vertex(pivot).times_vertex(v);
      if (!c_->is_face(m2.support)) continue;
      Face swapped = (facet & ~(1u << (pivot - 1))) | (1u << (v - 1));
      K bv = ev_bracket(swapped);
      if (bv.is_zero()) continue;
      int pos = 1;
      for (int w : fvs)
        if (w != pivot && w < v) ++pos;
      int dist = pos > mpos ? pos - mpos : mpos - pos;
      K term = bv * deg(m2);
      acc += (dist % 2 == 0) ? term : -term;
    }
    K bf = ev_bracket(facet);
    HRDET_CHECK(!bf.is_zero(), ErrorKind::NotAnLsop,
                "pivot facet bracket vanishes");
    return -(acc / bf);
  }

  const SimplicialComplex* c_;
  Orientation o_;
  Matrix<K> mu_;
  std::unordered_map<FaceMonomial, K, FaceMonomialHash> memo_;
};

// Hilbert function of the concrete artinian reduction and of its Gorenstein
// quotient, by k-linear algebra on face-monomial bases.
template <class K>
HilbertReport hilbert_concrete(const SimplicialComplex& c, const Orientation& o,
                               const Matrix<K>& mu, const FieldSpec& field) {
  ConcreteDegree<K> deg(c, o, mu);
  HRDET_CHECK(deg.stanley_ok(), ErrorKind::NotAnLsop,
              "system fails Stanley's criterion");
  int d = c.d();
  HilbertReport rep;
  rep.h_dims.assign(d + 1, 0);
  rep.hbar_dims.assign(d + 1, 0);

  for (int q = 0; q <= d; ++q) {
    auto rows = face_monomials(c, q);
    long long aq = static_cast<long long>(rows.size());
    if (q == 0) {
      rep.h_dims[0] = 1;
    } else {
      auto cols_m = face_monomials(c, q - 1);
      std::map<FaceMonomial, int> row_index;
      for (size_t i = 0; i < rows.size(); ++i)
        row_index[rows[i]] = static_cast<int>(i);
      Matrix<K> m(rows.size(), std::vector<K>(cols_m.size() * d, K{}));
      for (size_t cm = 0; cm < cols_m.size(); ++cm)
        for (int i = 1; i <= d; ++i)
          for (int j = 1; j <= c.n(); ++j) {
            if (mu[i - 1][j - 1].is_zero()) continue;
            FaceMonomial prod = cols_m[cm].times_vertex(j);
            if (!c.is_face(prod.support)) continue;
            m[row_index.at(prod)][cm * d + (i - 1)] += mu[i - 1][j - 1];
          }
      rep.h_dims[q] = aq - matrix_rank(std::move(m));
    }

    // Pairing rank over k.
    auto cols = face_monomials(c, d - q);
    Matrix<K> b(rows.size(), std::vector<K>(cols.size(), K{}));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) {
        FaceMonomial prod = rows[i] * cols[j];
        if (c.is_face(prod.support)) b[i][j] = deg.deg(prod);
      }
    rep.hbar_dims[q] = matrix_rank(std::move(b));
  }

  auto topo = topology_report(c, field);
  rep.ns_applicable = topo.is_homology_manifold;
  rep.ns_prediction = manifold_dim_formula(c, field);
  return rep;
}

}  // namespace hrdet
