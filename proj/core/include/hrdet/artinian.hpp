#pragma once

// Graded pieces of the artinian reduction H and its Gorenstein quotient:
// monomial spanning sets, pairing matrices and verified bases, Hilbert
// functions, Hodge-Riemann Gram matrices and their determinants D_q, the
// primitive decomposition, and the anisotropy witness check.

#include <functional>

#include "hrdet/ordcert.hpp"
#include "hrdet/symlinalg.hpp"

namespace hrdet {

// All degree-q monomials with face support, canonically ordered (by exponent
// vector, lowest vertex fastest).
inline std::vector<FaceMonomial> face_monomials(const SimplicialComplex& c, int q) {
  HRDET_CHECK(q >= 0 && q <= c.d(), ErrorKind::InvalidInput,
              "graded pieces exist for 0 <= q <= d");
  std::vector<FaceMonomial> out;
  std::function<void(FaceMonomial, int, int)> gen = [&](FaceMonomial m, int v,
                                                        int left) {
    if (left == 0) {
      out.push_back(m);
      return;
    }
    if (v > c.n()) return;
    gen(m, v + 1, left);
    for (int k = 1; k <= left; ++k) {
      FaceMonomial m2 = m.times_vertex(v, k);
      if (!c.is_face(m2.support)) break;
      gen(m2, v + 1, left - k);
    }
  };
  gen(FaceMonomial::one(), 1, q);
  std::sort(out.begin(), out.end());
  return out;
}

// Numeric pivot-proposal wiring for the three coefficient fields.
template <class K>
std::function<std::optional<RankCertificate>()> numeric_proposal(
    DegreeEngine<K>& eng, const Matrix<Factored<K>>& m, uint64_t seed) {
  int nvars = eng.vars().count();
  if constexpr (std::is_same_v<K, Rat>) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    auto conv = sz_conv_rat((1ull << 31) - 1);
    return [&m, rng, conv, nvars]() {
      return detail::numeric_pivots<Rat, Fp>(m, sz_proto_for_rat(), conv, *rng,
                                             nvars);
    };
  } else if constexpr (std::is_same_v<K, Fp>) {
    uint64_t p = eng.one().prime();
    auto rng = std::make_shared<std::mt19937_64>(seed);
    if (p == 2) {
      const Gf2Ctx* ctx = gf2_context(31);
      auto conv = sz_conv_f2(ctx);
      return [&m, rng, conv, nvars, ctx]() {
        return detail::numeric_pivots<Fp, GF2m>(m, GF2m(1, ctx), conv, *rng,
                                                nvars);
      };
    }
    return [&m, rng, nvars, p]() {
      auto conv = [](const Fp& c) { return c; };
      return detail::numeric_pivots<Fp, Fp>(m, Fp(1, p), conv, *rng, nvars);
    };
  } else {
    static_assert(std::is_same_v<K, GF2m>);
    const Gf2Ctx* ctx = eng.one().ctx();
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [&m, rng, nvars, ctx]() {
      auto conv = [](const GF2m& c) { return c; };
      return detail::numeric_pivots<GF2m, GF2m>(m, GF2m(1, ctx), conv, *rng,
                                                nvars);
    };
  }
}

// B_{ij} = deg(y_i * z_j) over y in face_monomials(q), z in
// face_monomials(d - q); its rank is dim of the degree-q Gorenstein quotient.
template <class K>
Matrix<Factored<K>> pairing_matrix(DegreeEngine<K>& eng, int q) {
  const SimplicialComplex& c = eng.complex();
  auto rows = face_monomials(c, q);
  auto cols = face_monomials(c, c.d() - q);
  Matrix<Factored<K>> m(rows.size(), std::vector<Factored<K>>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      FaceMonomial prod = rows[i] * cols[j];
      if (!c.is_face(prod.support)) {
        m[i][j] = Factored<K>(eng.factors(), SparsePoly<K>());
      } else {
        m[i][j] = eng.degree_reduce(prod);
      }
    }
  return m;
}

template <class K>
struct GradedBasis {
  int q = 0;
  std::vector<FaceMonomial> monomials;       // basis representatives, degree q
  std::vector<FaceMonomial> dual_monomials;  // degree d-q columns of the minor
  Factored<K> certificate;                   // exact nonzero minor determinant
};

struct BasisOptions {
  std::optional<Face> disjoint_from;  // restrict supports away from a facet
  uint64_t seed = 0x5eed;
};

template <class K>
Matrix<Factored<K>> multiplication_matrix(DegreeEngine<K>& eng, int q);

// Exact lower bound on the rank of the degree-q multiplication matrix: a
// nonzero numeric minor at a random point certifies it (the entries are
// integral polynomials, so nonvanishing mod p lifts).
template <class K>
int mult_rank_lower_bound(DegreeEngine<K>& eng, int q, uint64_t seed) {
  if (q == 0) return 0;
  Matrix<Factored<K>> m = multiplication_matrix(eng, q);
  auto proposal = numeric_proposal(eng, m, seed);
  int best = 0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto prop = proposal();
    if (prop) best = std::max(best, prop->rank);
  }
  return best;
}

// Verified monomial basis of the degree-q Gorenstein quotient: a row subset
// of the pairing matrix with an exactly nonzero maximal minor. The rank
// upper bound comes from the sandwich
//     rank(pairing) = dim quotient_q <= dim H^q <= dim A_q - rank(mult map),
// whose right side has its own numeric-minor certificate; when the sandwich
// does not close (quotient strictly below H), every bordered minor is checked
// to vanish exactly instead.
template <class K>
GradedBasis<K> select_basis(DegreeEngine<K>& eng, int q,
                            const BasisOptions& opts = {}) {
  const SimplicialComplex& c = eng.complex();
  if (opts.disjoint_from)
    HRDET_CHECK(c.facet_index(*opts.disjoint_from) >= 0, ErrorKind::InvalidInput,
                "disjoint-support mode needs a facet");
  auto rows = face_monomials(c, q);
  auto cols = face_monomials(c, c.d() - q);
  std::vector<int> keep;
  for (size_t i = 0; i < rows.size(); ++i)
    if (!opts.disjoint_from || (rows[i].support & *opts.disjoint_from) == 0)
      keep.push_back(static_cast<int>(i));
  // Prefer monomials whose support lies in few facets: their degrees involve
  // fewer brackets, which keeps Gram entries small.
  std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) {
    return c.facets_containing(rows[a].support).size() <
           c.facets_containing(rows[b].support).size();
  });

  Matrix<Factored<K>> m(keep.size(), std::vector<Factored<K>>(cols.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      FaceMonomial prod = rows[keep[i]] * cols[j];
      m[i][j] = c.is_face(prod.support)
                    ? eng.degree_reduce(prod)
                    : Factored<K>(eng.factors(), SparsePoly<K>());
    }

  std::optional<int> upper;
  if (!opts.disjoint_from) {
    long long aq = static_cast<long long>(rows.size());
    upper = static_cast<int>(aq - mult_rank_lower_bound(eng, q, opts.seed + 5011));
  }
  RankCertificate cert = certified_rank(
      eng.factors(), m, numeric_proposal(eng, m, opts.seed), upper);
  GradedBasis<K> basis;
  basis.q = q;
  for (int r : cert.row_basis) basis.monomials.push_back(rows[keep[r]]);
  for (int cidx : cert.col_basis) basis.dual_monomials.push_back(cols[cidx]);
  if (cert.rank > 0) {
    basis.certificate =
        submatrix_det(eng.factors(), m, cert.row_basis, cert.col_basis);
    HRDET_ASSERT(!basis.certificate.is_zero(), "certified minor must be nonzero");
  }
  return basis;
}

// dim of the degree-q Gorenstein quotient = rank of the pairing matrix.
template <class K>
int gorenstein_dim(DegreeEngine<K>& eng, int q, uint64_t seed = 0x5eed) {
  return static_cast<int>(select_basis(eng, q, {std::nullopt, seed}).monomials.size());
}

// ---------------------------------------------------------------------------
// Hilbert functions
// ---------------------------------------------------------------------------

struct HilbertReport {
  std::vector<long long> h_dims;          // dim H^q, q = 0..d
  std::vector<long long> hbar_dims;       // dim of the Gorenstein quotient
  std::vector<bool> h_exact;              // per degree: dim H certified exactly
  std::vector<long long> ns_prediction;   // dimension formula for manifolds
  bool ns_applicable = false;
  int draws_used = 0;                     // concrete mode: accepted draw index
  uint64_t seed = 0;
};

// Dimension formula for homology manifolds: h_q + binom(d,q) *
// sum_{p<q} (-1)^(q-p) beta_p (top degree is 1).
inline std::vector<long long> manifold_dim_formula(const SimplicialComplex& c,
                                                   const FieldSpec& field) {
  auto [f, h] = c.f_h_vectors();
  auto betti = reduced_betti(c, field);
  int d = c.d();
  std::vector<long long> ns(d + 1, 0);
  for (int q = 0; q < d; ++q) {
    long long acc = 0;
    for (int p = 0; p <= q - 1; ++p)
      acc += ((q - p) % 2 ? -1 : 1) * betti[p];
    ns[q] = h[q] + binomial(d, q) * acc;
  }
  ns[d] = 1;
  return ns;
}

// Multiplication matrix from d copies of degree-(q-1) face monomials to
// degree-q face monomials under the engine's linear system.
template <class K>
Matrix<Factored<K>> multiplication_matrix(DegreeEngine<K>& eng, int q) {
  const SimplicialComplex& c = eng.complex();
  const VarTable& vt = eng.vars();
  auto rows = face_monomials(c, q);
  auto cols_m = face_monomials(c, q - 1);
  std::map<FaceMonomial, int> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
  int d = c.d();
  Matrix<Factored<K>> m(rows.size(),
                        std::vector<Factored<K>>(cols_m.size() * d,
                                                 Factored<K>(eng.factors(), SparsePoly<K>())));
  for (size_t cm = 0; cm < cols_m.size(); ++cm)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= c.n(); ++j) {
        if (i == 1 && (eng.punctured() & (1u << (j - 1)))) continue;
        FaceMonomial prod = cols_m[cm].times_vertex(j);
        if (!c.is_face(prod.support)) continue;
        int r = row_index.at(prod);
        int col = static_cast<int>(cm) * d + (i - 1);
        SparsePoly<K> var = SparsePoly<K>::variable(
            vt.index(VarId{uint8_t(i), uint8_t(j)}), eng.one());
        m[r][col] += Factored<K>(eng.factors(), var);
      }
  return m;
}

// Hilbert data for the engine's (generic or punctured) system.
//
// Quotient-dimension strategy: the Gorenstein-quotient dimensions come from
// exactly certified pairing ranks. For dim H^q itself, a nonzero numeric
// minor of the multiplication matrix at a random point is already an exact
// *lower* bound on its rank (evaluation is a ring homomorphism, and for
// rational coefficients the entries are integral so a nonzero value mod p
// certifies nonvanishing); combined with dim H^q >= dim of the quotient this
// sandwiches dim H^q, and the value is flagged exact when the two bounds
// meet. On homology spheres they always do.
template <class K>
HilbertReport hilbert_report(DegreeEngine<K>& eng, const FieldSpec& field,
                             uint64_t seed = 0x5eed) {
  const SimplicialComplex& c = eng.complex();
  int d = c.d();
  HilbertReport rep;
  rep.seed = seed;
  rep.h_dims.assign(d + 1, 0);
  rep.hbar_dims.assign(d + 1, 0);
  rep.h_exact.assign(d + 1, false);
  for (int q = 0; q <= d; ++q) {
    long long aq = static_cast<long long>(face_monomials(c, q).size());
    rep.hbar_dims[q] = gorenstein_dim(eng, q, seed + 17 * q);
    if (q == 0) {
      rep.h_dims[q] = 1;
      rep.h_exact[q] = true;
      continue;
    }
    int rank_lb = mult_rank_lower_bound(eng, q, seed + q);
    rep.h_dims[q] = aq - rank_lb;  // upper bound on dim H^q
    rep.h_exact[q] = (rep.h_dims[q] == rep.hbar_dims[q]);
    HRDET_ASSERT(rep.h_dims[q] >= rep.hbar_dims[q],
                 "quotient dimension cannot exceed the ring dimension");
  }
  auto topo = topology_report(c, field);
  rep.ns_applicable = topo.is_homology_manifold;
  rep.ns_prediction = manifold_dim_formula(c, field);
  return rep;
}

// ---------------------------------------------------------------------------
// Hodge-Riemann forms
// ---------------------------------------------------------------------------

inline std::vector<Face> all_size_d_subsets(const SimplicialComplex& c) {
  std::vector<Face> out;
  std::function<void(int, int, Face)> gen = [&](int start, int k, Face f) {
    if (k == c.d()) {
      out.push_back(f);
      return;
    }
    for (int v = start; v <= c.n(); ++v) gen(v + 1, k + 1, f | (1u << (v - 1)));
  };
  gen(1, 0, 0);
  return out;
}

template <class K>
struct GramReport {
  int q = 0;
  std::vector<FaceMonomial> basis;
  Matrix<Factored<K>> matrix;
  Factored<K> det;                 // D_q; zero is a reportable outcome
  std::map<Face, int> ord_profile; // generic systems, when det != 0
};

// Gram matrix of (y, z) -> deg(l^(d-2q) y z) on a verified basis.
template <class K>
GramReport<K> hr_gram(DegreeEngine<K>& eng, int q, const GradedBasis<K>& basis,
                      bool with_ord_profile = true) {
  const SimplicialComplex& c = eng.complex();
  int d = c.d();
  HRDET_CHECK(2 * q <= d, ErrorKind::InvalidInput, "degree q must satisfy q <= d/2");
  GramReport<K> rep;
  rep.q = q;
  rep.basis = basis.monomials;
  size_t p = basis.monomials.size();
  rep.matrix.assign(p, std::vector<Factored<K>>(p, Factored<K>(eng.factors(), SparsePoly<K>())));
  for (size_t i = 0; i < p; ++i)
    for (size_t j = i; j < p; ++j) {
      FaceMonomial prod = basis.monomials[i] * basis.monomials[j];
      Factored<K> val(eng.factors(), SparsePoly<K>());
      if (c.is_face(prod.support))
        val = eng.degree_poly(eng.expand_ell_power(d - 2 * q, prod));
      rep.matrix[i][j] = val;
      rep.matrix[j][i] = val;
    }
  rep.det = factored_det(eng.factors(), rep.matrix);
  if (with_ord_profile && eng.generic() && !rep.det.is_zero()) {
    for (Face g : all_size_d_subsets(c))
      rep.ord_profile[g] = rep.det.ord_at_factor(eng.bracket_factor_id(g));
  }
  return rep;
}

// Multiplication by l^(d-2q) is an isomorphism onto the complementary graded
// piece iff the Gram determinant on a verified basis is nonzero.
template <class K>
bool lefschetz_check(DegreeEngine<K>& eng, int q, uint64_t seed = 0x5eed) {
  GradedBasis<K> basis = select_basis(eng, q, {std::nullopt, seed});
  GramReport<K> gram = hr_gram(eng, q, basis, false);
  return !gram.det.is_zero();
}

// Primitive decomposition data: D_prim,q = D_q / D_{q-1} for 0 < q <= d/2
// (D_prim,0 = D_0). Like the D_q themselves, the primitive determinants are
// only well-defined modulo squares, so their class data is derived from the
// stored D_q: orders add, and the square class of a quotient is the square
// class of the product. Requires the Lefschetz property in all degrees.
template <class K>
struct PrimitiveReport {
  std::vector<Factored<K>> d_values;  // D_0 .. D_{floor(d/2)}

  // ord of D_prim,q at an interned factor.
  int prim_ord(int q, int factor_id) const {
    int o = d_values.at(q).ord_at_factor(factor_id);
    if (q > 0) o += d_values.at(q - 1).ord_at_factor(factor_id);
    return o;
  }

  // Square class of D_prim,q; nullopt when the product representative is too
  // large to expand under the term budget.
  std::optional<FactoredSquareClass<K>> prim_square_class(int q) const {
    try {
      if (q == 0) return is_square_mod_scalars(d_values.at(0));
      return is_square_mod_scalars(d_values.at(q) * d_values.at(q - 1));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded) return std::nullopt;
      throw;
    }
  }
};

template <class K>
PrimitiveReport<K> primitive_determinants(DegreeEngine<K>& eng,
                                          uint64_t seed = 0x5eed) {
  int half = eng.complex().d() / 2;
  PrimitiveReport<K> rep;
  for (int q = 0; q <= half; ++q) {
    GradedBasis<K> basis = select_basis(eng, q, {std::nullopt, seed + q});
    GramReport<K> gram = hr_gram(eng, q, basis, false);
    HRDET_CHECK(!gram.det.is_zero(), ErrorKind::LefschetzFailure,
                "Lefschetz failure in degree " + std::to_string(q));
    rep.d_values.push_back(gram.det);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Anisotropy witness (punctured system)
// ---------------------------------------------------------------------------

template <class K>
struct AnisotropyWitness {
  FaceMonomial element;
  bool nonzero = false;        // the element pairs nontrivially in degree q
  bool square_vanishes = false;  // deg of its square (times l-padding) is zero
};

// Verifies the witness pair for an element y of degree q in the punctured
// reduction: y != 0 (pairing against all complementary monomials) while
// deg(l^(d-2q) y^2) = 0.
template <class K>
AnisotropyWitness<K> anisotropy_witness_check(DegreeEngine<K>& eng,
                                              const FaceMonomial& y) {
  const SimplicialComplex& c = eng.complex();
  int d = c.d();
  int q = y.deg;
  AnisotropyWitness<K> w;
  w.element = y;
  for (const FaceMonomial& z : face_monomials(c, d - q)) {
    FaceMonomial prod = y * z;
    if (!c.is_face(prod.support)) continue;
    if (!eng.degree_reduce(prod).is_zero()) {
      w.nonzero = true;
      break;
    }
  }
  FaceMonomial sq = y * y;
  Factored<K> val(eng.factors(), SparsePoly<K>());
  if (c.is_face(sq.support))
    val = eng.degree_poly(eng.expand_ell_power(d - 2 * q, sq));
  w.square_vanishes = val.is_zero();
  return w;
}

}  // namespace hrdet
