#pragma once

// The canonical degree map on artinian reductions, computed two independent
// ways:
//   degree_reduce -- support-growing rewriting via Cramer moves, starting
//                    from deg(x_F) = eps_F / [F] on facet monomials;
//   degree_kx     -- the facet-sum formula in the extended variable ring,
//                    whose auxiliary column-0 variables must cancel.
//
// An engine fixes the complex, an orientation, and a linear system of
// parameters (generic a_{i,j}, or the punctured system with row 1 zeroed on a
// size-d non-face F). All bracket evaluations under that system are interned
// as factored products of irreducible polynomials.

#include <unordered_map>

#include "hrdet/bracket.hpp"
#include "hrdet/linalg.hpp"

namespace hrdet {

// ---------------------------------------------------------------------------
// Monomials in the face-ring variables x_1..x_n
// ---------------------------------------------------------------------------

struct FaceMonomial {
  std::array<uint8_t, 32> e{};
  uint16_t deg = 0;
  Face support = 0;

  static FaceMonomial one() { return FaceMonomial{}; }
  static FaceMonomial vertex(int v, int exp = 1) {
    FaceMonomial m;
    m.e[v - 1] = static_cast<uint8_t>(exp);
    m.deg = static_cast<uint16_t>(exp);
    m.support = exp ? (1u << (v - 1)) : 0;
    return m;
  }
  static FaceMonomial from_face(Face f) {
    FaceMonomial m;
    for (int v : face_vertices(f)) m.e[v - 1] = 1;
    m.deg = static_cast<uint16_t>(face_size(f));
    m.support = f;
    return m;
  }

  FaceMonomial times_vertex(int v, int k = 1) const {
    FaceMonomial m = *this;
    m.e[v - 1] = static_cast<uint8_t>(m.e[v - 1] + k);
    m.deg = static_cast<uint16_t>(m.deg + k);
    m.support |= (1u << (v - 1));
    return m;
  }
  FaceMonomial div_vertex(int v) const {
    HRDET_ASSERT(e[v - 1] > 0, "dividing by an absent vertex");
    FaceMonomial m = *this;
    m.e[v - 1] -= 1;
    m.deg -= 1;
    if (m.e[v - 1] == 0) m.support &= ~(1u << (v - 1));
    return m;
  }
  FaceMonomial operator*(const FaceMonomial& o) const {
    FaceMonomial m = *this;
    for (int v = 0; v < 32; ++v) m.e[v] = static_cast<uint8_t>(m.e[v] + o.e[v]);
    m.deg = static_cast<uint16_t>(m.deg + o.deg);
    m.support |= o.support;
    return m;
  }

  bool squarefree() const { return deg == face_size(support); }

  friend bool operator==(const FaceMonomial& a, const FaceMonomial& b) {
    return a.deg == b.deg && a.e == b.e;
  }
  // Canonical order: by total degree, then exponent vectors with the earliest
  // vertex dominating (so x_1^q precedes every other degree-q monomial).
  friend bool operator<(const FaceMonomial& a, const FaceMonomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e > b.e;
  }

  std::string str() const {
    if (deg == 0) return "1";
    std::string s;
    for (int v = 1; v <= 32; ++v) {
      if (!e[v - 1]) continue;
      if (!s.empty()) s += "*";
      s += "x_" + std::to_string(v);
      if (e[v - 1] > 1) s += "^" + std::to_string(int(e[v - 1]));
    }
    return s;
  }
};

struct FaceMonomialHash {
  size_t operator()(const FaceMonomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < 32; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Formal k-combinations of face monomials (homogeneous users only).
template <class K>
using FacePoly = std::vector<std::pair<FaceMonomial, K>>;

// ---------------------------------------------------------------------------
// Linear systems of parameters
// ---------------------------------------------------------------------------

template <class K>
struct Lsop {
  enum class Kind { Generic, Punctured, Matrix };
  Kind kind = Kind::Generic;
  Face punctured = 0;  // size-d non-face, row 1 zeroed on its columns
  Matrix<RatFunc<K>> coeffs;  // Matrix mode: d x n entries mu_{i,j}

  static Lsop generic() { return Lsop{}; }
  static Lsop punctured_at(Face f) { return Lsop{Kind::Punctured, f, {}}; }
  static Lsop from_matrix(Matrix<RatFunc<K>> m) {
    return Lsop{Kind::Matrix, 0, std::move(m)};
  }
  std::string str() const {
    switch (kind) {
      case Kind::Generic: return "generic";
      case Kind::Punctured: return "punctured:" + face_str(punctured);
      default: return "matrix";
    }
  }
};

// ---------------------------------------------------------------------------
// Degree engine
// ---------------------------------------------------------------------------

template <class K>
class DegreeEngine {
 public:
  DegreeEngine(const SimplicialComplex& c, Orientation o, K one,
               Face punctured = 0)
      : c_(&c), o_(std::move(o)), one_(std::move(one)), punctured_(punctured),
        vt_(c.d(), c.n()) {
    HRDET_CHECK(c.pure(), ErrorKind::InvalidInput, "degree needs a pure complex");
    HRDET_ASSERT(o_.sign.size() == c.facets().size(), "orientation mismatch");
    if (punctured_ != 0)
      HRDET_CHECK(face_size(punctured_) == c.d() && c.facet_index(punctured_) < 0,
                  ErrorKind::NotAnLsop,
                  "punctured system requires a size-d non-facet");
    extended_mask_ = 0;
    for (int v = 0; v < vt_.count(); ++v)
      if (vt_.is_extended(v)) extended_mask_ |= (1ull << v);
  }

  const SimplicialComplex& complex() const { return *c_; }
  const Orientation& orientation() const { return o_; }
  const VarTable& vars() const { return vt_; }
  FactorTable<K>* factors() { return &table_; }
  const K& one() const { return one_; }
  bool generic() const { return punctured_ == 0; }
  Face punctured() const { return punctured_; }

  K eps(Face facet) const { return one_.of_int(o_.sign_of(*c_, facet)); }

  // Bracket of a size-d vertex subset under the engine's specialization.
  const FactorProduct<K>& bracket(Face subset) {
    return bracket_colset({subset, false});
  }
  // X_{F,m} = (-1)^m [F u {0} \ {j_m}], 1-based m over the sorted facet.
  FactorProduct<K> xbracket(Face facet, int m) {
    std::vector<int> vs = face_vertices(facet);
    HRDET_ASSERT(m >= 1 && m <= static_cast<int>(vs.size()), "bad X index");
    Face rest = facet & ~(1u << (vs[m - 1] - 1));
    FactorProduct<K> p = bracket_colset({rest, true});
    if (m % 2 == 1) p.unit = -p.unit;
    return p;
  }

  // Interned id of the plain generic bracket [S] (used by order profiles).
  int bracket_factor_id(Face subset) {
    HRDET_ASSERT(generic(), "plain bracket ids are a generic-system notion");
    const FactorProduct<K>& p = bracket(subset);
    HRDET_ASSERT(p.powers.size() == 1 && p.powers[0].second == 1,
                 "generic bracket is a single factor");
    return p.powers[0].first;
  }

  // SparsePoly of the generic bracket [S] (for spec-level ord_at tests).
  const SparsePoly<K>& bracket_poly(Face subset) {
    return table_.at(bracket_factor_id(subset)).poly;
  }

  // deg of a face monomial of total degree d, by support-growing rewriting.
  Factored<K> degree_reduce(const FaceMonomial& m) {
    HRDET_CHECK(m.deg == c_->d(), ErrorKind::InvalidInput,
                "degree is defined on monomials of total degree d");
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Factored<K> val = degree_reduce_uncached(m);
    memo_.emplace(m, val);
    return val;
  }

  // Same value through the facet-sum formula; auxiliary variables must cancel.
  Factored<K> degree_kx(const FaceMonomial& m) {
    HRDET_CHECK(m.deg == c_->d(), ErrorKind::InvalidInput,
                "degree is defined on monomials of total degree d");
    Factored<K> acc(&table_, SparsePoly<K>());
    for (Face f : c_->facets_containing(m.support))
      acc += Factored<K>::from_product(&table_, kx_term(f, m));
    require_extended_free(acc);
    return acc;
  }

  // Linear extension over a homogeneous k-combination of degree-d monomials.
  Factored<K> degree_poly(const FacePoly<K>& g) {
    Factored<K> acc(&table_, SparsePoly<K>());
    for (const auto& [m, c] : g) {
      if (c.is_zero()) continue;
      acc += degree_reduce(m).scaled(c);
    }
    return acc;
  }

  Factored<K> degree_poly_kx(const FacePoly<K>& g) {
    Factored<K> acc(&table_, SparsePoly<K>());
    for (Face f : c_->facets()) {
      Factored<K> part(&table_, SparsePoly<K>());
      for (const auto& [m, c] : g) {
        if (c.is_zero() || (m.support & f) != m.support) continue;
        FactorProduct<K> t = kx_term(f, m);
        t.unit *= c;
        part += Factored<K>::from_product(&table_, t);
      }
      acc += part;
    }
    require_extended_free(acc);
    return acc;
  }

  // The facet-sum terms left unmaterialized, for hypersurface-certified order
  // profiles on complexes too large to expand.
  BracketSum<K> degree_kx_sum(const FacePoly<K>& g) {
    BracketSum<K> s;
    for (Face f : c_->facets())
      for (const auto& [m, c] : g) {
        if (c.is_zero() || (m.support & f) != m.support) continue;
        FactorProduct<K> t = kx_term(f, m);
        t.unit *= c;
        s.add(std::move(t));
      }
    return s;
  }

  // ell^p * m expanded in the face ring (non-face supports vanish); the
  // coefficient arithmetic happens in k, so characteristic collapse is
  // automatic.
  FacePoly<K> expand_ell_power(int p, const FaceMonomial& m0 = FaceMonomial::one()) const {
    std::map<FaceMonomial, K> cur;
    if (c_->is_face(m0.support)) cur.emplace(m0, one_);
    for (int step = 0; step < p; ++step) {
      std::map<FaceMonomial, K> next;
      for (const auto& [m, c] : cur)
        for (int v = 1; v <= c_->n(); ++v) {
          FaceMonomial m2 = m.times_vertex(v);
          if (!c_->is_face(m2.support)) continue;
          next[m2] += c;
        }
      cur = std::move(next);
    }
    FacePoly<K> out;
    for (auto& [m, c] : cur)
      if (!c.is_zero()) out.emplace_back(m, c);
    return out;
  }

  bool is_extended_free(const Factored<K>& v) const {
    return (v.var_mask() & extended_mask_) == 0;
  }

  uint64_t extended_mask() const { return extended_mask_; }

 private:
  void require_extended_free(const Factored<K>& v) const {
    HRDET_CHECK(is_extended_free(v), ErrorKind::ExtendedVariableResidue,
                "auxiliary variables failed to cancel from a degree value");
  }

  // eps_F * [F]^{-1} * prod_m X_{F,m}^{alpha_m - 1} for a monomial supported
  // on the facet F.
  FactorProduct<K> kx_term(Face f, const FaceMonomial& m) {
    FactorProduct<K> prod;
    prod.unit = eps(f);
    prod = prod * bracket(f).inverse();
    std::vector<int> vs = face_vertices(f);
    for (int mm = 1; mm <= static_cast<int>(vs.size()); ++mm) {
      int alpha = m.e[vs[mm - 1] - 1];
      if (alpha == 1) continue;
      prod = prod * xbracket(f, mm).pow(alpha - 1);
    }
    return prod;
  }

  Factored<K> degree_reduce_uncached(const FaceMonomial& m) {
    if (!c_->is_face(m.support)) return Factored<K>(&table_, SparsePoly<K>());
    if (m.squarefree()) {
      // A squarefree monomial of degree d has facet support.
      Face f = m.support;
      HRDET_ASSERT(c_->facet_index(f) >= 0, "size-d face must be a facet");
      FactorProduct<K> v = bracket(f).inverse();
      v.unit = v.unit * eps(f);
      return Factored<K>::from_product(&table_, v);
    }
    // Pivot: smallest vertex with exponent > 1, rewritten through the
    // lexicographically smallest facet containing the support.
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
    HRDET_ASSERT(mpos > 0, "pivot not in chosen facet");

    Factored<K> acc(&table_, SparsePoly<K>());
    for (int v = 1; v <= c_->n(); ++v) {
      if (facet & (1u << (v - 1))) continue;
      FaceMonomial m2 = m.div_vertex(pivot).times_vertex(v);
      if (!c_->is_face(m2.support)) continue;
      Face swapped = (facet & ~(1u << (pivot - 1))) | (1u << (v - 1));
      const FactorProduct<K>& bv = bracket(swapped);
      if (bv.is_zero()) continue;
      // Position of v in sorted(F \ pivot u {v}), 1-based.
      int pos = 1;
      for (int w : fvs)
        if (w != pivot && w < v) ++pos;
      int dist = pos > mpos ? pos - mpos : mpos - pos;
      FactorProduct<K> coef = bv;
      if (dist % 2 == 1) coef.unit = -coef.unit;
      acc += degree_reduce(m2).times_product(coef);
    }
    FactorProduct<K> front = bracket(facet).inverse();
    front.unit = -front.unit;
    return acc.times_product(front);
  }

  // --- brackets under the engine's specialization ---------------------------

  const FactorProduct<K>& bracket_colset(const ColSet& cs) {
    auto it = bracket_cache_.find(cs);
    if (it != bracket_cache_.end()) return it->second;
    HRDET_CHECK(cs.size() == c_->d(), ErrorKind::InvalidInput,
                "bracket subsets have size d");
    FactorProduct<K> val = expand_bracket(cs);
    return bracket_cache_.emplace(cs, std::move(val)).first->second;
  }

  // Entry (i, col) of the specialized coefficient matrix: a variable or zero.
  bool entry_zero(int i, int col) const {
    return i == 1 && col != 0 && (punctured_ & (1u << (col - 1)));
  }
  int entry_var(int i, int col) const {
    return vt_.index(VarId{static_cast<uint8_t>(i), static_cast<uint8_t>(col)});
  }

  FactorProduct<K> expand_bracket(const ColSet& cs) {
    int d = c_->d();
    std::vector<int> cols = cs.columns();
    std::vector<int> survivors;
    for (int pos = 0; pos < d; ++pos)
      if (!entry_zero(1, cols[pos])) survivors.push_back(pos);

    if (survivors.empty()) return FactorProduct<K>{};  // zero

    if (survivors.size() == 1 && d >= 2) {
      // det = (-1)^(1+pos) a_{1,c} * (generic minor on rows 2..d), a split
      // into a variable factor and an irreducible minor factor.
      int pos = survivors[0];
      std::vector<int> rest;
      for (int p = 0; p < d; ++p)
        if (p != pos) rest.push_back(cols[p]);
      SparsePoly<K> minor = det_expand(2, rest);
      HRDET_ASSERT(!minor.is_zero() && !minor.is_constant(),
                   "generic minor must be a nonconstant polynomial");
      K unit = minor.leading_coeff();
      int var_id = entry_var(1, cols[pos]);
      int fid_var = table_.intern(SparsePoly<K>::variable(var_id, one_), true,
                                  vt_.var(var_id).str());
      int fid_minor = table_.intern(minor.monic(), true, "minor" + cs.str());
      FactorProduct<K> out;
      out.unit = (pos % 2 == 0) ? unit : -unit;
      out.powers.emplace_back(fid_var, 1);
      out.powers = merge_powers(out.powers, {{fid_minor, 1}});
      return out;
    }

    // Full expansion; with >= 2 surviving first-row entries the determinant is
    // irreducible (all entries are distinct variables or zero, first row
    // zeroed outside the survivors).
    SparsePoly<K> det = det_expand(1, cols);
    HRDET_ASSERT(!det.is_zero(), "specialized bracket vanished unexpectedly");
    if (det.is_constant()) {
      return FactorProduct<K>{det.leading_coeff(), {}};
    }
    K unit = det.leading_coeff();
    int fid = table_.intern(det.monic(), true, "[" + cs.str() + "]");
    FactorProduct<K> out;
    out.unit = unit;
    out.powers.emplace_back(fid, 1);
    return out;
  }

  // Laplace expansion of the specialized determinant on rows i0..d, given
  // columns.
  SparsePoly<K> det_expand(int row, std::vector<int> cols) {
    if (cols.empty()) return SparsePoly<K>::constant(one_);
    SparsePoly<K> acc;
    for (size_t p = 0; p < cols.size(); ++p) {
      if (entry_zero(row, cols[p])) continue;
      std::vector<int> rest;
      for (size_t q = 0; q < cols.size(); ++q)
        if (q != p) rest.push_back(cols[q]);
      SparsePoly<K> sub = det_expand(row + 1, std::move(rest));
      SparsePoly<K> term =
          sub.times_term(Monomial::var(entry_var(row, cols[p])),
                         p % 2 == 0 ? one_ : -one_);
      acc += term;
    }
    return acc;
  }

  SparsePoly<K> generic_minor(int row0, const std::vector<int>& cols) {
    return det_expand(row0, cols);
  }

  const SimplicialComplex* c_;
  Orientation o_;
  K one_;
  Face punctured_;
  VarTable vt_;
  uint64_t extended_mask_ = 0;
  FactorTable<K> table_;
  std::map<ColSet, FactorProduct<K>> bracket_cache_;
  std::unordered_map<FaceMonomial, Factored<K>, FaceMonomialHash> memo_;
};

// ---------------------------------------------------------------------------
// Stanley's criterion
// ---------------------------------------------------------------------------

// Determinant of the d x d matrix mu[:, subset] for matrix systems.
template <class K>
RatFunc<K> lsop_bracket_value(const SimplicialComplex& c, const Lsop<K>& mu,
                              Face subset) {
  HRDET_ASSERT(mu.kind == Lsop<K>::Kind::Matrix, "matrix systems only");
  std::vector<int> cols = face_vertices(subset);
  int d = c.d();
  HRDET_CHECK(static_cast<int>(mu.coeffs.size()) == d &&
                  static_cast<int>(mu.coeffs[0].size()) == c.n(),
              ErrorKind::InvalidInput, "system shape must be d x n");
  // Laplace expansion, desk-scale d.
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  RatFunc<K> det;
  do {
    int inv = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inv;
    RatFunc<K> term = mu.coeffs[0][cols[perm[0]] - 1];
    for (int i = 1; i < d; ++i) term *= mu.coeffs[i][cols[perm[i]] - 1];
    det += (inv % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// A degree-1 system is an l.s.o.p. iff its bracket evaluation is nonzero at
// every facet.
template <class K>
bool is_lsop(const SimplicialComplex& c, const Lsop<K>& mu, const K& one) {
  switch (mu.kind) {
    case Lsop<K>::Kind::Generic:
      return true;  // generic brackets are nonzero polynomials
    case Lsop<K>::Kind::Punctured: {
      // The punctured bracket at a facet G vanishes iff G is the punctured
      // subset itself; any other row-1 survivor keeps it nonzero.
      if (face_size(mu.punctured) != c.d()) return false;
      return c.facet_index(mu.punctured) < 0;
    }
    case Lsop<K>::Kind::Matrix:
    default: {
      for (Face f : c.facets())
        if (lsop_bracket_value(c, mu, f).is_zero()) return false;
      return true;
    }
  }
}

// theta_F = (theta_1^F, theta_2, ..., theta_d) for a size-d non-face F.
template <class K>
Lsop<K> theta_punctured(const SimplicialComplex& c, Face f) {
  HRDET_CHECK(face_size(f) == c.d(), ErrorKind::InvalidInput,
              "punctured systems are indexed by size-d subsets");
  HRDET_CHECK(c.facet_index(f) < 0, ErrorKind::NotAnLsop,
              "the punctured system at a facet fails Stanley's criterion");
  return Lsop<K>::punctured_at(f);
}

}  // namespace hrdet
