#include "hrdet/topology.hpp"

#include <algorithm>
#include <map>

#include "hrdet/linalg.hpp"

namespace hrdet {

namespace {

// Boundary matrix from faces of size k to faces of size k-1 with entries in
// the field F; rows are indexed by the smaller faces.
template <class F>
Matrix<F> boundary_matrix(const SimplicialComplex& c, int k, const F& one) {
  const std::vector<Face>& lo = c.faces_of_size(k - 1);
  const std::vector<Face>& hi = c.faces_of_size(k);
  std::map<Face, int> lo_index;
  for (size_t i = 0; i < lo.size(); ++i) lo_index[lo[i]] = static_cast<int>(i);
  Matrix<F> m(lo.size(), std::vector<F>(hi.size(), F{}));
  for (size_t j = 0; j < hi.size(); ++j) {
    std::vector<int> vs = face_vertices(hi[j]);
    for (size_t i = 0; i < vs.size(); ++i) {
      Face sub = hi[j] & ~(1u << (vs[i] - 1));
      F val = (i % 2 == 0) ? one : -one;
      m[lo_index.at(sub)][j] = val;
    }
  }
  return m;
}

template <class F>
std::vector<long long> betti_impl(const SimplicialComplex& c, const F& one) {
  int topk = c.dim() + 1;  // faces of size up to topk
  std::vector<int> rank_d(topk + 2, 0);
  // rank of boundary from size-k faces to size-(k-1) faces, k = 1..topk;
  // size-0 is the empty face, so k = 1 is the augmentation map.
  for (int k = 1; k <= topk; ++k)
    rank_d[k] = matrix_rank(boundary_matrix(c, k, one));
  std::vector<long long> betti(c.dim() + 1, 0);
  for (int q = 0; q <= c.dim(); ++q) {
    long long dim_cq = static_cast<long long>(c.faces_of_size(q + 1).size());
    betti[q] = dim_cq - rank_d[q + 1] - rank_d[q + 2];
  }
  return betti;
}

}  // namespace

std::vector<long long> reduced_betti(const SimplicialComplex& c, const FieldSpec& field) {
  if (field.characteristic == 0) return betti_impl(c, Rat(1));
  return betti_impl(c, Fp(1, field.characteristic));
}

bool facet_ridge_graph_connected(const SimplicialComplex& c) {
  const auto& facets = c.facets();
  if (facets.size() <= 1) return true;
  std::map<Face, std::vector<int>> by_ridge;
  for (size_t i = 0; i < facets.size(); ++i)
    for (int v : face_vertices(facets[i]))
      by_ridge[facets[i] & ~(1u << (v - 1))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> adj(facets.size());
  for (const auto& [ridge, fs] : by_ridge)
    for (size_t a = 0; a < fs.size(); ++a)
      for (size_t b = a + 1; b < fs.size(); ++b) {
        adj[fs[a]].push_back(fs[b]);
        adj[fs[b]].push_back(fs[a]);
      }
  std::vector<bool> seen(facets.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == facets.size();
}

bool is_pseudomanifold(const SimplicialComplex& c) {
  if (!c.pure() || c.dim() < 0) return false;
  for (Face r : c.ridges())
    if (c.facets_containing(r).size() != 2) return false;
  return facet_ridge_graph_connected(c);
}

TopologyReport topology_report(const SimplicialComplex& c, const FieldSpec& field) {
  HRDET_CHECK(c.pure() && c.dim() >= 0, ErrorKind::InvalidInput,
              "topology_report needs a pure complex of dim >= 0");
  TopologyReport rep;
  rep.field = field;
  rep.reduced_betti = reduced_betti(c, field);
  rep.connected = rep.reduced_betti.empty() || rep.reduced_betti[0] == 0;
  rep.is_pseudomanifold = is_pseudomanifold(c);

  // Homology manifold: the link of every nonempty face has the reduced
  // homology of a sphere of complementary dimension.
  rep.is_homology_manifold = true;
  int d = c.d();
  for (int k = 1; k <= d && rep.is_homology_manifold; ++k) {
    for (Face g : c.faces_of_size(k)) {
      int link_dim = d - k - 1;
      if (link_dim < 0) continue;  // link of a facet is the empty-face complex
      SimplicialComplex lk = c.link(g);
      if (lk.dim() != link_dim || !lk.pure()) {
        rep.is_homology_manifold = false;
        break;
      }
      std::vector<long long> lb = reduced_betti(lk, field);
      for (int q = 0; q <= lk.dim(); ++q) {
        long long expect = (q == link_dim) ? 1 : 0;
        if (lb[q] != expect) {
          rep.is_homology_manifold = false;
          break;
        }
      }
      if (!rep.is_homology_manifold) break;
    }
  }

  rep.is_homology_sphere = rep.is_homology_manifold;
  for (int q = 0; q <= c.dim() && rep.is_homology_sphere; ++q) {
    long long expect = (q == c.dim()) ? 1 : 0;
    if (rep.reduced_betti[q] != expect) rep.is_homology_sphere = false;
  }
  return rep;
}

int induced_ridge_sign(Face facet, int omitted_vertex) {
  int pos = 0;
  for (int v : face_vertices(facet)) {
    ++pos;
    if (v == omitted_vertex) return (pos % 2 == 1) ? 1 : -1;
  }
  HRDET_ASSERT(false, "omitted vertex not in facet");
  return 0;
}

Orientation orient(const SimplicialComplex& c, const FieldSpec& field) {
  HRDET_CHECK(is_pseudomanifold(c), ErrorKind::InvalidInput,
              "orientation requires a pseudomanifold");
  const auto& facets = c.facets();
  Orientation o;
  o.sign.assign(facets.size(), 0);
  if (field.characteristic == 2) {
    o.char2 = true;
    std::fill(o.sign.begin(), o.sign.end(), int8_t{1});
    return o;
  }
  if (c.d() == 1) {
    // Two points: -1 on the lexicographically smaller facet, +1 on the other.
    HRDET_ASSERT(facets.size() == 2, "0-dimensional pseudomanifold has 2 points");
    o.sign[0] = -1;
    o.sign[1] = 1;
    return o;
  }

  std::map<Face, std::vector<int>> by_ridge;
  for (size_t i = 0; i < facets.size(); ++i)
    for (int v : face_vertices(facets[i]))
      by_ridge[facets[i] & ~(1u << (v - 1))].push_back(static_cast<int>(i));

  std::vector<int> stack{0};
  o.sign[0] = 1;
  while (!stack.empty()) {
    int fi = stack.back();
    stack.pop_back();
    Face f = facets[fi];
    for (int v : face_vertices(f)) {
      Face ridge = f & ~(1u << (v - 1));
      const auto& pair = by_ridge.at(ridge);
      HRDET_ASSERT(pair.size() == 2, "ridge not in exactly two facets");
      int gi = pair[0] == fi ? pair[1] : pair[0];
      Face g = facets[gi];
      int w = __builtin_ctz(g & ~ridge) + 1;
      // Opposite induced orientations across the shared ridge.
      int8_t need = static_cast<int8_t>(-o.sign[fi] * induced_ridge_sign(f, v) *
                                        induced_ridge_sign(g, w));
      if (o.sign[gi] == 0) {
        o.sign[gi] = need;
        stack.push_back(gi);
      } else {
        HRDET_CHECK(o.sign[gi] == need, ErrorKind::NonOrientable,
                    "complex is non-orientable over this field");
      }
    }
  }
  return o;
}

bool orientation_is_compatible(const SimplicialComplex& c, const Orientation& o) {
  if (o.char2) return true;
  for (Face r : c.ridges()) {
    auto fs = c.facets_containing(r);
    if (fs.size() != 2) return false;
    int s0 = o.sign_of(c, fs[0]) *
             induced_ridge_sign(fs[0], __builtin_ctz(fs[0] & ~r) + 1);
    int s1 = o.sign_of(c, fs[1]) *
             induced_ridge_sign(fs[1], __builtin_ctz(fs[1] & ~r) + 1);
    if (s0 != -s1) return false;
  }
  return true;
}

}  // namespace hrdet
