#pragma once

// Simplicial complexes on vertex set {1, ..., n}, faces as bitmasks
// (bit j-1 <-> vertex j). Desk-scale by design: n <= 31 enforced here,
// tighter variable budgets downstream.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hrdet/error.hpp"

namespace hrdet {

using Face = uint32_t;

inline int face_size(Face f) { return __builtin_popcount(f); }
inline Face face_of(std::initializer_list<int> vs) {
  Face f = 0;
  for (int v : vs) f |= (1u << (v - 1));
  return f;
}
inline Face face_of(const std::vector<int>& vs) {
  Face f = 0;
  for (int v : vs) f |= (1u << (v - 1));
  return f;
}
std::vector<int> face_vertices(Face f);
std::string face_str(Face f);

// Lexicographic order on sorted vertex tuples of equal size: at the first
// vertex where membership differs, the face containing it sorts first.
bool face_lex_less(Face a, Face b);

class SimplicialComplex {
 public:
  // Canonicalizes: sorts vertex tuples, deduplicates, keeps inclusion-maximal
  // facets, computes purity.
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_facet_masks(int n, std::vector<Face> facets);

  int n() const { return n_; }
  int dim() const { return dim_; }
  bool pure() const { return pure_; }
  // Facet size d = dim + 1 for pure complexes.
  int d() const { return dim_ + 1; }

  const std::vector<Face>& facets() const { return facets_; }
  int facet_index(Face f) const;

  bool is_face(Face f) const;
  // All faces with exactly k vertices (k = 0 gives the empty face).
  const std::vector<Face>& faces_of_size(int k) const;
  // Ridges: faces of size d-1 of a pure complex.
  std::vector<Face> ridges() const;
  // Facets containing g.
  std::vector<Face> facets_containing(Face g) const;

  // Standard constructions.
  SimplicialComplex link(Face g) const;
  SimplicialComplex closed_star(Face g) const;

  std::pair<std::vector<long long>, std::vector<long long>> f_h_vectors() const;

  std::string str() const;

 private:
  int n_ = 0;
  int dim_ = -1;
  bool pure_ = false;
  std::vector<Face> facets_;  // sorted with face_lex_less
  mutable std::vector<std::optional<std::vector<Face>>> faces_by_size_;
  mutable std::vector<std::unordered_set<Face>> face_sets_;
  void ensure_faces(int k) const;
};

SimplicialComplex boundary_simplex(int d);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
inline SimplicialComplex suspension(const SimplicialComplex& a) {
  return join(a, boundary_simplex(1));
}
SimplicialComplex stellar_subdivide(const SimplicialComplex& c, Face f);
SimplicialComplex rp2_six_vertex();

long long binomial(int n, int k);

}  // namespace hrdet
