#pragma once

// Reduced homology over a field, manifold/pseudomanifold predicates, and
// facet orientations.

#include <vector>

#include "hrdet/field.hpp"
#include "hrdet/simplicial.hpp"

namespace hrdet {

struct TopologyReport {
  FieldSpec field;
  bool connected = false;
  std::vector<long long> reduced_betti;  // beta_0 .. beta_{d-1}
  bool is_homology_manifold = false;
  bool is_homology_sphere = false;
  bool is_pseudomanifold = false;
};

// Reduced Betti numbers over the field of the given characteristic
// (dimensions depend only on the characteristic).
std::vector<long long> reduced_betti(const SimplicialComplex& c, const FieldSpec& field);

// Strong connectivity here means: the graph on facets with an edge per shared
// ridge is connected.
bool facet_ridge_graph_connected(const SimplicialComplex& c);

// Pure, every ridge in exactly two facets, facet-ridge graph connected.
bool is_pseudomanifold(const SimplicialComplex& c);

TopologyReport topology_report(const SimplicialComplex& c, const FieldSpec& field);

struct Orientation {
  std::vector<int8_t> sign;  // indexed like c.facets()
  bool char2 = false;
  int8_t sign_of(const SimplicialComplex& c, Face f) const {
    int idx = c.facet_index(f);
    HRDET_ASSERT(idx >= 0, "sign of a non-facet");
    return sign[idx];
  }
  Orientation flipped() const {
    Orientation o = *this;
    if (!char2)
      for (auto& s : o.sign) s = -s;
    return o;
  }
};

// Sign with which the facet (sorted) induces its ridge omitting the vertex at
// 1-based sorted position pos: (-1)^(pos-1).
int induced_ridge_sign(Face facet, int omitted_vertex);

// Propagates facet signs across ridges from the lexicographically smallest
// facet; throws NonOrientable on an inconsistent cycle. Characteristic 2
// orients everything with +1 signs.
Orientation orient(const SimplicialComplex& c, const FieldSpec& field);

// Checks ridge-compatibility of an orientation by enumeration.
bool orientation_is_compatible(const SimplicialComplex& c, const Orientation& o);

}  // namespace hrdet
