#include "hrdet/json_io.hpp"

namespace hrdet {

Json face_to_json(Face f) {
  Json arr = Json::array();
  for (int v : face_vertices(f)) arr.push_back(v);
  return arr;
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["n"] = c.n();
  Json facets = Json::array();
  for (Face f : c.facets()) facets.push_back(face_to_json(f));
  j["facets"] = std::move(facets);
  j["dim"] = c.dim();
  j["pure"] = c.pure();
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  HRDET_CHECK(j.contains("n") && j.contains("facets"), ErrorKind::InvalidInput,
              "complex JSON needs fields \"n\" and \"facets\"");
  int n = j.at("n").get<int>();
  std::vector<std::vector<int>> facets;
  for (const auto& f : j.at("facets"))
    facets.push_back(f.get<std::vector<int>>());
  return SimplicialComplex::from_facets(n, facets);
}

Json topology_to_json(const TopologyReport& rep) {
  Json j;
  j["field"] = rep.field.str();
  j["connected"] = rep.connected;
  j["reduced_betti"] = rep.reduced_betti;
  j["is_homology_manifold"] = rep.is_homology_manifold;
  j["is_homology_sphere"] = rep.is_homology_sphere;
  j["is_pseudomanifold"] = rep.is_pseudomanifold;
  return j;
}

Json hilbert_to_json(const HilbertReport& rep) {
  Json j;
  j["h_dims"] = rep.h_dims;
  j["hbar_dims"] = rep.hbar_dims;
  if (!rep.h_exact.empty()) {
    Json ex = Json::array();
    for (bool b : rep.h_exact) ex.push_back(b);
    j["h_dims_certified"] = std::move(ex);
  }
  j["manifold_formula_applicable"] = rep.ns_applicable;
  j["manifold_formula"] = rep.ns_prediction;
  if (rep.draws_used > 0) j["draws_used"] = rep.draws_used;
  j["seed"] = rep.seed;
  return j;
}

}  // namespace hrdet
