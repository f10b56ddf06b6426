#pragma once

// Named built-in complexes used by the verification suite and the CLI.

#include <optional>
#include <string>

#include "hrdet/simplicial.hpp"
#include "hrdet/topology.hpp"

namespace hrdet {

struct Fixture {
  std::string name;
  SimplicialComplex complex;
  FieldSpec field{0, 1};            // the field the fixture is usually run over
  bool corrupt_orientation = false; // flip one facet sign after orienting
};

// Recognized names:
//   s0                      two points
//   simplex:d               boundary of the d-simplex (d >= 1)
//   sigma:d                 suspension of the boundary of the (d-1)-simplex
//   cycle:n                 the n-cycle (n >= 3)
//   octahedron              the 3-dimensional cross-polytope boundary
//   stacked:d:steps         repeated facet subdivisions of simplex:d
//   subdivided:<name>       one facet subdivision of a named fixture
//   rp2                     the 6-vertex projective plane (field 2)
//   rp2_suspension          its suspension (field 2^10)
//   corrupted:<name>        <name> with one orientation sign flipped
std::optional<Fixture> get_fixture(const std::string& name);

std::vector<std::string> fixture_names();

// The orientation a fixture runs with (corruption applied when requested).
Orientation fixture_orientation(const Fixture& fx, const FieldSpec& field);

}  // namespace hrdet
