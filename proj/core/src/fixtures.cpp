#include "hrdet/fixtures.hpp"

namespace hrdet {

namespace {

SimplicialComplex octahedron_complex() {
  return join(boundary_simplex(1),
              join(boundary_simplex(1), boundary_simplex(1)));
}

SimplicialComplex cycle(int n) {
  HRDET_CHECK(n >= 3, ErrorKind::InvalidInput, "cycles need n >= 3");
  std::vector<std::vector<int>> facets;
  for (int v = 1; v <= n; ++v) facets.push_back({v, v % n + 1});
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex stacked(int d, int steps) {
  SimplicialComplex c = boundary_simplex(d);
  for (int s = 0; s < steps; ++s) c = stellar_subdivide(c, c.facets()[0]);
  return c;
}

}  // namespace

std::optional<Fixture> get_fixture(const std::string& name) {
  if (name.rfind("corrupted:", 0) == 0) {
    auto base = get_fixture(name.substr(10));
    if (!base) return std::nullopt;
    base->name = name;
    base->corrupt_orientation = true;
    return base;
  }
  if (name.rfind("subdivided:", 0) == 0) {
    auto base = get_fixture(name.substr(11));
    if (!base) return std::nullopt;
    base->name = name;
    base->complex = stellar_subdivide(base->complex, base->complex.facets()[0]);
    return base;
  }
  auto num_suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(name.substr(prefix.size()));
    } catch (...) {
      return std::nullopt;
    }
  };

  if (name == "s0") return Fixture{name, boundary_simplex(1)};
  if (auto d = num_suffix("simplex:")) {
    if (*d < 1) return std::nullopt;
    return Fixture{name, boundary_simplex(*d)};
  }
  if (auto d = num_suffix("sigma:")) {
    if (*d < 2) return std::nullopt;
    return Fixture{name, join(boundary_simplex(*d - 1), boundary_simplex(1))};
  }
  if (auto n = num_suffix("cycle:")) {
    if (*n < 3) return std::nullopt;
    return Fixture{name, cycle(*n)};
  }
  if (name == "octahedron") return Fixture{name, octahedron_complex()};
  if (name.rfind("stacked:", 0) == 0) {
    auto rest = name.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
      int d = std::stoi(rest.substr(0, colon));
      int steps = std::stoi(rest.substr(colon + 1));
      if (d < 2 || steps < 0) return std::nullopt;
      return Fixture{name, stacked(d, steps)};
    } catch (...) {
      return std::nullopt;
    }
  }
  if (name == "rp2") return Fixture{name, rp2_six_vertex(), FieldSpec{2, 1}};
  if (name == "rp2_suspension")
    return Fixture{name, join(rp2_six_vertex(), boundary_simplex(1)),
                   FieldSpec{2, 10}};
  return std::nullopt;
}

std::vector<std::string> fixture_names() {
  return {"s0",         "simplex:d",        "sigma:d",        "cycle:n",
          "octahedron", "stacked:d:steps",  "subdivided:...", "rp2",
          "rp2_suspension", "corrupted:..."};
}

Orientation fixture_orientation(const Fixture& fx, const FieldSpec& field) {
  Orientation o = orient(fx.complex, field);
  if (fx.corrupt_orientation && !o.char2) {
    HRDET_ASSERT(!o.sign.empty(), "orientation has no facets");
    size_t last = o.sign.size() - 1;
    o.sign[last] = static_cast<int8_t>(-o.sign[last]);
  }
  return o;
}

}  // namespace hrdet
