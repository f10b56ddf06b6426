#include <doctest.h>

#include "hrdet/simplicial.hpp"
#include "hrdet/topology.hpp"

using namespace hrdet;

namespace {

const FieldSpec kQ{0, 1};
const FieldSpec kF2{2, 1};

SimplicialComplex sigma(int d) {
  // Suspension of the boundary of the (d-1)-simplex: minimal non-faces
  // {1..d} and {d+1, d+2}.
  return join(boundary_simplex(d - 1), boundary_simplex(1));
}

SimplicialComplex octahedron() {
  return join(boundary_simplex(1), join(boundary_simplex(1), boundary_simplex(1)));
}

// Independent rank oracle over F2 for the reduced boundary maps.
long long f2_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] % 2 == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c] % 2)
        for (size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] + m[rank][j]) % 2;
    ++rank;
  }
  return static_cast<long long>(rank);
}

std::vector<long long> f2_betti_oracle(const SimplicialComplex& c) {
  int d = c.d();
  std::vector<long long> rank(d + 2, 0);
  for (int k = 1; k <= d; ++k) {
    const auto& lo = c.faces_of_size(k - 1);
    const auto& hi = c.faces_of_size(k);
    std::vector<std::vector<int>> m(lo.size(), std::vector<int>(hi.size(), 0));
    for (size_t j = 0; j < hi.size(); ++j)
      for (int v : face_vertices(hi[j])) {
        Face sub = hi[j] & ~(1u << (v - 1));
        for (size_t i = 0; i < lo.size(); ++i)
          if (lo[i] == sub) m[i][j] = 1;
      }
    rank[k] = f2_rank(std::move(m));
  }
  std::vector<long long> betti(d, 0);
  for (int q = 0; q < d; ++q)
    betti[q] = static_cast<long long>(c.faces_of_size(q + 1).size()) -
               rank[q + 1] - rank[q + 2];
  return betti;
}

}  // namespace

TEST_CASE("from_facets canonicalizes") {
  auto s = SimplicialComplex::from_facets(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(s.pure());
  CHECK(s.dim() == 1);
  CHECK(s.facets().size() == 4);
  CHECK(!s.is_face(face_of({1, 2})));
  CHECK(!s.is_face(face_of({3, 4})));
  CHECK(s.is_face(face_of({1, 3})));

  auto sig = sigma(2);
  CHECK(sig.facets() == s.facets());

  auto tri = SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(tri.pure());
  CHECK(tri.dim() == 1);

  // Inclusion-maximality.
  auto red = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2}});
  CHECK(red.facets().size() == 1);
  CHECK(red.facets()[0] == face_of({1, 2, 3}));

  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{1, 3}}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {}), Error);
}

TEST_CASE("boundary_simplex") {
  auto s0 = boundary_simplex(1);
  CHECK(s0.facets() == std::vector<Face>{face_of({1}), face_of({2})});

  auto s3 = boundary_simplex(3);
  CHECK(s3.n() == 4);
  CHECK(s3.facets().size() == 4);
  CHECK(s3.dim() == 2);
  CHECK(!s3.is_face(face_of({1, 2, 3, 4})));

  auto [f2, h2] = boundary_simplex(2).f_h_vectors();
  CHECK(h2 == std::vector<long long>{1, 1, 1});

  CHECK_THROWS_AS(boundary_simplex(0), Error);
}

TEST_CASE("join and suspension") {
  auto four_cycle = join(boundary_simplex(1), boundary_simplex(1));
  CHECK(four_cycle.facets().size() == 4);
  CHECK(four_cycle.dim() == 1);

  auto sig = suspension(boundary_simplex(2));
  CHECK(sig.n() == 5);
  CHECK(sig.facets().size() == 6);

  auto oct = octahedron();
  CHECK(oct.n() == 6);
  CHECK(oct.facets().size() == 8);
  auto [fo, ho] = oct.f_h_vectors();
  CHECK(fo == std::vector<long long>{1, 6, 12, 8});
  CHECK(ho == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("stellar subdivision counts") {
  auto s3 = boundary_simplex(3);
  auto once = stellar_subdivide(s3, s3.facets()[0]);
  CHECK(once.n() == 5);
  CHECK(once.facets().size() == 6);

  auto oct = octahedron();
  auto oct1 = stellar_subdivide(oct, oct.facets()[0]);
  CHECK(oct1.facets().size() == 10);

  CHECK_THROWS_AS(stellar_subdivide(s3, face_of({1, 2})), Error);

  // Lemma: one interior subdivision adds one to each middle h-entry.
  auto [f0, h0] = s3.f_h_vectors();
  auto [f1, h1] = once.f_h_vectors();
  for (int q = 1; q < 3; ++q) CHECK(h1[q] == h0[q] + 1);
  CHECK(h1[0] == h0[0]);
  CHECK(h1[3] == h0[3]);
}

TEST_CASE("links and stars") {
  auto oct = octahedron();
  // Link of a vertex of the octahedron is a 4-cycle.
  auto lk = oct.link(face_of({1}));
  CHECK(lk.facets().size() == 4);
  CHECK(lk.dim() == 1);
  std::vector<long long> lb = reduced_betti(lk, kQ);
  CHECK(lb == std::vector<long long>{0, 1});

  // Link of a ridge of a pseudomanifold has exactly 2 vertices.
  for (Face r : oct.ridges()) {
    auto rl = oct.link(r);
    CHECK(rl.facets().size() == 2);
    CHECK(rl.dim() == 0);
  }

  CHECK(oct.closed_star(0u).facets() == oct.facets());
  auto st = oct.closed_star(face_of({1}));
  CHECK(st.facets().size() == 4);

  CHECK_THROWS_AS(oct.link(face_of({1, 2})), Error);
}

TEST_CASE("rp2 six-vertex triangulation") {
  auto rp2 = rp2_six_vertex();
  CHECK(rp2.n() == 6);
  CHECK(rp2.facets().size() == 10);
  CHECK(rp2.dim() == 2);
  auto [f, h] = rp2.f_h_vectors();
  CHECK(f == std::vector<long long>{1, 6, 15, 10});
  // Euler characteristic 6 - 15 + 10 = 1.
  CHECK(f[1] - f[2] + f[3] == 1);

  // Rank oracle agreement over F2, and the expected Betti numbers.
  CHECK(reduced_betti(rp2, kF2) == f2_betti_oracle(rp2));
  CHECK(reduced_betti(rp2, kF2) == std::vector<long long>{0, 1, 1});
  CHECK(reduced_betti(rp2, kQ) == std::vector<long long>{0, 0, 0});

  auto rep2 = topology_report(rp2, kF2);
  CHECK(rep2.is_homology_manifold);
  CHECK(rep2.is_pseudomanifold);
  CHECK(!rep2.is_homology_sphere);

  // Not orientable over characteristic 0; fine over characteristic 2.
  CHECK_THROWS_AS(orient(rp2, kQ), Error);
  auto o2 = orient(rp2, kF2);
  CHECK(o2.char2);
}

TEST_CASE("topology reports on spheres") {
  for (int d = 2; d <= 4; ++d) {
    auto s = boundary_simplex(d);
    auto rep = topology_report(s, kQ);
    CHECK(rep.connected);
    CHECK(rep.is_homology_sphere);
    CHECK(rep.is_homology_manifold);
    CHECK(rep.is_pseudomanifold);
    std::vector<long long> expect(d, 0);
    expect[d - 1] = 1;
    CHECK(rep.reduced_betti == expect);
  }

  auto rep0 = topology_report(boundary_simplex(1), kQ);
  CHECK(!rep0.connected);
  CHECK(rep0.reduced_betti == std::vector<long long>{1});
  CHECK(rep0.is_homology_sphere);
}

TEST_CASE("suspension of rp2 is a pseudomanifold but not a manifold") {
  auto sus = join(rp2_six_vertex(), boundary_simplex(1));
  CHECK(sus.n() == 8);
  CHECK(sus.facets().size() == 20);
  auto rep = topology_report(sus, kF2);
  CHECK(rep.connected);
  CHECK(rep.is_pseudomanifold);
  CHECK(!rep.is_homology_manifold);
  auto repq = topology_report(sus, kQ);
  CHECK(!repq.is_homology_manifold);
}

TEST_CASE("orientations") {
  auto s0 = boundary_simplex(1);
  auto o0 = orient(s0, kQ);
  CHECK(o0.sign_of(s0, face_of({1})) == -1);
  CHECK(o0.sign_of(s0, face_of({2})) == 1);

  // Triangle boundary: alternating signs around the cycle, ridge-compatible.
  auto tri = boundary_simplex(2);
  auto ot = orient(tri, kQ);
  CHECK(orientation_is_compatible(tri, ot));
  CHECK(orientation_is_compatible(tri, ot.flipped()));

  for (int d = 2; d <= 4; ++d) {
    auto s = boundary_simplex(d);
    auto o = orient(s, kQ);
    CHECK(orientation_is_compatible(s, o));
    CHECK(orientation_is_compatible(s, o.flipped()));
    // Seed facet gets +1 on its sorted order.
    CHECK(o.sign[0] == 1);
  }

  auto oct = octahedron();
  CHECK(orientation_is_compatible(oct, orient(oct, kQ)));
  auto sub = stellar_subdivide(oct, oct.facets()[0]);
  CHECK(orientation_is_compatible(sub, orient(sub, kQ)));

  // A corrupted sign violates ridge compatibility.
  auto bad = orient(oct, kQ);
  bad.sign[3] = -bad.sign[3];
  CHECK(!orientation_is_compatible(oct, bad));
}

TEST_CASE("Dehn-Sommerville at desk scale") {
  auto dehn = [](const SimplicialComplex& c) {
    auto [f, h] = c.f_h_vectors();
    int d = c.d();
    for (int q = 0; q <= d; ++q) CHECK(h[q] == h[d - q]);
  };
  dehn(boundary_simplex(2));
  dehn(boundary_simplex(3));
  dehn(boundary_simplex(4));
  dehn(octahedron());
  dehn(sigma(2));
  dehn(sigma(3));
  auto s3 = boundary_simplex(3);
  dehn(stellar_subdivide(s3, s3.facets()[0]));
}

TEST_CASE("stellar subdivision preserves topology") {
  auto oct = octahedron();
  auto sub = stellar_subdivide(oct, oct.facets()[2]);
  CHECK(reduced_betti(sub, kQ) == reduced_betti(oct, kQ));
  CHECK(reduced_betti(sub, kF2) == reduced_betti(oct, kF2));
  auto rep = topology_report(sub, kQ);
  CHECK(rep.is_homology_sphere);
}

TEST_CASE("pseudomanifolds have ridges in exactly two facets") {
  for (const auto& c : {boundary_simplex(3), octahedron(), sigma(3)}) {
    for (Face r : c.ridges()) CHECK(c.facets_containing(r).size() == 2);
  }
}
