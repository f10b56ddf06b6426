#include "hrdet/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace hrdet {

std::vector<int> face_vertices(Face f) {
  std::vector<int> vs;
  for (int v = 1; v <= 32; ++v)
    if (f & (1u << (v - 1))) vs.push_back(v);
  return vs;
}

std::string face_str(Face f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : face_vertices(f)) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

bool face_lex_less(Face a, Face b) {
  while (a && b) {
    int va = __builtin_ctz(a), vb = __builtin_ctz(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

SimplicialComplex SimplicialComplex::from_facets(
    int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Face> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) {
    HRDET_CHECK(!f.empty(), ErrorKind::InvalidInput, "empty facet");
    Face m = 0;
    for (int v : f) {
      HRDET_CHECK(v >= 1 && v <= n, ErrorKind::InvalidInput,
                  "vertex label out of range: " + std::to_string(v));
      m |= (1u << (v - 1));
    }
    masks.push_back(m);
  }
  return from_facet_masks(n, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_facet_masks(int n, std::vector<Face> masks) {
  HRDET_CHECK(n >= 1 && n <= 31, ErrorKind::InvalidInput, "need 1 <= n <= 31");
  HRDET_CHECK(!masks.empty(), ErrorKind::InvalidInput, "empty facet list");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  // Keep inclusion-maximal faces only.
  std::vector<Face> maximal;
  for (Face f : masks) {
    bool contained = false;
    for (Face g : masks)
      if (f != g && (f & g) == f) { contained = true; break; }
    if (!contained) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(), face_lex_less);

  SimplicialComplex c;
  c.n_ = n;
  c.facets_ = std::move(maximal);
  int maxsz = 0, minsz = 32;
  for (Face f : c.facets_) {
    maxsz = std::max(maxsz, face_size(f));
    minsz = std::min(minsz, face_size(f));
  }
  c.dim_ = maxsz - 1;
  c.pure_ = (maxsz == minsz);
  return c;
}

int SimplicialComplex::facet_index(Face f) const {
  for (size_t i = 0; i < facets_.size(); ++i)
    if (facets_[i] == f) return static_cast<int>(i);
  return -1;
}

void SimplicialComplex::ensure_faces(int k) const {
  if (faces_by_size_.empty()) {
    faces_by_size_.resize(dim_ + 2);
    face_sets_.resize(dim_ + 2);
  }
  HRDET_ASSERT(k >= 0 && k <= dim_ + 1, "face size out of range");
  if (faces_by_size_[k].has_value()) return;
  std::unordered_set<Face> seen;
  // Enumerate k-subsets of each facet.
  for (Face f : facets_) {
    std::vector<int> vs = face_vertices(f);
    int m = static_cast<int>(vs.size());
    if (m < k) continue;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Face g = 0;
      for (int i : idx) g |= (1u << (vs[i] - 1));
      seen.insert(g);
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (k == 0) break;  // only the empty face
  }
  std::vector<Face> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), face_lex_less);
  faces_by_size_[k] = std::move(sorted);
  face_sets_[k] = std::move(seen);
}

bool SimplicialComplex::is_face(Face f) const {
  int k = face_size(f);
  if (k > dim_ + 1) return false;
  ensure_faces(k);
  return face_sets_[k].count(f) > 0;
}

const std::vector<Face>& SimplicialComplex::faces_of_size(int k) const {
  ensure_faces(k);
  return *faces_by_size_[k];
}

std::vector<Face> SimplicialComplex::ridges() const {
  HRDET_CHECK(pure_, ErrorKind::InvalidInput, "ridges of a non-pure complex");
  return faces_of_size(d() - 1);
}

std::vector<Face> SimplicialComplex::facets_containing(Face g) const {
  std::vector<Face> out;
  for (Face f : facets_)
    if ((f & g) == g) out.push_back(f);
  return out;
}

SimplicialComplex SimplicialComplex::link(Face g) const {
  HRDET_CHECK(is_face(g), ErrorKind::InvalidInput,
              "link of a non-face " + face_str(g));
  std::vector<Face> lk;
  for (Face f : facets_)
    if ((f & g) == g) lk.push_back(f & ~g);
  // The link of a facet is the complex {empty face}; keep n for labeling.
  if (lk.size() == 1 && lk[0] == 0) {
    SimplicialComplex c;
    c.n_ = n_;
    c.dim_ = -1;
    c.pure_ = true;
    c.facets_ = {0u};
    return c;
  }
  return from_facet_masks(n_, std::move(lk));
}

SimplicialComplex SimplicialComplex::closed_star(Face g) const {
  HRDET_CHECK(is_face(g), ErrorKind::InvalidInput,
              "closed star of a non-face " + face_str(g));
  std::vector<Face> st = facets_containing(g);
  return from_facet_masks(n_, std::move(st));
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::pair<std::vector<long long>, std::vector<long long>>
SimplicialComplex::f_h_vectors() const {
  HRDET_CHECK(pure_, ErrorKind::InvalidInput, "f/h-vectors of a non-pure complex");
  int dd = d();
  std::vector<long long> f(dd + 1);  // f[i] = #faces with i vertices, f[0] = 1
  for (int i = 0; i <= dd; ++i)
    f[i] = static_cast<long long>(faces_of_size(i).size());
  std::vector<long long> h(dd + 1, 0);
  for (int q = 0; q <= dd; ++q)
    for (int i = 0; i <= q; ++i)
      h[q] += ((q - i) % 2 ? -1 : 1) * binomial(dd - i, q - i) * f[i];
  return {f, h};
}

std::string SimplicialComplex::str() const {
  std::ostringstream os;
  os << "complex(n=" << n_ << ", facets=[";
  for (size_t i = 0; i < facets_.size(); ++i) {
    if (i) os << ", ";
    os << face_str(facets_[i]);
  }
  os << "])";
  return os.str();
}

SimplicialComplex boundary_simplex(int d) {
  HRDET_CHECK(d >= 1, ErrorKind::InvalidInput, "boundary_simplex needs d >= 1");
  std::vector<Face> facets;
  Face all = (1u << (d + 1)) - 1;
  for (int v = 1; v <= d + 1; ++v) facets.push_back(all & ~(1u << (v - 1)));
  return SimplicialComplex::from_facet_masks(d + 1, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  HRDET_CHECK(a.pure() && b.pure(), ErrorKind::InvalidInput, "join needs pure inputs");
  std::vector<Face> facets;
  for (Face fa : a.facets())
    for (Face fb : b.facets()) facets.push_back(fa | (fb << a.n()));
  return SimplicialComplex::from_facet_masks(a.n() + b.n(), std::move(facets));
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& c, Face f) {
  HRDET_CHECK(c.facet_index(f) >= 0, ErrorKind::InvalidInput,
              "stellar subdivision requires a facet");
  int n = c.n() + 1;
  Face nv = 1u << (n - 1);
  std::vector<Face> facets;
  for (Face g : c.facets())
    if (g != f) facets.push_back(g);
  for (int v : face_vertices(f)) facets.push_back((f | nv) & ~(1u << (v - 1)));
  return SimplicialComplex::from_facet_masks(n, std::move(facets));
}

SimplicialComplex rp2_six_vertex() {
  return SimplicialComplex::from_facets(
      6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
          {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

}  // namespace hrdet
