#include <benchmark/benchmark.h>

#include "hrdet/artinian.hpp"
#include "hrdet/ordcert.hpp"

using namespace hrdet;

namespace {

const FieldSpec kQ{0, 1};

SimplicialComplex octahedron() {
  return join(boundary_simplex(1), join(boundary_simplex(1), boundary_simplex(1)));
}

SparsePoly<Rat> bracket_poly(const VarTable& vt, std::vector<int> cols) {
  // permutation-sum expansion
  int d = static_cast<int>(cols.size());
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  SparsePoly<Rat> acc;
  do {
    int inv = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inv;
    Monomial m;
    for (int i = 0; i < d; ++i)
      m = m * Monomial::var(vt.index(VarId{uint8_t(i + 1), uint8_t(cols[perm[i]])}));
    acc += SparsePoly<Rat>::term(m, Rat(inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

void BM_sparse_mul(benchmark::State& state) {
  VarTable vt(3, 6);
  auto a = bracket_poly(vt, {1, 2, 3});
  auto b = bracket_poly(vt, {2, 3, 4});
  auto c = bracket_poly(vt, {3, 4, 5});
  auto big = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(big * c);
}
BENCHMARK(BM_sparse_mul);

void BM_exact_div(benchmark::State& state) {
  VarTable vt(3, 6);
  auto a = bracket_poly(vt, {1, 2, 3});
  auto b = bracket_poly(vt, {2, 3, 4});
  auto prod = a * b * a;
  for (auto _ : state) benchmark::DoNotOptimize(prod.exact_div(a));
}
BENCHMARK(BM_exact_div);

void BM_degree_reduce_octahedron(benchmark::State& state) {
  auto oct = octahedron();
  auto o = orient(oct, kQ);
  for (auto _ : state) {
    DegreeEngine<Rat> eng(oct, o, Rat(1));
    benchmark::DoNotOptimize(eng.degree_reduce(FaceMonomial::vertex(1, 3)));
  }
}
BENCHMARK(BM_degree_reduce_octahedron);

void BM_gram_sigma3(benchmark::State& state) {
  auto sig = join(boundary_simplex(2), boundary_simplex(1));
  auto o = orient(sig, kQ);
  for (auto _ : state) {
    DegreeEngine<Rat> eng(sig, o, Rat(1));
    auto basis = select_basis(eng, 1);
    benchmark::DoNotOptimize(hr_gram(eng, 1, basis, false));
  }
}
BENCHMARK(BM_gram_sigma3);

void BM_ord_certificate_rp2(benchmark::State& state) {
  auto sus = join(rp2_six_vertex(), boundary_simplex(1));
  FieldSpec f2{2, 1};
  auto o = orient(sus, f2);
  DegreeEngine<Fp> eng(sus, o, Fp(1, 2));
  BracketSum<Fp> sum = eng.degree_kx_sum(eng.expand_ell_power(4));
  Face target = sus.facets()[0];
  uint64_t seed = 7;
  for (auto _ : state) {
    auto prof = certified_ord_profile(eng, sum, {target}, seed++);
    benchmark::DoNotOptimize(prof);
  }
}
BENCHMARK(BM_ord_certificate_rp2);

}  // namespace

BENCHMARK_MAIN();
