#include <doctest.h>

#include <random>

#include "hrdet/poly.hpp"
#include "hrdet/poly_io.hpp"
#include "hrdet/ratfunc.hpp"
#include "hrdet/symlinalg.hpp"

using namespace hrdet;

namespace {

const VarTable vt(2, 4);  // d = 2, n = 4: variables a_{i,j}, i in 1..2, j in 0..4

SparsePoly<Rat> var(int i, int j) {
  return SparsePoly<Rat>::variable(vt.index(VarId{uint8_t(i), uint8_t(j)}), Rat(1));
}

SparsePoly<Rat> rnd_poly(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> nt(1, max_terms), coeff(-4, 4), expd(0, 2);
  SparsePoly<Rat> p;
  for (int t = 0; t < nt(rng); ++t) {
    Monomial m;
    for (int v = 0; v < 6; ++v) {
      int e = expd(rng);
      m.e[v] = static_cast<uint8_t>(e);
      m.deg = static_cast<uint16_t>(m.deg + e);
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    p += SparsePoly<Rat>::term(m, Rat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
  auto a11 = var(1, 1), a12 = var(1, 2);
  CHECK((a11 + a12) * (a11 - a12) == a11 * a11 - a12 * a12);

  // 1/a11 + 1/a12 = (a11+a12)/(a11*a12)
  RatFunc<Rat> f(SparsePoly<Rat>::constant(Rat(1)), a11);
  RatFunc<Rat> g(SparsePoly<Rat>::constant(Rat(1)), a12);
  RatFunc<Rat> sum = f + g;
  CHECK(sum.num() == a11 + a12);
  CHECK(sum.den() == a11 * a12);
}

TEST_CASE("Frobenius over GF(2): (x+y)^2 = x^2 + y^2") {
  const Gf2Ctx* ctx = gf2_context(1);
  auto x = SparsePoly<GF2m>::variable(0, GF2m(1, ctx));
  auto y = SparsePoly<GF2m>::variable(1, GF2m(1, ctx));
  auto s = x + y;
  CHECK(s * s == x * x + y * y);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = rnd_poly(rng, 4), b = rnd_poly(rng, 4), c = rnd_poly(rng, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exact division") {
  auto a11 = var(1, 1), a12 = var(1, 2), a21 = var(2, 1), a22 = var(2, 2);
  auto br = a11 * a22 - a12 * a21;  // a 2x2 bracket
  auto cube = br * br * br;
  CHECK(*cube.exact_div(br) == br * br);

  auto one = SparsePoly<Rat>::constant(Rat(1));
  CHECK(!(br + one).exact_div(br).has_value());
  CHECK(SparsePoly<Rat>().exact_div(br)->is_zero());

  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = rnd_poly(rng, 3), b = rnd_poly(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    auto q = (a * b).exact_div(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("gcd via primitive remainder sequences") {
  auto a11 = var(1, 1), a12 = var(1, 2), a21 = var(2, 1), a22 = var(2, 2);
  auto p = a11 * a22 - a12 * a21;
  auto q = a11 + a22;
  auto r = a12 * a12 + a21;
  // gcd(P*Q, P*R) = P up to normalization; P is monic here.
  CHECK(gcd(p * q, p * r) == p.monic());
  CHECK(gcd(SparsePoly<Rat>(), p * q) == (p * q).monic());
  CHECK(gcd(p, SparsePoly<Rat>()) == p.monic());
  // Coprime inputs.
  CHECK(gcd(q, r).is_constant());
}

TEST_CASE("perfect squares, characteristic 0") {
  auto a11 = var(1, 1), a12 = var(1, 2), a21 = var(2, 1);
  auto s = a11 * a11 + a12 * a21 - a11.scaled(Rat(3));
  CHECK(is_perfect_square(s * s));
  auto rt = poly_sqrt(s * s);
  REQUIRE(rt.has_value());
  CHECK(*rt * *rt == s * s);
  CHECK(!is_perfect_square(s * s * a11));
  CHECK(!is_perfect_square(s * s + a12));
  CHECK(is_perfect_square(SparsePoly<Rat>::constant(Rat(9, 4))));
  CHECK(!is_perfect_square(SparsePoly<Rat>::constant(Rat(-9, 4))));
}

TEST_CASE("perfect squares, characteristic 2") {
  const Gf2Ctx* ctx = gf2_context(10);
  GF2m one(1, ctx), g(517, ctx);
  auto x = SparsePoly<GF2m>::variable(0, one);
  auto y = SparsePoly<GF2m>::variable(3, one);
  auto s = x * y.scaled(g) + SparsePoly<GF2m>::constant(g * g);
  CHECK(is_perfect_square(s * s));
  auto rt = poly_sqrt(s * s);
  REQUIRE(rt.has_value());
  CHECK(*rt * *rt == s * s);
  CHECK(!is_perfect_square(s * s * x));
}

TEST_CASE("rational functions reduce to canonical form") {
  auto a11 = var(1, 1), a12 = var(1, 2), a21 = var(2, 1);
  RatFunc<Rat> f(a11 * a11 - a12 * a12, (a11 + a12).scaled(Rat(2)));
  // (a11^2 - a12^2) / (2*(a11+a12)) = (a11 - a12)/2
  CHECK(f.num() == (a11 - a12).scaled(Rat(1, 2)));
  CHECK(f.den_is_one());

  RatFunc<Rat> g(a21, a11 * a12);
  CHECK((g - g).is_zero());
  CHECK(g * g.inverse() == RatFunc<Rat>(Rat(1)));
}

TEST_CASE("ord_at counts exact bracket multiplicity") {
  auto a11 = var(1, 1), a12 = var(1, 2), a21 = var(2, 1), a22 = var(2, 2);
  auto br = a11 * a22 - a12 * a21;
  auto g = a11 + a22;  // not divisible by br

  RatFunc<Rat> f(br * br * br * g, br);
  CHECK(ord_at(br, f) == 2);
  CHECK(ord_at(br, RatFunc<Rat>(Rat(1))) == 0);
  CHECK(ord_at(br, RatFunc<Rat>(SparsePoly<Rat>::constant(Rat(1)), br)) == -1);

  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    auto u = rnd_poly(rng, 3), v = rnd_poly(rng, 3);
    if (u.is_zero() || v.is_zero()) continue;
    RatFunc<Rat> x(u * br, v);
    RatFunc<Rat> y(v, u * br * br);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(ord_at(br, x * y) == ord_at(br, x) + ord_at(br, y));
  }
}

TEST_CASE("square classes of rational functions") {
  auto a11 = var(1, 1), a12 = var(1, 2), a13 = var(1, 3);
  auto a21 = var(2, 1), a22 = var(2, 2);
  auto br = a11 * a22 - a12 * a21;

  RatFunc<Rat> base(a11 + a12, a13);
  auto sq = base * base * RatFunc<Rat>(Rat(5));
  auto res = is_square_mod_scalars(sq);
  CHECK(res.is_square);
  CHECK(same_square_class(*res.lambda, Rat(5)));
  CHECK(!same_square_class(*res.lambda, Rat(3)));

  auto res2 = is_square_mod_scalars(RatFunc<Rat>(br));
  CHECK(!res2.is_square);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    auto u = rnd_poly(rng, 3);
    if (u.is_zero()) continue;
    RatFunc<Rat> f(u, a13);
    auto r1 = is_square_mod_scalars(f * f * RatFunc<Rat>(Rat(-7)));
    CHECK(r1.is_square);
    CHECK(same_square_class(*r1.lambda, Rat(-7)));
    auto r2 = is_square_mod_scalars(f * f * RatFunc<Rat>(br));
    CHECK(!r2.is_square);
  }
}

TEST_CASE("eval_hom is the induced homomorphism") {
  auto a11 = var(1, 1), a12 = var(1, 2);
  VarAssignment<Rat> id = VarAssignment<Rat>::identity(vt, Rat(1));
  RatFunc<Rat> f(a11 * a11 + a12, a11);
  CHECK(eval_hom(f, id) == f);

  // a_{1,1} -> 0 makes the denominator vanish.
  VarAssignment<Rat> kill = id;
  kill.set(VarId{1, 1}, RatFunc<Rat>());
  CHECK_THROWS_AS((void)eval_hom(f, kill), Error);

  VarAssignment<Rat> swap = id;
  swap.set(VarId{1, 1}, RatFunc<Rat>(a12));
  swap.set(VarId{1, 2}, RatFunc<Rat>(a11));
  RatFunc<Rat> g = eval_hom(f, swap);
  CHECK(g == RatFunc<Rat>(a12 * a12 + a11, a12));
}

TEST_CASE("canonical text round-trip") {
  auto a11 = var(1, 1), a12 = var(1, 2), a21 = var(2, 1), a22 = var(2, 2);
  auto p = (a11 * a22 - a12 * a21).scaled(Rat(3, 2)) + a11 * a11 -
           SparsePoly<Rat>::constant(Rat(7));
  std::string s = to_string(p, vt);
  auto back = parse_poly<Rat>(s, vt, Rat(1));
  REQUIRE(back.has_value());
  CHECK(*back == p);
  CHECK(to_string(*back, vt) == s);

  CHECK(to_string(SparsePoly<Rat>(), vt) == "0");
  CHECK(parse_poly<Rat>("0", vt, Rat(1))->is_zero());

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    auto q = rnd_poly(rng, 5);
    auto rt = parse_poly<Rat>(to_string(q, vt), vt, Rat(1));
    REQUIRE(rt.has_value());
    CHECK(*rt == q);
  }
}

TEST_CASE("fraction-free determinants of rational matrices") {
  auto a11 = var(1, 1), a12 = var(1, 2), a21 = var(2, 1), a22 = var(2, 2);
  RatFunc<Rat> one{Rat(1)};

  // identity
  Matrix<RatFunc<Rat>> id(3, std::vector<RatFunc<Rat>>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = one;
  CHECK(det(id) == one);

  // 1x1
  RatFunc<Rat> v(a11 + a12, a21);
  CHECK(det(Matrix<RatFunc<Rat>>{{v}}) == v);

  // 2x2 against the cofactor formula
  RatFunc<Rat> a(a11, a21), b(a12, a22), c(a21 * a22), d(a11 + a22, a12);
  Matrix<RatFunc<Rat>> m{{a, b}, {c, d}};
  CHECK(det(m) == a * d - b * c);

  // row swap flips the sign
  Matrix<RatFunc<Rat>> sw{{c, d}, {a, b}};
  CHECK(det(sw) == -(a * d - b * c));

  // singular
  Matrix<RatFunc<Rat>> sing{{a, a}, {c, c}};
  CHECK(det(sing).is_zero());

  CHECK_THROWS_AS((void)det(Matrix<RatFunc<Rat>>{}), Error);
  CHECK_THROWS_AS((void)det(Matrix<RatFunc<Rat>>{{a, b}}), Error);
}
