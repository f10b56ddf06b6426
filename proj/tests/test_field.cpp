#include <doctest.h>

#include "hrdet/field.hpp"

using namespace hrdet;

TEST_CASE("rational arithmetic and square detection") {
  Rat a(3, 4), b(-2, 5);
  CHECK(a + b == Rat(7, 20));
  CHECK(a * b == Rat(-3, 10));
  CHECK((a / b) == Rat(-15, 8));
  CHECK(Rat(9, 16).is_square());
  CHECK(*Rat(9, 16).sqrt() == Rat(3, 4));
  CHECK(!Rat(-9, 16).is_square());
  CHECK(!Rat(8).is_square());
  CHECK(Rat(0).is_square());
}

TEST_CASE("prime field arithmetic") {
  const uint64_t p = (1ull << 31) - 1;
  Fp a(123456789, p), b(987654321, p);
  CHECK((a * b) / b == a);
  CHECK((a - a).is_zero());
  CHECK(a.pow(p - 1).is_one());

  Fp sq = a * a;
  CHECK(sq.is_square());
  auto r = sq.sqrt();
  REQUIRE(r.has_value());
  CHECK(*r * *r == sq);

  // Non-residue count is (p-1)/2; -1 is not a square mod p = 3 (mod 4).
  Fp minus1 = -Fp(1, p);
  CHECK(!minus1.is_square());
}

TEST_CASE("Fp sqrt with p = 1 mod 4 (Tonelli-Shanks branch)") {
  const uint64_t p = 1000003;  // wait, 1000003 % 4 == 3; choose 1000033
  (void)p;
  const uint64_t q = 1000033;  // 1 mod 4, prime
  for (uint64_t v : {2ull, 5ull, 10ull, 999999ull}) {
    Fp x(v, q);
    Fp sq = x * x;
    auto r = sq.sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
  }
}

TEST_CASE("GF(2^10) uses the pinned modulus and behaves like a field") {
  const Gf2Ctx* ctx = gf2_context(10);
  CHECK(ctx->modulus == ((1ull << 10) | (1ull << 3) | 1ull));
  CHECK(gf2poly_is_irreducible(ctx->modulus));

  GF2m a(0x2b7, ctx), b(0x155, ctx);
  CHECK((a * b) / b == a);
  CHECK((a + a).is_zero());
  CHECK(a.pow((1ull << 10) - 1).is_one());

  // Frobenius square root.
  auto r = (a * a).sqrt();
  REQUIRE(r.has_value());
  CHECK(*r == a);
  CHECK(a.is_square());
}

TEST_CASE("GF(2^e) contexts for other degrees are irreducible") {
  for (unsigned e : {1u, 2u, 3u, 8u, 16u}) {
    const Gf2Ctx* ctx = gf2_context(e);
    CHECK(gf2poly_is_irreducible(ctx->modulus));
    GF2m x(1, ctx);
    CHECK(x.is_one());
  }
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("0")->characteristic == 0);
  CHECK(FieldSpec::parse("7")->characteristic == 7);
  CHECK(FieldSpec::parse("2^10")->ext_degree == 10);
  CHECK(!FieldSpec::parse("4").has_value());
  CHECK(!FieldSpec::parse("3^2").has_value());
  CHECK(!FieldSpec::parse("x").has_value());
  CHECK(FieldSpec::parse("2^10")->str() == "2^10");
}
