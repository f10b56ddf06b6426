#pragma once

// Exact coefficient fields: Q, F_p, and GF(2^e).
//
// Field elements carry their own context (the prime, or a pointer to the
// GF(2^e) modulus data), and a default-constructed element is a context-free
// zero that adopts the context of the other operand in binary operations.
// This keeps accumulation into value-initialized maps simple.

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "hrdet/error.hpp"

namespace hrdet {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

class Rat {
 public:
  Rat() = default;
  Rat(long long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rat(BigRat v) : v_(std::move(v)) {}
  Rat(long long num, long long den) : v_(BigRat(num, den)) {}

  static constexpr unsigned characteristic() { return 0; }
  static const char* field_name() { return "Q"; }

  Rat of_int(long long n) const { return Rat(n); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  Rat operator-() const { return Rat(BigRat(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    HRDET_CHECK(!o.is_zero(), ErrorKind::DivisionByZero, "division by zero in Q");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  Rat inverse() const {
    HRDET_CHECK(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero in Q");
    return Rat(BigRat(1) / v_);
  }

  // Exact: true iff the value is a square in Q.
  bool is_square() const {
    if (is_zero()) return true;
    if (v_ < 0) return false;
    BigInt n = boost::multiprecision::numerator(v_);
    BigInt d = boost::multiprecision::denominator(v_);
    return mpz_perfect_square_p(n.backend().data()) &&
           mpz_perfect_square_p(d.backend().data());
  }

  std::optional<Rat> sqrt() const {
    if (!is_square()) return std::nullopt;
    if (is_zero()) return Rat(0);
    BigInt n = boost::multiprecision::sqrt(BigInt(boost::multiprecision::numerator(v_)));
    BigInt d = boost::multiprecision::sqrt(BigInt(boost::multiprecision::denominator(v_)));
    return Rat(BigRat(n, d));
  }

  const BigRat& value() const { return v_; }

  std::string str() const { return v_.str(); }

  static std::optional<Rat> parse(const std::string& s) {
    try {
      return Rat(BigRat(s));
    } catch (...) {
      return std::nullopt;
    }
  }

 private:
  BigRat v_ = 0;
};

// ---------------------------------------------------------------------------
// F_p, p an odd prime or 2 (p < 2^62)
// ---------------------------------------------------------------------------

class Fp {
 public:
  Fp() = default;
  Fp(uint64_t v, uint64_t p) : p_(p), v_(p ? v % p : v) {}

  unsigned long long characteristic() const { return p_; }
  static const char* field_name() { return "Fp"; }

  uint64_t prime() const { return p_; }
  uint64_t value() const { return v_; }

  Fp of_int(long long n) const {
    HRDET_ASSERT(p_ != 0, "of_int on context-free Fp");
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return Fp(static_cast<uint64_t>(r), p_);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) {
    adopt(o);
    v_ += o.v_;
    if (v_ >= p_ && p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    adopt(o);
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    adopt(o);
    if (p_ == 0) { v_ = 0; return *this; }
    v_ = static_cast<uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  Fp pow(uint64_t e) const {
    Fp r(1, p_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Fp inverse() const {
    HRDET_CHECK(v_ != 0, ErrorKind::DivisionByZero, "inverse of zero in Fp");
    return pow(p_ - 2);
  }

  bool is_square() const {
    if (v_ == 0 || p_ == 2) return true;
    return pow((p_ - 1) / 2).is_one();
  }

  // Tonelli-Shanks.
  std::optional<Fp> sqrt() const {
    if (v_ == 0) return Fp(0, p_);
    if (p_ == 2) return *this;
    if (!is_square()) return std::nullopt;
    if (p_ % 4 == 3) return pow((p_ + 1) / 4);
    uint64_t q = p_ - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Fp z(2, p_);
    while (z.is_square()) z += Fp(1, p_);
    Fp m_pow(s, p_);
    uint64_t m = s;
    Fp c = z.pow(q);
    Fp t = pow(q);
    Fp r = pow((q + 1) / 2);
    while (!t.is_one()) {
      uint64_t i = 0;
      Fp t2 = t;
      while (!t2.is_one()) { t2 *= t2; ++i; }
      Fp b = c;
      for (uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
      m = i;
      c = b * b;
      t *= c;
      r *= b;
    }
    return r;
  }

  std::string str() const { return std::to_string(v_); }

 private:
  void adopt(const Fp& o) {
    if (p_ == 0) p_ = o.p_;
    HRDET_CHECK(o.p_ == 0 || o.p_ == p_, ErrorKind::FieldMismatch,
                "mixed Fp characteristics");
  }

  uint64_t p_ = 0;
  uint64_t v_ = 0;
};

// ---------------------------------------------------------------------------
// GF(2^e), polynomial basis over F_2
// ---------------------------------------------------------------------------

// Immutable per-degree context. Contexts are interned process-wide, so raw
// pointers stay valid for the lifetime of the program.
struct Gf2Ctx {
  unsigned e;         // extension degree
  uint64_t modulus;   // bitmask of the irreducible polynomial, degree e
};

// Returns the interned context for GF(2^e). e = 10 is pinned to t^10 + t^3 + 1;
// other degrees use the lexicographically smallest irreducible polynomial.
const Gf2Ctx* gf2_context(unsigned e);

// Exposed for tests: F_2[t] helpers on bitmasks.
uint64_t gf2poly_mulmod(uint64_t a, uint64_t b, uint64_t mod);
bool gf2poly_is_irreducible(uint64_t mask);

class GF2m {
 public:
  GF2m() = default;
  GF2m(uint64_t v, const Gf2Ctx* ctx) : ctx_(ctx), v_(v) {}

  static constexpr unsigned characteristic() { return 2; }
  static const char* field_name() { return "GF2m"; }

  const Gf2Ctx* ctx() const { return ctx_; }
  uint64_t value() const { return v_; }

  GF2m of_int(long long n) const {
    return GF2m((n % 2 + 2) % 2 ? 1 : 0, ctx_);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  GF2m operator-() const { return *this; }
  GF2m& operator+=(const GF2m& o) { adopt(o); v_ ^= o.v_; return *this; }
  GF2m& operator-=(const GF2m& o) { return *this += o; }
  GF2m& operator*=(const GF2m& o) {
    adopt(o);
    if (ctx_ == nullptr) { v_ = 0; return *this; }
    v_ = gf2poly_mulmod(v_, o.v_, ctx_->modulus);
    return *this;
  }
  GF2m& operator/=(const GF2m& o) { return *this *= o.inverse(); }
  friend GF2m operator+(GF2m a, const GF2m& b) { return a += b; }
  friend GF2m operator-(GF2m a, const GF2m& b) { return a -= b; }
  friend GF2m operator*(GF2m a, const GF2m& b) { return a *= b; }
  friend GF2m operator/(GF2m a, const GF2m& b) { return a /= b; }
  friend bool operator==(const GF2m& a, const GF2m& b) { return a.v_ == b.v_; }
  friend bool operator!=(const GF2m& a, const GF2m& b) { return a.v_ != b.v_; }

  GF2m pow(uint64_t n) const {
    GF2m r(1, ctx_), b = *this;
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  GF2m inverse() const {
    HRDET_CHECK(v_ != 0, ErrorKind::DivisionByZero, "inverse of zero in GF(2^e)");
    // v^(2^e - 2)
    uint64_t order = (ctx_->e >= 64) ? ~0ull : ((1ull << ctx_->e) - 1);
    return pow(order - 1);
  }

  // Frobenius is bijective in characteristic 2: everything is a square.
  bool is_square() const { return true; }
  std::optional<GF2m> sqrt() const {
    if (ctx_ == nullptr || v_ == 0) return *this;
    GF2m r = *this;
    for (unsigned i = 0; i + 1 < ctx_->e; ++i) r *= r;
    return r;
  }

  std::string str() const { return std::to_string(v_); }

 private:
  void adopt(const GF2m& o) {
    if (ctx_ == nullptr) ctx_ = o.ctx_;
    HRDET_CHECK(o.ctx_ == nullptr || o.ctx_ == ctx_, ErrorKind::FieldMismatch,
                "mixed GF(2^e) contexts");
  }

  const Gf2Ctx* ctx_ = nullptr;
  uint64_t v_ = 0;
};

// ---------------------------------------------------------------------------
// Runtime field selector (CLI --char {0, p, 2^e})
// ---------------------------------------------------------------------------

struct FieldSpec {
  unsigned long long characteristic = 0;  // 0, 2, or odd prime
  unsigned ext_degree = 1;                // e for GF(2^e), else 1

  bool is_rational() const { return characteristic == 0; }
  bool is_gf2ext() const { return characteristic == 2 && ext_degree > 1; }

  static std::optional<FieldSpec> parse(const std::string& s);
  std::string str() const;
};

// Uniform random nonzero draws, used by Schwartz-Zippel stages.
inline Fp random_fp(std::mt19937_64& rng, uint64_t p) {
  std::uniform_int_distribution<uint64_t> d(1, p - 1);
  return Fp(d(rng), p);
}
inline GF2m random_gf2m(std::mt19937_64& rng, const Gf2Ctx* ctx) {
  uint64_t bound = (1ull << ctx->e) - 1;
  std::uniform_int_distribution<uint64_t> d(1, bound);
  return GF2m(d(rng), ctx);
}

}  // namespace hrdet
