#include <map>
#include <mutex>

#include "hrdet/field.hpp"

namespace hrdet {

namespace {

unsigned gf2poly_degree(uint64_t mask) {
  unsigned d = 0;
  while (mask >>= 1) ++d;
  return d;
}

uint64_t gf2poly_mod(uint64_t a, uint64_t mod) {
  unsigned dm = gf2poly_degree(mod);
  while (a >> dm) {
    unsigned da = gf2poly_degree(a);
    a ^= mod << (da - dm);
  }
  return a;
}

uint64_t gf2poly_gcd(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t r = a;
    unsigned db = gf2poly_degree(b);
    while (r && gf2poly_degree(r) >= db) r ^= b << (gf2poly_degree(r) - db);
    a = b;
    b = r;
  }
  return a;
}

// x^(2^n) mod f, by repeated squaring of the Frobenius.
uint64_t gf2poly_x_pow_pow2(unsigned n, uint64_t mod) {
  uint64_t x = gf2poly_mod(2, mod);
  for (unsigned i = 0; i < n; ++i) x = gf2poly_mulmod(x, x, mod);
  return x;
}

}  // namespace

uint64_t gf2poly_mulmod(uint64_t a, uint64_t b, uint64_t mod) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1ull << gf2poly_degree(mod))) a ^= mod;
  }
  return r;
}

// f of degree e is irreducible over F_2 iff x^(2^e) = x (mod f) and
// gcd(x^(2^(e/q)) - x, f) = 1 for every prime q dividing e.
bool gf2poly_is_irreducible(uint64_t mask) {
  unsigned e = gf2poly_degree(mask);
  if (e == 0) return false;
  if (gf2poly_x_pow_pow2(e, mask) != gf2poly_mod(2, mask)) return false;
  for (unsigned q = 2; q <= e; ++q) {
    if (e % q != 0) continue;
    bool prime = true;
    for (unsigned t = 2; t * t <= q; ++t)
      if (q % t == 0) { prime = false; break; }
    if (!prime) continue;
    uint64_t h = gf2poly_x_pow_pow2(e / q, mask) ^ gf2poly_mod(2, mask);
    if (gf2poly_gcd(mask | 0ull, h) != 1) return false;
  }
  return true;
}

const Gf2Ctx* gf2_context(unsigned e) {
  // Coefficient fields stay desk-scale (e <= 24); larger degrees only back
  // the internal evaluation fields for randomized certificates.
  HRDET_CHECK(e >= 1 && e <= 40, ErrorKind::InvalidInput,
              "GF(2^e) supported for 1 <= e <= 40");
  static std::mutex mu;
  static std::map<unsigned, Gf2Ctx> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(e);
  if (it != table.end()) return &it->second;

  uint64_t mod = 0;
  if (e == 10) {
    mod = (1ull << 10) | (1ull << 3) | 1ull;  // t^10 + t^3 + 1
  } else {
    for (uint64_t low = 1;; low += 2) {
      uint64_t cand = (1ull << e) | low;
      if (gf2poly_is_irreducible(cand)) { mod = cand; break; }
    }
  }
  HRDET_ASSERT(gf2poly_is_irreducible(mod), "GF(2^e) modulus not irreducible");
  auto [pos, ok] = table.emplace(e, Gf2Ctx{e, mod});
  (void)ok;
  return &pos->second;
}

std::optional<FieldSpec> FieldSpec::parse(const std::string& s) {
  if (s == "0") return FieldSpec{0, 1};
  auto caret = s.find('^');
  try {
    if (caret != std::string::npos) {
      unsigned long long base = std::stoull(s.substr(0, caret));
      unsigned long long e = std::stoull(s.substr(caret + 1));
      if (base != 2 || e < 1 || e > 24) return std::nullopt;
      return FieldSpec{2, static_cast<unsigned>(e)};
    }
    unsigned long long p = std::stoull(s);
    if (p < 2) return std::nullopt;
    for (unsigned long long t = 2; t * t <= p; ++t)
      if (p % t == 0) return std::nullopt;
    return FieldSpec{p, 1};
  } catch (...) {
    return std::nullopt;
  }
}

std::string FieldSpec::str() const {
  if (characteristic == 0) return "0";
  if (is_gf2ext()) return "2^" + std::to_string(ext_degree);
  return std::to_string(characteristic);
}

}  // namespace hrdet
