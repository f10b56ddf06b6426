#pragma once

// Monomials in the coefficient variables a_{i,j}, 1 <= i <= d, 0 <= j <= n.
// Column j = 0 is the auxiliary variable ring used by the facet-sum degree
// formula; those variables must cancel from any finished degree value.
//
// Term order: graded lexicographic. Variables are prioritized by (i, j)
// lexicographically, smaller pairs first, so a_{1,0} is the most significant
// variable.

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <string>

#include "hrdet/error.hpp"

namespace hrdet {

struct VarId {
  uint8_t i;  // row, 1..d
  uint8_t j;  // column, 0..n
  friend bool operator==(VarId a, VarId b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(VarId a, VarId b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
  std::string str() const {
    return "a_" + std::to_string(i) + "_" + std::to_string(j);
  }
};

inline constexpr int kMaxVars = 48;

// Maps VarId <-> dense indices 0..d*(n+1)-1 for a fixed problem size.
class VarTable {
 public:
  VarTable() = default;
  VarTable(int d, int n) : d_(d), n_(n) {
    HRDET_CHECK(d >= 1 && n >= 1 && d * (n + 1) <= kMaxVars,
                ErrorKind::InvalidInput,
                "variable budget exceeded: need d*(n+1) <= " +
                    std::to_string(kMaxVars));
  }
  int d() const { return d_; }
  int n() const { return n_; }
  int count() const { return d_ * (n_ + 1); }
  int index(VarId v) const {
    HRDET_ASSERT(v.i >= 1 && v.i <= d_ && v.j <= n_, "VarId out of range");
    return (v.i - 1) * (n_ + 1) + v.j;
  }
  VarId var(int idx) const {
    HRDET_ASSERT(idx >= 0 && idx < count(), "var index out of range");
    return VarId{static_cast<uint8_t>(idx / (n_ + 1) + 1),
                 static_cast<uint8_t>(idx % (n_ + 1))};
  }
  // Dense indices of the auxiliary column j = 0.
  bool is_extended(int idx) const { return idx % (n_ + 1) == 0; }

 private:
  int d_ = 0;
  int n_ = 0;
};

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int idx, uint8_t exp = 1) {
    Monomial m;
    m.e[idx] = exp;
    m.deg = exp;
    return m;
  }

  bool is_one() const { return deg == 0; }
  int degree() const { return deg; }

  uint64_t var_mask() const {
    uint64_t mask = 0;
    for (int v = 0; v < kMaxVars; ++v)
      if (e[v]) mask |= (1ull << v);
    return mask;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) {
      unsigned s = unsigned(e[v]) + o.e[v];
      HRDET_CHECK(s <= 255, ErrorKind::BudgetExceeded, "exponent overflow");
      r.e[v] = static_cast<uint8_t>(s);
    }
    r.deg = static_cast<uint16_t>(deg + o.deg);
    return r;
  }

  bool divisible_by(const Monomial& o) const {
    if (deg < o.deg) return false;
    for (int v = 0; v < kMaxVars; ++v)
      if (e[v] < o.e[v]) return false;
    return true;
  }

  std::optional<Monomial> operator/(const Monomial& o) const {
    if (!divisible_by(o)) return std::nullopt;
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) r.e[v] = static_cast<uint8_t>(e[v] - o.e[v]);
    r.deg = static_cast<uint16_t>(deg - o.deg);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && std::memcmp(a.e.data(), b.e.data(), kMaxVars) == 0;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Graded lex: higher total degree wins; ties broken by the most significant
// differing variable, larger exponent first.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  int c = std::memcmp(b.e.data(), a.e.data(), kMaxVars);
  // memcmp compares byte-lexicographically; b-vs-a flips to "larger exponent
  // on the earlier variable sorts higher".
  return c < 0 ? 1 : (c > 0 ? -1 : 0);
}

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_cmp(a, b) > 0;
  }
};

struct MonoHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ull;
    const uint64_t* p = reinterpret_cast<const uint64_t*>(m.e.data());
    for (int i = 0; i < kMaxVars / 8; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace hrdet
