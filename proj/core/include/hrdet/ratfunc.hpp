#pragma once

// Reduced rational functions num/den over K[a_{i,j}]: gcd(num, den) = 1 and
// den monic under the term order, so representatives are canonical.

#include <optional>
#include <unordered_map>

#include "hrdet/poly.hpp"
#include "hrdet/poly_io.hpp"

namespace hrdet {

template <class K>
class RatFunc {
 public:
  // Zero. The denominator of a zero value is kept as an empty sentinel so a
  // context-free default is possible; den() reports it as 1.
  RatFunc() = default;

  explicit RatFunc(SparsePoly<K> num) : num_(std::move(num)) {}
  explicit RatFunc(K scalar) : num_(SparsePoly<K>(std::move(scalar))) {}

  RatFunc(SparsePoly<K> num, SparsePoly<K> den) {
    HRDET_CHECK(!den.is_zero(), ErrorKind::DivisionByZero,
                "rational function with zero denominator");
    num_ = std::move(num);
    den_ = std::move(den);
    reduce();
  }

  // Trusted constructor for callers that already hold a coprime pair with a
  // monic denominator (e.g. values reduced against factored denominators).
  static RatFunc from_reduced(SparsePoly<K> num, SparsePoly<K> den) {
    HRDET_ASSERT(!den.is_zero() && den.leading_coeff().is_one(),
                 "from_reduced needs a monic denominator");
    RatFunc f;
    f.num_ = std::move(num);
    if (!f.num_.is_zero() && !den.is_constant()) f.den_ = std::move(den);
    return f;
  }

  bool is_zero() const { return num_.is_zero(); }
  const SparsePoly<K>& num() const { return num_; }
  SparsePoly<K> den() const {
    if (den_.is_zero()) {
      if (num_.is_zero()) return SparsePoly<K>();  // zero value: den is 1, contextless
      return SparsePoly<K>::constant(num_.leading_coeff().of_int(1));
    }
    return den_;
  }
  bool den_is_one() const {
    return den_.is_zero() || (den_.is_constant() && den_.leading_coeff().is_one());
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.num_ == b.num_ && a.den() == b.den();
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den() + b.num_ * a.den(), a.den() * b.den());
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den() * b.den());
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    HRDET_CHECK(!b.is_zero(), ErrorKind::DivisionByZero, "division by zero RatFunc");
    if (a.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.den(), a.den() * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    HRDET_CHECK(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero RatFunc");
    return RatFunc(den(), num_);
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = SparsePoly<K>();
      return;
    }
    SparsePoly<K> g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.exact_div(g);
      den_ = *den_.exact_div(g);
    }
    K lc = den_.leading_coeff();
    if (!lc.is_one()) {
      K inv = lc.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  SparsePoly<K> num_;
  SparsePoly<K> den_;
};

// Order of vanishing of f at the irreducible polynomial p, via repeated exact
// division of numerator and denominator.
template <class K>
int ord_at(const SparsePoly<K>& p, const RatFunc<K>& f) {
  HRDET_CHECK(!f.is_zero(), ErrorKind::InvalidInput, "ord of zero");
  HRDET_CHECK(!p.is_constant(), ErrorKind::InvalidInput, "ord at a constant");
  auto count = [&p](SparsePoly<K> g) {
    int n = 0;
    while (true) {
      auto q = g.exact_div(p);
      if (!q) return n;
      g = std::move(*q);
      ++n;
    }
  };
  return count(f.num()) - count(f.den());
}

// Decides f = lambda * s^2 with lambda in k^x, s in K^x. Equivalent test:
// num*den made monic is a perfect square polynomial; lambda is the leading
// coefficient of num*den (den is monic, so that of num).
template <class K>
struct SquareClassResult {
  bool is_square;
  std::optional<K> lambda;  // witness scalar class representative
};

template <class K>
SquareClassResult<K> is_square_mod_scalars(const RatFunc<K>& f) {
  HRDET_CHECK(!f.is_zero(), ErrorKind::InvalidInput,
              "square class of zero is undefined");
  SparsePoly<K> g = f.num() * f.den();
  K lambda = g.leading_coeff();
  if (!is_perfect_square(g.monic())) return {false, std::nullopt};
  return {true, lambda};
}

// True iff a/b is a square in k^x (i.e. a and b are in the same square class).
inline bool same_square_class(const Rat& a, const Rat& b) {
  return (a / b).is_square();
}
inline bool same_square_class(const Fp& a, const Fp& b) {
  return (a / b).is_square();
}
inline bool same_square_class(const GF2m& a, const GF2m& b) {
  return !a.is_zero() && !b.is_zero();
}

// ---------------------------------------------------------------------------
// Induced homomorphisms: substitute each variable by a rational function.
// ---------------------------------------------------------------------------

template <class K>
class VarAssignment {
 public:
  VarAssignment(const VarTable& vt, RatFunc<K> default_value)
      : vt_(vt), values_(vt.count(), std::move(default_value)) {}

  // Identity assignment a_{i,j} -> a_{i,j}.
  static VarAssignment identity(const VarTable& vt, const K& one) {
    VarAssignment a(vt, RatFunc<K>());
    for (int v = 0; v < vt.count(); ++v)
      a.values_[v] = RatFunc<K>(SparsePoly<K>::variable(v, one));
    return a;
  }

  void set(VarId id, RatFunc<K> value) { values_[vt_.index(id)] = std::move(value); }
  const RatFunc<K>& get(int idx) const { return values_[idx]; }
  const VarTable& table() const { return vt_; }

 private:
  VarTable vt_;
  std::vector<RatFunc<K>> values_;
};

template <class K>
RatFunc<K> eval_hom(const SparsePoly<K>& f, const VarAssignment<K>& a) {
  RatFunc<K> acc;
  for (const auto& t : f.terms()) {
    RatFunc<K> val{SparsePoly<K>::constant(t.c)};
    for (int v = 0; v < kMaxVars; ++v)
      for (int k = 0; k < t.m.e[v]; ++k) val *= a.get(v);
    acc += val;
  }
  return acc;
}

// Fails with DenominatorVanishes when f is outside the domain of the induced
// homomorphism (the evaluated denominator is zero).
template <class K>
RatFunc<K> eval_hom(const RatFunc<K>& f, const VarAssignment<K>& a) {
  if (f.is_zero()) return RatFunc<K>();
  RatFunc<K> den = eval_hom(f.den(), a);
  HRDET_CHECK(!den.is_zero(), ErrorKind::DenominatorVanishes,
              "evaluated denominator vanishes");
  return eval_hom(f.num(), a) / den;
}

template <class K>
std::string to_string(const RatFunc<K>& f, const VarTable& vt) {
  if (f.is_zero()) return "0";
  if (f.den_is_one()) return to_string(f.num(), vt);
  return "(" + to_string(f.num(), vt) + ") / (" + to_string(f.den(), vt) + ")";
}

}  // namespace hrdet
