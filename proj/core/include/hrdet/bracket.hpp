#pragma once

// Brackets [F] (generic d x d coefficient determinants), their punctured
// specializations, and rational values kept with factored denominators.
//
// Every denominator that appears in a degree computation is a product of
// known irreducible polynomials of bracket type, so values are stored as
//     num * prod(factor_i ^ -e_i)
// with the factors interned in a per-engine table. Reduction never needs a
// gcd: it is repeated exact division by the listed factors.

#include <map>
#include <sstream>
#include <unordered_map>

#include "hrdet/poly.hpp"
#include "hrdet/ratfunc.hpp"
#include "hrdet/simplicial.hpp"
#include "hrdet/topology.hpp"

namespace hrdet {

// An extended column subset: vertex bitmask plus the optional auxiliary
// column 0.
struct ColSet {
  Face verts = 0;
  bool has_zero = false;
  int size() const { return face_size(verts) + (has_zero ? 1 : 0); }
  friend bool operator==(const ColSet& a, const ColSet& b) {
    return a.verts == b.verts && a.has_zero == b.has_zero;
  }
  friend bool operator<(const ColSet& a, const ColSet& b) {
    return a.has_zero != b.has_zero ? a.has_zero < b.has_zero : a.verts < b.verts;
  }
  std::vector<int> columns() const {  // 0 for the auxiliary column
    std::vector<int> cols;
    if (has_zero) cols.push_back(0);
    for (int v : face_vertices(verts)) cols.push_back(v);
    return cols;
  }
  std::string str() const {
    std::string s = has_zero ? "{0" : "{";
    for (int v : face_vertices(verts)) s += "," + std::to_string(v);
    if (!has_zero && s.size() > 1) s[1] = ' ';
    return s + "}";
  }
};

template <class K>
class FactorTable {
 public:
  struct Factor {
    SparsePoly<K> poly;  // monic
    bool irreducible;
    std::string tag;
  };

  // Interns a monic polynomial; returns a stable id.
  int intern(SparsePoly<K> poly, bool irreducible, std::string tag) {
    HRDET_ASSERT(!poly.is_zero() && !poly.is_constant(), "interning a unit");
    HRDET_ASSERT(poly.leading_coeff().is_one(), "interned factor must be monic");
    auto key = poly_key(poly);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(factors_.size());
    factors_.push_back({std::move(poly), irreducible, std::move(tag)});
    index_.emplace(std::move(key), id);
    return id;
  }

  const Factor& at(int id) const { return factors_.at(id); }
  size_t size() const { return factors_.size(); }

 private:
  static std::string poly_key(const SparsePoly<K>& p) {
    std::ostringstream os;
    for (const auto& t : p.terms()) {
      os.write(reinterpret_cast<const char*>(t.m.e.data()), kMaxVars);
      os << '|' << t.c.str() << ';';
    }
    return os.str();
  }

  std::vector<Factor> factors_;
  std::unordered_map<std::string, int> index_;
};

// Sorted (factor id, exponent) lists; exponents are nonzero.
using FactorPowers = std::vector<std::pair<int, int>>;

inline FactorPowers merge_powers(const FactorPowers& a, const FactorPowers& b,
                                 int bsign = 1) {
  FactorPowers out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, bsign * b[j].second);
      ++j;
    } else {
      int e = a[i].second + bsign * b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

// A scalar multiple of a product of factor powers (exponents any sign), or 0.
template <class K>
struct FactorProduct {
  K unit{};  // zero unit encodes the zero value
  FactorPowers powers;

  bool is_zero() const { return unit.is_zero(); }

  FactorProduct inverse() const {
    HRDET_ASSERT(!is_zero(), "inverse of zero factor product");
    FactorProduct r;
    r.unit = unit.inverse();
    r.powers = powers;
    for (auto& [id, e] : r.powers) e = -e;
    return r;
  }

  friend FactorProduct operator*(const FactorProduct& a, const FactorProduct& b) {
    if (a.is_zero() || b.is_zero()) return FactorProduct{};
    return FactorProduct{a.unit * b.unit, merge_powers(a.powers, b.powers)};
  }

  FactorProduct pow(int e) const {
    HRDET_ASSERT(!is_zero() || e > 0, "zero to a nonpositive power");
    if (is_zero()) return *this;
    FactorProduct r;
    K u = unit.of_int(1);
    int ae = e < 0 ? -e : e;
    for (int t = 0; t < ae; ++t) u *= unit;
    r.unit = e < 0 ? u.inverse() : u;
    r.powers = powers;
    for (auto& [id, x] : r.powers) x *= e;
    std::erase_if(r.powers, [](auto& p) { return p.second == 0; });
    return r;
  }
};

// ---------------------------------------------------------------------------
// Factored rational values
// ---------------------------------------------------------------------------

template <class K>
class Factored {
 public:
  Factored() = default;
  Factored(FactorTable<K>* table, SparsePoly<K> num, FactorPowers den = {})
      : table_(table), num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  static Factored from_product(FactorTable<K>* table, const FactorProduct<K>& p) {
    if (p.is_zero()) return Factored(table, SparsePoly<K>());
    SparsePoly<K> num = SparsePoly<K>::constant(p.unit);
    FactorPowers den;
    for (auto [id, e] : p.powers) {
      if (e > 0) {
        for (int t = 0; t < e; ++t) num = num * table->at(id).poly;
      } else {
        den.emplace_back(id, -e);
      }
    }
    return Factored(table, std::move(num), std::move(den));
  }

  bool is_zero() const { return num_.is_zero(); }
  const SparsePoly<K>& num() const { return num_; }
  const FactorPowers& den() const { return den_; }
  FactorTable<K>* table() const { return table_; }

  SparsePoly<K> den_poly() const {
    HRDET_ASSERT(table_ != nullptr || den_.empty(), "detached factored value");
    SparsePoly<K> d = SparsePoly<K>::constant(num_.is_zero() ? K{} : num_.leading_coeff().of_int(1));
    if (den_.empty()) return d;
    if (num_.is_zero()) return d;
    for (auto [id, e] : den_)
      for (int t = 0; t < e; ++t) d = d * table_->at(id).poly;
    return d;
  }

  // Expanded canonical num/den view. Denominator factors are irreducible and
  // coprime to num by the reduction invariant, so no gcd pass is needed.
  RatFunc<K> to_ratfunc() const {
    if (is_zero()) return RatFunc<K>();
    for (auto [id, e] : den_)
      HRDET_ASSERT(table_->at(id).irreducible,
                   "expanding a value with unverified factor structure");
    return RatFunc<K>::from_reduced(num_, den_poly());
  }

  friend bool operator==(const Factored& a, const Factored& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Factored& a, const Factored& b) { return !(a == b); }

  Factored operator-() const {
    Factored r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Factored operator+(const Factored& a, const Factored& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    HRDET_ASSERT(a.table_ == b.table_, "mixing factor tables");
    // Common denominator: exponentwise max.
    SparsePoly<K> na = a.num_, nb = b.num_;
    FactorPowers common;
    size_t i = 0, j = 0;
    auto bump = [&](SparsePoly<K>& n, int id, int times) {
      const SparsePoly<K>& f = a.table_->at(id).poly;
      for (int t = 0; t < times; ++t) n = n * f;
    };
    while (i < a.den_.size() || j < b.den_.size()) {
      if (j == b.den_.size() ||
          (i < a.den_.size() && a.den_[i].first < b.den_[j].first)) {
        common.push_back(a.den_[i]);
        bump(nb, a.den_[i].first, a.den_[i].second);
        ++i;
      } else if (i == a.den_.size() || b.den_[j].first < a.den_[i].first) {
        common.push_back(b.den_[j]);
        bump(na, b.den_[j].first, b.den_[j].second);
        ++j;
      } else {
        int e = std::max(a.den_[i].second, b.den_[j].second);
        common.emplace_back(a.den_[i].first, e);
        bump(na, a.den_[i].first, e - a.den_[i].second);
        bump(nb, b.den_[j].first, e - b.den_[j].second);
        ++i;
        ++j;
      }
    }
    return Factored(a.table_, na + nb, std::move(common));
  }
  friend Factored operator-(const Factored& a, const Factored& b) { return a + (-b); }
  Factored& operator+=(const Factored& o) { return *this = *this + o; }
  Factored& operator-=(const Factored& o) { return *this = *this - o; }

  friend Factored operator*(const Factored& a, const Factored& b) {
    if (a.is_zero() || b.is_zero())
      return Factored(a.table_ ? a.table_ : b.table_, SparsePoly<K>());
    HRDET_ASSERT(a.table_ == b.table_, "mixing factor tables");
    return Factored(a.table_, a.num_ * b.num_, merge_powers(a.den_, b.den_));
  }
  Factored& operator*=(const Factored& o) { return *this = *this * o; }

  Factored times_product(const FactorProduct<K>& p) const {
    if (p.is_zero() || is_zero()) return Factored(table_, SparsePoly<K>());
    SparsePoly<K> n = num_.scaled(p.unit);
    FactorPowers extra_den;
    for (auto [id, e] : p.powers) {
      if (e > 0) {
        for (int t = 0; t < e; ++t) n = n * table_->at(id).poly;
      } else {
        extra_den.emplace_back(id, -e);
      }
    }
    return Factored(table_, std::move(n), merge_powers(den_, extra_den));
  }

  Factored scaled(const K& c) const {
    return Factored(table_, num_.scaled(c), den_);
  }

  // ord at an interned factor: denominator exponent is direct, numerator by
  // repeated exact division (reduction keeps num coprime to den factors).
  int ord_at_factor(int id) const {
    HRDET_CHECK(!is_zero(), ErrorKind::InvalidInput, "ord of zero");
    for (auto [fid, e] : den_)
      if (fid == id) return -e;
    const SparsePoly<K>& f = table_->at(id).poly;
    int n = 0;
    SparsePoly<K> g = num_;
    while (true) {
      auto q = g.exact_div(f);
      if (!q) return n;
      g = std::move(*q);
      ++n;
    }
  }

  uint64_t var_mask() const {
    uint64_t m = num_.var_mask();
    for (auto [id, e] : den_) m |= table_->at(id).poly.var_mask();
    return m;
  }

  // Evaluate at a numeric point; nullopt when a denominator factor vanishes.
  template <class E, class Conv>
  std::optional<E> eval(const std::vector<E>& point, Conv conv) const {
    E val = num_.eval(point, conv);
    for (auto [id, e] : den_) {
      E fv = table_->at(id).poly.eval(point, conv);
      if (fv.is_zero()) return std::nullopt;
      E inv = fv.inverse();
      for (int t = 0; t < e; ++t) val *= inv;
    }
    return val;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    FactorPowers out;
    for (auto [id, e] : den_) {
      const SparsePoly<K>& f = table_->at(id).poly;
      while (e > 0) {
        auto q = num_.exact_div(f);
        if (!q) break;
        num_ = std::move(*q);
        --e;
      }
      if (e > 0) out.emplace_back(id, e);
    }
    den_ = std::move(out);
  }

  FactorTable<K>* table_ = nullptr;
  SparsePoly<K> num_;
  FactorPowers den_;
};

// Square class of a factored value: all denominator exponents must be even
// (factors are irreducible and coprime to the numerator), and the numerator
// must be a scalar times a polynomial square.
template <class K>
struct FactoredSquareClass {
  bool is_square;
  std::optional<K> lambda;
};

template <class K>
FactoredSquareClass<K> is_square_mod_scalars(const Factored<K>& f) {
  HRDET_CHECK(!f.is_zero(), ErrorKind::InvalidInput,
              "square class of zero is undefined");
  for (auto [id, e] : f.den()) {
    HRDET_ASSERT(f.table()->at(id).irreducible,
                 "square classes need verified factor structure");
    if (e % 2) return {false, std::nullopt};
  }
  K lambda = f.num().leading_coeff();
  if (!is_perfect_square(f.num().monic())) return {false, std::nullopt};
  return {true, lambda};
}

// A formal sum of scalar multiples of factor-power products; the
// unmaterialized shape of the facet-sum degree formula. Kept flat so order
// profiles can be certified without expanding the sum.
template <class K>
struct BracketSum {
  std::vector<FactorProduct<K>> terms;

  void add(FactorProduct<K> t) {
    if (!t.is_zero()) terms.push_back(std::move(t));
  }

  Factored<K> materialize(FactorTable<K>* table) const {
    Factored<K> acc(table, SparsePoly<K>());
    for (const auto& t : terms) acc += Factored<K>::from_product(table, t);
    return acc;
  }
};

}  // namespace hrdet
