#pragma once

// Exact sparse multivariate polynomials over a coefficient field K.
// Canonical form: terms sorted in descending graded-lex order, no zero
// coefficients stored.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hrdet/field.hpp"
#include "hrdet/monomial.hpp"

namespace hrdet {

// Per-operation term ceiling. Checkers convert a breach into an
// "inconclusive" outcome rather than running unboundedly.
inline size_t& poly_term_budget() {
  static size_t budget = 12'000'000;
  return budget;
}

template <class K>
class SparsePoly {
 public:
  struct Term {
    Monomial m;
    K c;
  };

  SparsePoly() = default;
  explicit SparsePoly(K scalar) {
    if (!scalar.is_zero()) terms_.push_back({Monomial::one(), std::move(scalar)});
  }
  static SparsePoly zero() { return SparsePoly(); }
  static SparsePoly constant(K c) { return SparsePoly(std::move(c)); }
  static SparsePoly variable(int idx, K one) {
    SparsePoly p;
    p.terms_.push_back({Monomial::var(idx), std::move(one)});
    return p;
  }
  static SparsePoly term(Monomial m, K c) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  // Terms must be distinct monomials; sorts and drops zeros.
  static SparsePoly from_terms(std::vector<Term> ts) {
    SparsePoly p;
    p.terms_ = std::move(ts);
    std::erase_if(p.terms_, [](const Term& t) { return t.c.is_zero(); });
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) {
      return grlex_cmp(a.m, b.m) > 0;
    });
    for (size_t i = 0; i + 1 < p.terms_.size(); ++i)
      HRDET_ASSERT(grlex_cmp(p.terms_[i].m, p.terms_[i + 1].m) != 0,
                   "duplicate monomials in from_terms");
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int total_degree() const { return terms_.empty() ? -1 : terms_[0].m.degree(); }

  const Monomial& leading_monomial() const {
    HRDET_ASSERT(!terms_.empty(), "leading term of zero");
    return terms_[0].m;
  }
  const K& leading_coeff() const {
    HRDET_ASSERT(!terms_.empty(), "leading coeff of zero");
    return terms_[0].c;
  }
  K constant_term() const {
    if (terms_.empty()) return K();
    const Term& last = terms_.back();
    return last.m.is_one() ? last.c : K();
  }

  uint64_t var_mask() const {
    uint64_t mask = 0;
    for (const Term& t : terms_) mask |= t.m.var_mask();
    return mask;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c)
        return false;
    return true;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) {
    return !(a == b);
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    return merge(a, b, false);
  }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    return merge(a, b, true);
  }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return SparsePoly();
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].m, b.terms_[0].c);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].m, a.terms_[0].c);
    HRDET_CHECK(a.terms_.size() * b.terms_.size() <= poly_term_budget(),
                ErrorKind::BudgetExceeded, "polynomial product too large");
    std::unordered_map<Monomial, K, MonoHash> acc;
    acc.reserve(a.terms_.size() * std::min<size_t>(b.terms_.size(), 16));
    const SparsePoly& big = a.terms_.size() >= b.terms_.size() ? a : b;
    const SparsePoly& small = a.terms_.size() >= b.terms_.size() ? b : a;
    for (const Term& tb : small.terms_)
      for (const Term& ta : big.terms_) acc[ta.m * tb.m] += ta.c * tb.c;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.push_back({m, std::move(c)});
    HRDET_CHECK(out.size() <= poly_term_budget(), ErrorKind::BudgetExceeded,
                "polynomial product too large");
    return from_terms(std::move(out));
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  // Multiplication by a fixed term; graded-lex order is preserved.
  SparsePoly times_term(const Monomial& m, const K& c) const {
    if (c.is_zero()) return SparsePoly();
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
  }

  SparsePoly shifted(const Monomial& m) const {
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c});
    return r;
  }

  SparsePoly scaled(const K& c) const { return times_term(Monomial::one(), c); }

  // Leading coefficient 1 under the term order.
  SparsePoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
  }

  // Exact quotient, or nullopt when *this is not a multiple of b.
  std::optional<SparsePoly> exact_div(const SparsePoly& b) const {
    HRDET_CHECK(!b.is_zero(), ErrorKind::DivisionByZero, "exact_div by zero");
    if (is_zero()) return SparsePoly();
    if (b.is_constant()) return scaled(b.terms_[0].c.inverse());
    if (total_degree() < b.total_degree()) return std::nullopt;
    std::map<Monomial, K, MonoGreater> rem;
    for (const Term& t : terms_) rem.emplace(t.m, t.c);
    const Monomial& lmb = b.leading_monomial();
    K lcb_inv = b.leading_coeff().inverse();
    std::vector<Term> q;
    while (!rem.empty()) {
      auto it = rem.begin();
      auto qm = it->first / lmb;
      if (!qm) return std::nullopt;
      K qc = it->second * lcb_inv;
      q.push_back({*qm, qc});
      for (const Term& tb : b.terms_) {
        Monomial m = tb.m * *qm;
        auto pos = rem.find(m);
        if (pos == rem.end()) {
          rem.emplace(std::move(m), -(qc * tb.c));
        } else {
          pos->second -= qc * tb.c;
          if (pos->second.is_zero()) rem.erase(pos);
        }
      }
      HRDET_CHECK(q.size() <= poly_term_budget(), ErrorKind::BudgetExceeded,
                  "quotient too large");
    }
    return from_terms(std::move(q));
  }

  bool divisible_by(const SparsePoly& b) const { return exact_div(b).has_value(); }

  // --- univariate views in one variable -----------------------------------

  int degree_in(int var) const {
    int d = 0;
    for (const Term& t : terms_) d = std::max<int>(d, t.m.e[var]);
    return d;
  }

  // Coefficient polynomials of v^0..v^deg; entries may be zero polys.
  std::vector<SparsePoly> coeffs_in(int var) const {
    std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
    for (const Term& t : terms_) {
      Term u = t;
      int e = u.m.e[var];
      u.m.deg = static_cast<uint16_t>(u.m.deg - e);
      u.m.e[var] = 0;
      buckets[e].push_back(std::move(u));
    }
    std::vector<SparsePoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
  }

  static SparsePoly from_coeffs_in(int var, const std::vector<SparsePoly>& cs) {
    std::vector<Term> ts;
    for (size_t e = 0; e < cs.size(); ++e)
      for (const Term& t : cs[e].terms()) {
        Term u = t;
        u.m.e[var] = static_cast<uint8_t>(e);
        u.m.deg = static_cast<uint16_t>(u.m.deg + e);
        ts.push_back(std::move(u));
      }
    return from_terms(std::move(ts));
  }

  int lowest_var() const {
    int lo = kMaxVars;
    for (const Term& t : terms_)
      for (int v = 0; v < kMaxVars; ++v)
        if (t.m.e[v]) { lo = std::min(lo, v); break; }
    return lo;
  }

  // --- numeric evaluation ---------------------------------------------------

  // Evaluates at a point with coordinates in an evaluation field E; `conv`
  // maps coefficients K -> E. `point` must cover all kMaxVars slots.
  template <class E, class Conv>
  E eval(const std::vector<E>& point, Conv conv) const {
    HRDET_ASSERT(point.size() >= kMaxVars, "evaluation point too short");
    E acc{};
    for (const Term& t : terms_) {
      E val = conv(t.c);
      for (int v = 0; v < kMaxVars; ++v)
        for (int k = 0; k < t.m.e[v]; ++k) val *= point[v];
      acc += val;
    }
    return acc;
  }

 private:
  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool sub) {
    SparsePoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = grlex_cmp(a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (sub) t.c = -t.c;
        r.terms_.push_back(std::move(t));
      } else {
        K c2 = sub ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
        if (!c2.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c2)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      Term t = b.terms_[j];
      if (sub) t.c = -t.c;
      r.terms_.push_back(std::move(t));
    }
    return r;
  }

  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// GCD: primitive polynomial remainder sequences with recursive contents.
// ---------------------------------------------------------------------------

namespace detail {

template <class K>
SparsePoly<K> gcd_impl(const SparsePoly<K>& a, const SparsePoly<K>& b);

// Content of `a` viewed as a univariate polynomial in `var`.
template <class K>
SparsePoly<K> content_in(const SparsePoly<K>& a, int var) {
  SparsePoly<K> g;
  for (const SparsePoly<K>& c : a.coeffs_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable `var`.
template <class K>
SparsePoly<K> prem_in(SparsePoly<K> a, const SparsePoly<K>& b, int var) {
  int db = b.degree_in(var);
  SparsePoly<K> lb = b.coeffs_in(var)[db];
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    SparsePoly<K> la = a.coeffs_in(var)[da];
    Monomial shift = Monomial::var(var, static_cast<uint8_t>(da - db));
    a = a * lb - (b * la).shifted(shift);
    HRDET_ASSERT(a.is_zero() || a.degree_in(var) < da, "prem did not reduce");
  }
  return a;
}

template <class K>
SparsePoly<K> gcd_impl(const SparsePoly<K>& a, const SparsePoly<K>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  K one = a.leading_coeff().of_int(1);
  if (a.is_constant() || b.is_constant()) return SparsePoly<K>::constant(one);

  int var = std::min(a.lowest_var(), b.lowest_var());
  SparsePoly<K> ca = content_in(a, var);
  SparsePoly<K> cb = content_in(b, var);
  SparsePoly<K> cg = gcd_impl(ca, cb);

  SparsePoly<K> A = *a.exact_div(ca);
  SparsePoly<K> B = *b.exact_div(cb);
  if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
  while (B.degree_in(var) > 0) {
    SparsePoly<K> R = prem_in(A, B, var);
    if (R.is_zero()) return (cg * B).monic();
    A = std::move(B);
    B = *R.exact_div(content_in(R, var));
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
  }
  // Primitive parts are coprime in var.
  return cg.monic();
}

}  // namespace detail

// A gcd with leading coefficient 1; gcd(0, b) = monic b.
template <class K>
SparsePoly<K> gcd(const SparsePoly<K>& a, const SparsePoly<K>& b) {
  return detail::gcd_impl(a, b);
}

// ---------------------------------------------------------------------------
// Exact polynomial square root (used by the square-mod-scalars test).
// ---------------------------------------------------------------------------

template <class K>
std::optional<SparsePoly<K>> poly_sqrt(const SparsePoly<K>& f) {
  if (f.is_zero()) return SparsePoly<K>();
  if (f.is_constant()) {
    auto s = f.leading_coeff().sqrt();
    if (!s) return std::nullopt;
    return SparsePoly<K>::constant(*s);
  }
  if (f.leading_coeff().characteristic() == 2) {
    // Frobenius: a polynomial is a square iff every exponent is even and
    // every coefficient is a square in the field.
    std::vector<typename SparsePoly<K>::Term> ts;
    for (const auto& t : f.terms()) {
      Monomial half;
      for (int v = 0; v < kMaxVars; ++v) {
        if (t.m.e[v] % 2) return std::nullopt;
        half.e[v] = static_cast<uint8_t>(t.m.e[v] / 2);
      }
      half.deg = static_cast<uint16_t>(t.m.degree() / 2);
      auto cs = t.c.sqrt();
      if (!cs) return std::nullopt;
      ts.push_back({half, *cs});
    }
    auto s = SparsePoly<K>::from_terms(std::move(ts));
    if (s * s != f) return std::nullopt;
    return s;
  }

  int var = f.lowest_var();
  auto cs = f.coeffs_in(var);
  int D = static_cast<int>(cs.size()) - 1;
  if (D % 2 != 0) return std::nullopt;
  int m = D / 2;
  auto top = poly_sqrt(cs[D]);
  if (!top) return std::nullopt;
  std::vector<SparsePoly<K>> b(m + 1);
  b[m] = *top;
  SparsePoly<K> two_bm = b[m].scaled(b[m].leading_coeff().of_int(2));
  for (int j = m - 1; j >= 0; --j) {
    SparsePoly<K> t = (m + j < static_cast<int>(cs.size())) ? cs[m + j] : SparsePoly<K>();
    for (int i = j + 1; i <= m - 1; ++i) {
      int i2 = m + j - i;
      if (i2 <= j || i2 > m - 1) continue;
      t -= b[i] * b[i2];
    }
    auto q = t.exact_div(two_bm);
    if (!q) return std::nullopt;
    b[j] = std::move(*q);
  }
  SparsePoly<K> s = SparsePoly<K>::from_coeffs_in(var, b);
  if (s * s != f) return std::nullopt;
  return s;
}

template <class K>
bool is_perfect_square(const SparsePoly<K>& f) {
  return poly_sqrt(f).has_value();
}

}  // namespace hrdet
