#pragma once

// Exact order-of-vanishing certificates for unmaterialized facet sums.
//
// For a sum f = sum_j c_j * prod(factor^e) and a bracket [G], let e_min be
// the smallest [G]-exponent over the terms. Evaluating the terms with
// exponent e_min at a random point xi on the hypersurface [G] = 0 (all other
// factors staying nonzero where they appear in denominators) gives a scalar
// S(xi). If S(xi) != 0 then ord_[G](f) = e_min, exactly: the leading
// [G]-adic part is a ratio of polynomials not divisible by [G], and the
// remaining terms vanish to strictly higher order. A zero sample proves
// nothing and is retried; exhaustion is reported as "no certificate" so the
// caller can escalate to exact expansion or return an inconclusive outcome.
//
// For rational coefficients the evaluation runs over F_p: all numerators in
// sight have integer coefficients and the brackets are primitive, so a
// nonzero value mod p certifies indivisibility over Q.

#include <functional>

#include "hrdet/degree.hpp"

namespace hrdet {

template <class K, class E>
class HypersurfaceOrdProfiler {
 public:
  using Conv = std::function<E(const K&)>;

  HypersurfaceOrdProfiler(DegreeEngine<K>& eng, E one, Conv conv, uint64_t seed)
      : eng_(eng), one_(std::move(one)), conv_(std::move(conv)), rng_(seed) {}

  // ord_[G] of the sum, or nullopt when no certificate was found.
  std::optional<int> ord_at(const BracketSum<K>& sum, Face g, int max_tries = 32) {
    HRDET_CHECK(!sum.terms.empty(), ErrorKind::InvalidInput, "ord of an empty sum");
    int gid = eng_.bracket_factor_id(g);
    int e_min = 0;
    bool first = true;
    for (const auto& t : sum.terms) {
      int e = exponent_of(t, gid);
      if (first || e < e_min) e_min = e;
      first = false;
    }
    for (int attempt = 0; attempt < max_tries; ++attempt) {
      auto point = sample_on_bracket(g);
      if (!point) continue;
      bool bad_point = false;
      E s{};
      for (const auto& t : sum.terms) {
        if (exponent_of(t, gid) != e_min) continue;
        E val = conv_(t.unit);
        for (auto [id, e] : t.powers) {
          if (id == gid) continue;
          E fv = eng_.factors()->at(id).poly.eval(*point, conv_);
          if (fv.is_zero()) {
            if (e < 0) { bad_point = true; break; }
            val = E{};  // the whole term vanishes at xi
            break;
          }
          E base = e < 0 ? fv.inverse() : fv;
          int ae = e < 0 ? -e : e;
          for (int k = 0; k < ae; ++k) val *= base;
        }
        if (bad_point) break;
        s += val;
      }
      if (bad_point) continue;
      if (!s.is_zero()) return e_min;
    }
    return std::nullopt;
  }

 private:
  static int exponent_of(const FactorProduct<K>& t, int gid) {
    for (auto [id, e] : t.powers)
      if (id == gid) return e;
    return 0;
  }

  E random_nonzero() {
    if constexpr (std::is_same_v<E, Fp>) {
      return random_fp(rng_, one_.prime());
    } else {
      return random_gf2m(rng_, one_.ctx());
    }
  }

  // A random point with [G](xi) = 0: all coordinates random, then one entry
  // of the first row solved from the Laplace expansion along that row.
  std::optional<std::vector<E>> sample_on_bracket(Face g) {
    const VarTable& vt = eng_.vars();
    std::vector<E> point(kMaxVars, one_);
    for (int v = 0; v < vt.count(); ++v) point[v] = random_nonzero();

    std::vector<int> cols = face_vertices(g);
    int d = vt.d();
    HRDET_ASSERT(static_cast<int>(cols.size()) == d, "subset size mismatch");
    if (d == 1) {
      point[vt.index(VarId{1, uint8_t(cols[0])})] = one_ - one_;
      return point;
    }
    // Minors over rows 2..d.
    auto minor_det = [&](int skip_pos) {
      std::vector<int> mc;
      for (int p = 0; p < d; ++p)
        if (p != skip_pos) mc.push_back(cols[p]);
      return numeric_det(point, 2, mc);
    };
    int pivot = -1;
    std::vector<E> minors(d);
    for (int p = 0; p < d; ++p) {
      minors[p] = minor_det(p);
      if (pivot < 0 && !minors[p].is_zero()) pivot = p;
    }
    if (pivot < 0) return std::nullopt;
    // 0 = sum_p (-1)^p a_{1,c_p} M_p  =>  a_pivot = (-1)^(pivot+1) acc / M_pivot.
    E acc{};
    for (int p = 0; p < d; ++p) {
      if (p == pivot) continue;
      E term = point[vt.index(VarId{1, uint8_t(cols[p])})] * minors[p];
      if (p % 2 == 1) term = -term;
      acc += term;
    }
    E rhs = acc / minors[pivot];
    point[vt.index(VarId{1, uint8_t(cols[pivot])})] = (pivot % 2 == 0) ? -rhs : rhs;
    return point;
  }

  // det of rows row0..d over the given columns at the point.
  E numeric_det(const std::vector<E>& point, int row, std::vector<int> cols) {
    if (cols.empty()) return one_;
    E acc{};
    const VarTable& vt = eng_.vars();
    for (size_t p = 0; p < cols.size(); ++p) {
      std::vector<int> rest;
      for (size_t q = 0; q < cols.size(); ++q)
        if (q != p) rest.push_back(cols[q]);
      E sub = numeric_det(point, row + 1, std::move(rest));
      E term = point[vt.index(VarId{uint8_t(row), uint8_t(cols[p])})] * sub;
      if (p % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  }

  DegreeEngine<K>& eng_;
  E one_;
  Conv conv_;
  std::mt19937_64 rng_;
};

// Evaluation-field setups per coefficient field.
inline Fp sz_proto_for_rat() { return Fp(1, (1ull << 31) - 1); }

inline std::function<Fp(const Rat&)> sz_conv_rat(uint64_t p) {
  return [p](const Rat& c) {
    BigInt num = boost::multiprecision::numerator(c.value());
    BigInt den = boost::multiprecision::denominator(c.value());
    BigInt rp(static_cast<unsigned long>(p));
    BigInt nr = num % rp;
    if (nr < 0) nr += rp;
    BigInt dr = den % rp;
    uint64_t nv = nr.convert_to<uint64_t>();
    uint64_t dv = dr.convert_to<uint64_t>();
    HRDET_CHECK(dv != 0, ErrorKind::BudgetExceeded,
                "coefficient denominator vanishes modulo the sample prime");
    return Fp(nv, p) / Fp(dv, p);
  };
}

inline std::function<GF2m(const Fp&)> sz_conv_f2(const Gf2Ctx* ctx) {
  return [ctx](const Fp& c) {
    HRDET_ASSERT(c.prime() == 2, "char-2 conversion expects F_2 coefficients");
    return GF2m(c.value(), ctx);
  };
}

inline std::function<GF2m(const GF2m&)> sz_conv_gf2m_prime(const Gf2Ctx* ctx) {
  return [ctx](const GF2m& c) {
    HRDET_CHECK(c.value() <= 1, ErrorKind::BudgetExceeded,
                "certificates need prime-subfield coefficients");
    return GF2m(c.value(), ctx);
  };
}

// ---------------------------------------------------------------------------
// Field-dispatching front ends
// ---------------------------------------------------------------------------

// ord_[G] for every target subset, each with an exact hypersurface
// certificate; entries are nullopt when no certificate was found.
template <class K>
std::map<Face, std::optional<int>> certified_ord_profile(
    DegreeEngine<K>& eng, const BracketSum<K>& sum,
    const std::vector<Face>& targets, uint64_t seed, int max_tries = 32) {
  std::map<Face, std::optional<int>> out;
  auto run = [&](auto profiler) {
    for (Face g : targets) out[g] = profiler.ord_at(sum, g, max_tries);
  };
  if constexpr (std::is_same_v<K, Rat>) {
    const uint64_t p = (1ull << 31) - 1;
    run(HypersurfaceOrdProfiler<Rat, Fp>(eng, Fp(1, p), sz_conv_rat(p), seed));
  } else if constexpr (std::is_same_v<K, Fp>) {
    if (eng.one().prime() == 2) {
      const Gf2Ctx* ctx = gf2_context(31);
      run(HypersurfaceOrdProfiler<Fp, GF2m>(eng, GF2m(1, ctx), sz_conv_f2(ctx),
                                            seed));
    } else {
      uint64_t p = eng.one().prime();
      run(HypersurfaceOrdProfiler<Fp, Fp>(
          eng, Fp(1, p), [](const Fp& c) { return c; }, seed));
    }
  } else {
    static_assert(std::is_same_v<K, GF2m>);
    const Gf2Ctx* ctx = gf2_context(31);
    run(HypersurfaceOrdProfiler<GF2m, GF2m>(eng, GF2m(1, ctx),
                                            sz_conv_gf2m_prime(ctx), seed));
  }
  return out;
}

// Certifies sum != 0 by evaluating at a random point (denominator factors
// nonzero); true = certified, nullopt = no certificate found.
template <class K, class E>
std::optional<bool> sum_nonzero_impl(DegreeEngine<K>& eng,
                                     const BracketSum<K>& sum, E one,
                                     std::function<E(const K&)> conv,
                                     uint64_t seed, int max_tries) {
  std::mt19937_64 rng(seed);
  const VarTable& vt = eng.vars();
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<E> point(kMaxVars, one);
    for (int v = 0; v < vt.count(); ++v) {
      if constexpr (std::is_same_v<E, Fp>) {
        point[v] = random_fp(rng, one.prime());
      } else {
        point[v] = random_gf2m(rng, one.ctx());
      }
    }
    bool bad = false;
    E s{};
    for (const auto& t : sum.terms) {
      E val = conv(t.unit);
      for (auto [id, e] : t.powers) {
        E fv = eng.factors()->at(id).poly.eval(point, conv);
        if (fv.is_zero()) {
          if (e < 0) { bad = true; break; }
          val = E{};
          break;
        }
        E base = e < 0 ? fv.inverse() : fv;
        int ae = e < 0 ? -e : e;
        for (int k = 0; k < ae; ++k) val *= base;
      }
      if (bad) break;
      s += val;
    }
    if (bad) continue;
    if (!s.is_zero()) return true;
  }
  return std::nullopt;
}

template <class K>
std::optional<bool> certify_sum_nonzero(DegreeEngine<K>& eng,
                                        const BracketSum<K>& sum,
                                        uint64_t seed, int max_tries = 32) {
  if constexpr (std::is_same_v<K, Rat>) {
    const uint64_t p = (1ull << 31) - 1;
    return sum_nonzero_impl<Rat, Fp>(eng, sum, Fp(1, p), sz_conv_rat(p), seed,
                                     max_tries);
  } else if constexpr (std::is_same_v<K, Fp>) {
    if (eng.one().prime() == 2) {
      const Gf2Ctx* ctx = gf2_context(31);
      return sum_nonzero_impl<Fp, GF2m>(eng, sum, GF2m(1, ctx),
                                        sz_conv_f2(ctx), seed, max_tries);
    }
    uint64_t p = eng.one().prime();
    return sum_nonzero_impl<Fp, Fp>(
        eng, sum, Fp(1, p), [](const Fp& c) { return c; }, seed, max_tries);
  } else {
    static_assert(std::is_same_v<K, GF2m>);
    const Gf2Ctx* ctx = gf2_context(31);
    return sum_nonzero_impl<GF2m, GF2m>(eng, sum, GF2m(1, ctx),
                                        sz_conv_gf2m_prime(ctx), seed,
                                        max_tries);
  }
}

}  // namespace hrdet
