#pragma once

// Claim checkers over the built-in fixtures, and the suite runner behind the
// CLI. Every checker is deterministic given (fixture, seed) and reports one
// of three statuses; falsified outcomes carry a concrete witness.

#include <chrono>

#include "hrdet/concrete.hpp"
#include "hrdet/json_io.hpp"
#include "hrdet/ordcert.hpp"

namespace hrdet {

struct CheckOutcome {
  std::string claim;
  enum class Status { Verified, Falsified, Inconclusive } status =
      Status::Inconclusive;
  Json evidence = Json::object();
  double runtime_seconds = 0.0;
};

inline const char* status_str(CheckOutcome::Status s) {
  switch (s) {
    case CheckOutcome::Status::Verified: return "verified";
    case CheckOutcome::Status::Falsified: return "falsified";
    default: return "inconclusive";
  }
}

Json outcome_to_json(const CheckOutcome& o, bool with_timings = false);

struct CheckOptions {
  FieldSpec field{0, 1};
  uint64_t seed = 12345;
  int parallel = 1;
};

// Runs fn(one) with a field element prototype for the chosen coefficients.
template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.characteristic == 0) return fn(Rat(1));
  if (fs.is_gf2ext()) return fn(GF2m(1, gf2_context(fs.ext_degree)));
  return fn(Fp(1, fs.characteristic));
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline int mod2(int x) { return ((x % 2) + 2) % 2; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Order profiles (the valuation theorems and the parity conjecture)
// ---------------------------------------------------------------------------

// q = -1 selects deg(l^d) with the exact expected profile (-1 on facets, 0
// elsewhere); q >= 1 selects the degree-q Hodge-Riemann determinant with the
// expected profile modulo 2 (1 on facets, 0 elsewhere).
CheckOutcome check_ord_profile(const Fixture& fx, const CheckOptions& opts,
                               int q);

// d even: D_{d/2} has the facet-bracket product class; reports the realized
// scalar.
CheckOutcome check_middledegree(const Fixture& fx, const CheckOptions& opts);

// For every size-d non-face F, the punctured reduction has the Lefschetz
// property in degree q.
CheckOutcome check_strongg(const Fixture& fx, const CheckOptions& opts, int q,
                           bool stellar_round = false);

// Closed-form fixture reproductions (realized signs recorded, not asserted).
CheckOutcome check_fixture_formulas(const std::string& name,
                                    const CheckOptions& opts);

// Computed quotient dimensions match the manifold dimension formula, for the
// generic system and one punctured system.
CheckOutcome check_dimension_formula(const Fixture& fx,
                                     const CheckOptions& opts);

// The degree-q pairing witness pair: element nonzero, its square isotropic.
CheckOutcome check_anisotropy(const CheckOptions& opts);

// Two random verified bases give Gram determinants in the same square class.
CheckOutcome check_basis_invariance(const Fixture& fx,
                                    const CheckOptions& opts, int q,
                                    int trials);

// Flipping the orientation negates the degree map (characteristic != 2).
CheckOutcome check_orientation_flip(const Fixture& fx,
                                    const CheckOptions& opts);

// Degrees of monomials only involve closed-star variables.
CheckOutcome check_locality(const Fixture& fx, const CheckOptions& opts);

// Subdividing a facet extends a disjoint-support basis by the new vertex
// power; the new diagonal Gram entry has ord 2q-1 at the removed facet.
CheckOutcome check_stellar_block(int d, int q, const CheckOptions& opts);

// Example-5.2 style finite-field Hilbert functions with seeded random draws.
CheckOutcome check_rp2_suspension_hilbert(const CheckOptions& opts);

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

struct SuiteResult {
  std::vector<CheckOutcome> outcomes;
  int exit_code() const {
    bool inconclusive = false;
    for (const auto& o : outcomes) {
      if (o.status == CheckOutcome::Status::Falsified) return 2;
      if (o.status == CheckOutcome::Status::Inconclusive) inconclusive = true;
    }
    return inconclusive ? 3 : 0;
  }
};

// Named checks of the "desk" suite; run_suite executes all (or a subset by
// name) with the given options.
std::vector<std::string> suite_check_names();
SuiteResult run_suite(const std::vector<std::string>& which,
                      const CheckOptions& opts);

}  // namespace hrdet
