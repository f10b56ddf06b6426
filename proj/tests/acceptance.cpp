// Acceptance suite: one criterion per stanza, one pass/fail line each.
// Exits nonzero if any criterion fails its checks or its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hrdet/verify.hpp"

using namespace hrdet;

namespace {

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool run_checks(const std::vector<std::string>& names, std::string& detail,
                const std::function<bool(const std::vector<CheckOutcome>&,
                                         std::string&)>& extra = nullptr) {
  CheckOptions opts;
  opts.seed = 12345;
  SuiteResult res = run_suite(names, opts);
  int verified = 0;
  for (const auto& o : res.outcomes) {
    if (o.status == CheckOutcome::Status::Verified) {
      ++verified;
    } else {
      detail = o.claim + " -> " + status_str(o.status) + " " + o.evidence.dump();
      return false;
    }
  }
  detail = std::to_string(verified) + "/" + std::to_string(names.size()) +
           " checks verified";
  if (extra) return extra(res.outcomes, detail);
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1,
                      "degree normalization deg(x_F) = eps_F/[F] on all facets "
                      "(simplex d=2,3,4; suspensions d=2,3; octahedron)",
                      5.0,
                      [](std::string& detail) {
                        return run_checks({"degree-normalization@simplex:2",
                                           "degree-normalization@simplex:3",
                                           "degree-normalization@simplex:4",
                                           "degree-normalization@sigma:2",
                                           "degree-normalization@sigma:3",
                                           "degree-normalization@octahedron"},
                                          detail);
                      }});

  criteria.push_back({2,
                      "dual-oracle equality of both degree computations on all "
                      "degree-d face monomials (suspensions d=2,3; octahedron)",
                      60.0,
                      [](std::string& detail) {
                        return run_checks({"dual-oracle@sigma:2",
                                           "dual-oracle@sigma:3",
                                           "dual-oracle@octahedron"},
                                          detail);
                      }});

  criteria.push_back(
      {3,
       "ord profile of deg(l^d): -1 on facets, 0 elsewhere (exact), incl. the "
       "characteristic-2 pseudomanifold suspension",
       300.0,
       [](std::string& detail) {
         return run_checks(
             {"ell-profile@simplex:2", "ell-profile@simplex:3",
              "ell-profile@sigma:2", "ell-profile@sigma:3",
              "ell-profile@octahedron", "ell-profile@stacked:3:2",
              "ell-profile@rp2_suspension"},
             detail);
       }});

  criteria.push_back(
      {4,
       "middle-degree determinant class: profile 1/0 mod 2 and "
       "D_{d/2}/prod[F] a scalar square; realized scalar logged",
       600.0,
       [](std::string& detail) {
         return run_checks(
             {"middle-degree@sigma:2", "middle-degree@cycle:4",
              "middle-degree@simplex:4", "middle-degree@subdivided:cycle:4"},
             detail,
             [](const std::vector<CheckOutcome>& outs, std::string& d) {
               // The suspension labeling pins lambda ~ -1 by the closed form.
               for (const auto& o : outs) {
                 if (o.claim.find("sigma:2") == std::string::npos) continue;
                 if (!o.evidence.at("lambda_is_minus_one_class").get<bool>()) {
                   d = "suspension lambda class is not -1";
                   return false;
                 }
               }
               d += "; realized lambdas logged";
               return true;
             });
       }});

  criteria.push_back(
      {5,
       "degree-1 determinant profiles mod 2 and the suspension closed-form "
       "class (-A A' prod[G] pattern)",
       600.0,
       [](std::string& detail) {
         return run_checks({"dq-profile@sigma:3", "dq-profile@stacked:3:1",
                            "fixture-formulas@sigma:3"},
                           detail);
       }});

  criteria.push_back(
      {6,
       "finite-field Hilbert functions of the projective-plane suspension "
       "over GF(2^10), random and split systems, seeded draws",
       120.0,
       [](std::string& detail) {
         return run_checks(
             {"finite-field-hilbert@rp2_suspension"}, detail,
             [](const std::vector<CheckOutcome>& outs, std::string& d) {
               const auto& ev = outs[0].evidence;
               if (ev.at("random_draws").size() > 8 ||
                   ev.at("split_draws").size() > 8) {
                 d = "needed more than 8 draws";
                 return false;
               }
               d += "; draws: random=" +
                    std::to_string(ev.at("random_draws").size()) + " split=" +
                    std::to_string(ev.at("split_draws").size());
               return true;
             });
       }});

  criteria.push_back({7,
                      "anisotropy witness: x_3 nonzero with vanishing square in "
                      "the punctured suspension reduction",
                      1.0,
                      [](std::string& detail) {
                        return run_checks({"anisotropy-witness@sigma:2"}, detail);
                      }});

  criteria.push_back(
      {8,
       "quotient dimensions match the manifold dimension formula for generic "
       "and punctured systems on every homology-manifold fixture",
       120.0,
       [](std::string& detail) {
         return run_checks(
             {"dimension-formula@simplex:2", "dimension-formula@simplex:3",
              "dimension-formula@simplex:4", "dimension-formula@sigma:2",
              "dimension-formula@sigma:3", "dimension-formula@octahedron",
              "dimension-formula@stacked:3:1", "dimension-formula@stacked:3:2",
              "dimension-formula@subdivided:cycle:4", "dimension-formula@rp2"},
             detail);
       }});

  criteria.push_back(
      {9,
       "property suite: basis invariance mod squares, locality, orientation "
       "flip antisymmetry, stellar block diagonalization with ord 2q-1",
       300.0,
       [](std::string& detail) {
         return run_checks(
             {"basis-invariance@sigma:2", "basis-invariance@simplex:3",
              "basis-invariance@subdivided:cycle:4",
              "degree-locality@octahedron", "orientation-flip@sigma:3",
              "stellar-block@d3q1", "stellar-block@d4q2"},
             detail);
       }});

  criteria.push_back(
      {10,
       "negative control: a corrupted orientation is falsified with a "
       "concrete witness and maps to exit code 2",
       60.0,
       [](std::string& detail) {
         CheckOptions opts;
         opts.seed = 12345;
         auto fx = get_fixture("corrupted:sigma:2");
         CheckOutcome inner = check_ord_profile(*fx, opts, -1);
         SuiteResult as_suite;
         as_suite.outcomes.push_back(inner);
         bool ok = inner.status == CheckOutcome::Status::Falsified &&
                   inner.evidence.contains("witness") &&
                   as_suite.exit_code() == 2;
         detail = ok ? "falsified with witness " +
                           inner.evidence.at("witness").dump() + ", exit code 2"
                     : "corruption was not detected";
         return ok;
       }});

  int failures = 0;
  double total = 0;
  for (auto& crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = crit.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    total += elapsed;
    bool in_budget = elapsed < crit.budget_seconds;
    if (!ok || !in_budget) ++failures;
    std::printf("criterion %2d: %s  %7.2fs/%.0fs  %s -- %s\n", crit.id,
                ok && in_budget ? "PASS" : "FAIL", elapsed,
                crit.budget_seconds, crit.label.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%zu criteria passed, %.2fs total\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures == 0 ? 0 : 1;
}
