#include <doctest.h>

#include <fstream>

#include "hrdet/verify.hpp"

using namespace hrdet;

namespace {

CheckOptions opts_q0() {
  CheckOptions o;
  o.field = FieldSpec{0, 1};
  o.seed = 12345;
  return o;
}

}  // namespace

TEST_CASE("fixture registry") {
  CHECK(get_fixture("s0").has_value());
  CHECK(get_fixture("simplex:3")->complex.facets().size() == 4);
  CHECK(get_fixture("sigma:2")->complex.n() == 4);
  CHECK(get_fixture("octahedron")->complex.facets().size() == 8);
  CHECK(get_fixture("stacked:3:2")->complex.n() == 6);
  CHECK(get_fixture("cycle:5")->complex.facets().size() == 5);
  CHECK(get_fixture("subdivided:cycle:4")->complex.n() == 5);
  CHECK(get_fixture("rp2")->field.characteristic == 2);
  CHECK(get_fixture("rp2_suspension")->complex.facets().size() == 20);
  CHECK(!get_fixture("bogus").has_value());
  CHECK(!get_fixture("simplex:0").has_value());

  auto corrupted = get_fixture("corrupted:sigma:2");
  REQUIRE(corrupted.has_value());
  CHECK(corrupted->corrupt_orientation);
  auto o = fixture_orientation(*corrupted, FieldSpec{0, 1});
  CHECK(!orientation_is_compatible(corrupted->complex, o));
}

TEST_CASE("ord profile checker verifies the small fixtures") {
  for (const char* name : {"simplex:2", "sigma:2", "octahedron"}) {
    auto fx = get_fixture(name);
    auto out = check_ord_profile(*fx, opts_q0(), -1);
    CHECK(out.status == CheckOutcome::Status::Verified);
  }
  // degree-q profile modulo 2
  auto fx = get_fixture("sigma:3");
  auto out = check_ord_profile(*fx, opts_q0(), 1);
  CHECK(out.status == CheckOutcome::Status::Verified);
}

TEST_CASE("materialized and certificate profiles agree") {
  auto fx = get_fixture("sigma:2");
  const SimplicialComplex& c = fx->complex;
  auto o = orient(c, FieldSpec{0, 1});
  DegreeEngine<Rat> eng(c, o, Rat(1));
  Factored<Rat> val = eng.degree_poly(eng.expand_ell_power(c.d()));
  BracketSum<Rat> sum = eng.degree_kx_sum(eng.expand_ell_power(c.d()));
  auto certified = certified_ord_profile(eng, sum, all_size_d_subsets(c), 99);
  for (Face g : all_size_d_subsets(c)) {
    REQUIRE(certified.at(g).has_value());
    CHECK(*certified.at(g) == val.ord_at_factor(eng.bracket_factor_id(g)));
  }
}

TEST_CASE("the corrupted fixture is falsified with a concrete witness") {
  auto fx = get_fixture("corrupted:sigma:2");
  auto out = check_ord_profile(*fx, opts_q0(), -1);
  CHECK(out.status == CheckOutcome::Status::Falsified);
  CHECK(out.evidence.contains("witness"));

  SuiteResult sr;
  sr.outcomes.push_back(out);
  CHECK(sr.exit_code() == 2);
}

TEST_CASE("exit code mapping") {
  SuiteResult sr;
  CheckOutcome ok;
  ok.status = CheckOutcome::Status::Verified;
  CheckOutcome meh;
  meh.status = CheckOutcome::Status::Inconclusive;
  sr.outcomes = {ok};
  CHECK(sr.exit_code() == 0);
  sr.outcomes = {ok, meh};
  CHECK(sr.exit_code() == 3);
}

TEST_CASE("middle degree checker") {
  auto out = check_middledegree(*get_fixture("sigma:2"), opts_q0());
  CHECK(out.status == CheckOutcome::Status::Verified);
  // The suspension-labeled class is pinned by the closed form: lambda ~ -1.
  CHECK(out.evidence.at("lambda_is_minus_one_class").get<bool>());

  CHECK_THROWS_AS((void)check_middledegree(*get_fixture("octahedron"), opts_q0()),
                  Error);
}

TEST_CASE("strong Lefschetz checker outcomes") {
  // No size-d non-faces: vacuous.
  auto out = check_strongg(*get_fixture("simplex:3"), opts_q0(), 1);
  CHECK(out.status == CheckOutcome::Status::Verified);
  std::string cases = out.evidence.at("cases").dump();
  CHECK(cases.find("vacuous-no-nonfaces") != std::string::npos);

  // q = d/2 with even d: vacuous identity power.
  auto out2 = check_strongg(*get_fixture("sigma:2"), opts_q0(), 1);
  CHECK(out2.status == CheckOutcome::Status::Verified);
  CHECK(out2.evidence.at("cases").dump().find("vacuous-identity-power") !=
        std::string::npos);

  // q = 0 on a nontrivial fixture.
  auto out3 = check_strongg(*get_fixture("sigma:2"), opts_q0(), 0);
  CHECK(out3.status == CheckOutcome::Status::Verified);

  // One stellar round keeps the property.
  auto out4 = check_strongg(*get_fixture("sigma:2"), opts_q0(), 0, true);
  CHECK(out4.status == CheckOutcome::Status::Verified);
}

TEST_CASE("fixture formula checkers") {
  for (const char* name : {"s0", "simplex:2", "sigma:2", "stacked:3:1"}) {
    auto out = check_fixture_formulas(name, opts_q0());
    CHECK(out.status == CheckOutcome::Status::Verified);
  }
  CHECK_THROWS_AS((void)check_fixture_formulas("nope", opts_q0()), Error);
}

TEST_CASE("dimension formula checker includes a punctured system") {
  auto out = check_dimension_formula(*get_fixture("sigma:2"), opts_q0());
  CHECK(out.status == CheckOutcome::Status::Verified);
  CHECK(!out.evidence.at("punctured_at").is_null());

  // The simplex boundary has no size-d non-face.
  auto out2 = check_dimension_formula(*get_fixture("simplex:3"), opts_q0());
  CHECK(out2.status == CheckOutcome::Status::Verified);
  CHECK(out2.evidence.at("punctured_at").is_null());
}

TEST_CASE("rp2 suspension Hilbert functions over GF(2^10)") {
  auto out = check_rp2_suspension_hilbert(opts_q0());
  CHECK(out.status == CheckOutcome::Status::Verified);
  // Both draw families matched within the logged draws.
  CHECK(out.evidence.at("random_draws").size() >= 1);
  CHECK(out.evidence.at("split_draws").size() >= 1);
  CHECK(out.evidence.at("random_draws").back().at("status") == "matched");
  CHECK(out.evidence.at("split_draws").back().at("status") == "matched");
}

TEST_CASE("checker JSON is deterministic for a fixed seed") {
  auto fx = get_fixture("sigma:2");
  auto a = check_ord_profile(*fx, opts_q0(), -1);
  auto b = check_ord_profile(*fx, opts_q0(), -1);
  CHECK(outcome_to_json(a).dump() == outcome_to_json(b).dump());

  auto h1 = check_rp2_suspension_hilbert(opts_q0());
  auto h2 = check_rp2_suspension_hilbert(opts_q0());
  CHECK(outcome_to_json(h1).dump() == outcome_to_json(h2).dump());
}

TEST_CASE("complex JSON round trip") {
  auto c = get_fixture("octahedron")->complex;
  Json j = complex_to_json(c);
  SimplicialComplex back = complex_from_json(j);
  CHECK(back.facets() == c.facets());
  CHECK(back.n() == c.n());
  CHECK_THROWS_AS(complex_from_json(Json{{"n", 3}}), Error);
}

TEST_CASE("realized signs match the recorded anchors") {
  std::ifstream in(std::string(HRDET_GOLDEN_DIR) + "/realized_anchors.json");
  REQUIRE(in.good());
  Json golden = Json::parse(in);

  for (auto& [name, eps] : golden.at("fixture_formula_eps").items()) {
    auto out = check_fixture_formulas(name, opts_q0());
    REQUIRE(out.status == CheckOutcome::Status::Verified);
    CHECK(out.evidence.at("realized_eps").get<int>() == eps.get<int>());
  }
  for (auto& [name, lambda] : golden.at("middle_degree_lambda").items()) {
    auto out = check_middledegree(*get_fixture(name), opts_q0());
    REQUIRE(out.status == CheckOutcome::Status::Verified);
    CHECK(out.evidence.at("lambda").get<std::string>() ==
          lambda.get<std::string>());
  }
  auto loc = check_locality(*get_fixture("octahedron"), opts_q0());
  REQUIRE(loc.status == CheckOutcome::Status::Verified);
  CHECK(loc.evidence.at("transfer").at("sign").get<int>() ==
        golden.at("locality_transfer_sign").at("octahedron").get<int>());
}

TEST_CASE("suite runner selects checks by name and parallelizes") {
  CheckOptions opts = opts_q0();
  auto res = run_suite({"ell-profile@sigma:2", "anisotropy-witness@sigma:2"}, opts);
  CHECK(res.outcomes.size() == 2);
  CHECK(res.exit_code() == 0);

  opts.parallel = 2;
  auto res2 = run_suite({"ell-profile@sigma:2", "anisotropy-witness@sigma:2"}, opts);
  CHECK(res2.outcomes.size() == 2);
  CHECK(outcome_to_json(res2.outcomes[0]).dump() ==
        outcome_to_json(res.outcomes[0]).dump());

  CHECK_THROWS_AS(run_suite({"nonexistent-check"}, opts), Error);
}

TEST_CASE("determinant-profile status transfers across a facet subdivision") {
  // The parity conjecture holds for a complex iff it holds for its stellar
  // subdivision; both sides complete here and agree.
  auto base = check_ord_profile(*get_fixture("simplex:3"), opts_q0(), 1);
  auto sub = check_ord_profile(*get_fixture("stacked:3:1"), opts_q0(), 1);
  CHECK(base.status == CheckOutcome::Status::Verified);
  CHECK(sub.status == base.status);
}

TEST_CASE("resource caps report inconclusive instead of running unboundedly") {
  size_t saved = poly_term_budget();
  poly_term_budget() = 500;
  auto out = check_ord_profile(*get_fixture("sigma:3"), opts_q0(), 1);
  poly_term_budget() = saved;
  CHECK(out.status == CheckOutcome::Status::Inconclusive);
  CHECK(out.evidence.contains("reason"));
}
