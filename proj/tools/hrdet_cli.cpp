// hrdet: exact artinian reductions of face rings, degree maps, and
// Hodge-Riemann determinant checks on desk-scale simplicial complexes.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hrdet/verify.hpp"

using namespace hrdet;

namespace {

constexpr int kExitUsage = 64;

SimplicialComplex load_complex(const std::string& fixture,
                               const std::string& input, Fixture* fx_out) {
  if (!fixture.empty()) {
    auto fx = get_fixture(fixture);
    if (!fx) {
      std::cerr << "unknown fixture: " << fixture << "\n";
      std::exit(kExitUsage);
    }
    if (fx_out) *fx_out = *fx;
    return fx->complex;
  }
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open " << input << "\n";
    std::exit(kExitUsage);
  }
  Json j = Json::parse(in, nullptr, true);
  SimplicialComplex c = complex_from_json(j);
  if (fx_out) *fx_out = Fixture{"input", c};
  return c;
}

FieldSpec parse_field_or_exit(const std::string& s) {
  auto fs = FieldSpec::parse(s);
  if (!fs) {
    std::cerr << "invalid --char value: " << s
              << " (use 0, an odd prime, 2, or 2^e)\n";
    std::exit(kExitUsage);
  }
  return *fs;
}

std::optional<FaceMonomial> parse_face_monomial(const std::string& s, int n) {
  FaceMonomial m;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '*') { ++pos; continue; }
    if (s[pos] != 'x' || pos + 1 >= s.size() || s[pos + 1] != '_')
      return std::nullopt;
    pos += 2;
    size_t v0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == v0) return std::nullopt;
    int v = std::stoi(s.substr(v0, pos - v0));
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      size_t e0 = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == e0) return std::nullopt;
      e = std::stoi(s.substr(e0, pos - e0));
    }
    if (v < 1 || v > n || e < 1) return std::nullopt;
    m = m.times_vertex(v, e);
  }
  return m;
}

// --lsop {generic | punctured:v,v,... }
struct LsopChoice {
  bool punctured = false;
  Face subset = 0;
};

std::optional<LsopChoice> parse_lsop(const std::string& s) {
  if (s.empty() || s == "generic") return LsopChoice{};
  if (s.rfind("punctured:", 0) == 0) {
    LsopChoice ch;
    ch.punctured = true;
    std::string rest = s.substr(10);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
      try {
        int v = std::stoi(tok);
        if (v < 1 || v > 31) return std::nullopt;
        ch.subset |= (1u << (v - 1));
      } catch (...) {
        return std::nullopt;
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return ch;
  }
  return std::nullopt;
}

int cmd_analyze(const std::string& fixture, const std::string& input,
                const FieldSpec& field, bool as_json) {
  Fixture fx;
  SimplicialComplex c = load_complex(fixture, input, &fx);
  Json j;
  j["schema"] = kReportSchema;
  j["complex"] = complex_to_json(c);
  if (c.pure()) {
    auto [f, h] = c.f_h_vectors();
    j["f_vector"] = f;
    j["h_vector"] = h;
    j["topology"] = topology_to_json(topology_report(c, field));
    try {
      Orientation o = fixture_orientation(fx, field);
      Json signs = Json::array();
      for (size_t i = 0; i < c.facets().size(); ++i)
        signs.push_back(Json{{"facet", face_to_json(c.facets()[i])},
                             {"sign", int(o.sign[i])}});
      j["orientation"] = signs;
    } catch (const Error& e) {
      j["orientation"] = nullptr;
      j["orientation_error"] = e.what();
    }
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c.str() << "\n";
    if (j.contains("h_vector"))
      std::cout << "h-vector: " << j["h_vector"].dump() << "\n";
    if (j.contains("topology")) std::cout << j["topology"].dump(2) << "\n";
  }
  return 0;
}

template <class K>
int degree_for_field(const SimplicialComplex& c, const Fixture& fx,
                     const FieldSpec& field, const LsopChoice& lsop,
                     const std::string& monomial, bool ell, bool as_json,
                     K one) {
  Orientation o = fixture_orientation(fx, field);
  Face punct = lsop.punctured ? lsop.subset : 0;
  if (punct) (void)theta_punctured<K>(c, punct);  // validates
  DegreeEngine<K> eng(c, o, one, punct);
  Factored<K> val;
  std::string what;
  if (ell) {
    val = eng.degree_poly(eng.expand_ell_power(c.d()));
    what = "l^" + std::to_string(c.d());
  } else {
    auto m = parse_face_monomial(monomial, c.n());
    if (!m || m->deg != c.d()) {
      std::cerr << "--monomial must be a degree-d monomial like x_1^2*x_3\n";
      return kExitUsage;
    }
    val = eng.degree_reduce(*m);
    what = m->str();
  }
  RatFunc<K> r = val.to_ratfunc();
  Json j;
  j["schema"] = kReportSchema;
  j["degree_of"] = what;
  j["lsop"] = lsop.punctured ? "punctured:" + face_str(lsop.subset) : "generic";
  j["value"] = Json{{"num", to_string(r.num(), eng.vars())},
                    {"den", to_string(r.den(), eng.vars())}};
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << "deg(" << what << ") = " << to_string(r, eng.vars()) << "\n";
  return 0;
}

template <class K>
int gram_for_field(const SimplicialComplex& c, const Fixture& fx,
                   const FieldSpec& field, const LsopChoice& lsop, int q,
                   uint64_t seed, bool as_json, K one) {
  Orientation o = fixture_orientation(fx, field);
  Face punct = lsop.punctured ? lsop.subset : 0;
  DegreeEngine<K> eng(c, o, one, punct);
  GradedBasis<K> basis = select_basis(eng, q, {std::nullopt, seed});
  GramReport<K> rep = hr_gram(eng, q, basis, eng.generic());
  Json j;
  j["schema"] = kReportSchema;
  j["q"] = q;
  j["lsop"] = lsop.punctured ? "punctured:" + face_str(lsop.subset) : "generic";
  Json b = Json::array();
  for (auto& m : rep.basis) b.push_back(m.str());
  j["basis"] = b;
  Json rows = Json::array();
  for (auto& row : rep.matrix) {
    Json r = Json::array();
    for (auto& v : row) {
      RatFunc<K> rf = v.to_ratfunc();
      r.push_back(Json{{"num", to_string(rf.num(), eng.vars())},
                       {"den", to_string(rf.den(), eng.vars())}});
    }
    rows.push_back(r);
  }
  j["matrix"] = rows;
  if (rep.det.is_zero()) {
    j["determinant"] = nullptr;
    j["lefschetz"] = false;
  } else {
    RatFunc<K> det = rep.det.to_ratfunc();
    j["determinant"] = Json{{"num", to_string(det.num(), eng.vars())},
                            {"den", to_string(det.den(), eng.vars())}};
    j["lefschetz"] = true;
    Json prof = Json::array();
    for (auto [g, ordv] : rep.ord_profile)
      prof.push_back(Json{{"subset", face_to_json(g)}, {"ord", ordv}});
    if (!rep.ord_profile.empty()) j["ord_profile"] = prof;
  }
  std::cout << (as_json ? j.dump(2) : j.dump(2)) << "\n";
  return 0;
}

int cmd_hilbert(const std::string& fixture, const std::string& input,
                const FieldSpec& field, const std::string& lsop_str,
                uint64_t seed, bool as_json) {
  Fixture fx;
  SimplicialComplex c = load_complex(fixture, input, &fx);
  Json j;
  j["schema"] = kReportSchema;
  j["field"] = field.str();

  if (lsop_str == "random" || lsop_str == "split") {
    if (field.characteristic == 0) {
      std::cerr << "--lsop random needs a finite field (--char p or 2^e)\n";
      return kExitUsage;
    }
    Orientation o = fixture_orientation(fx, field);
    std::mt19937_64 rng(seed);
    HilbertReport rep = with_field(field, [&](auto one) {
      using K = decltype(one);
      int d = c.d(), n = c.n();
      Matrix<K> mu(d, std::vector<K>(n, K{}));
      auto rnd = [&]() {
        if constexpr (std::is_same_v<K, GF2m>)
          return random_gf2m(rng, one.ctx());
        else if constexpr (std::is_same_v<K, Fp>)
          return random_fp(rng, one.prime());
        else
          return K{};
      };
      if (lsop_str == "split") {
        // split systems follow the suspension structure: all rows but the
        // last on the base vertices, the last row on the two apexes
        for (int i = 0; i + 1 < d; ++i)
          for (int jx = 0; jx + 2 < n; ++jx) mu[i][jx] = rnd();
        for (int jx = n - 2; jx < n; ++jx) mu[d - 1][jx] = rnd();
      } else {
        for (auto& row : mu)
          for (auto& v : row) v = rnd();
      }
      return hilbert_concrete(c, o, mu, field);
    });
    rep.seed = seed;
    j["lsop"] = lsop_str;
    j["report"] = hilbert_to_json(rep);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  auto lsop = parse_lsop(lsop_str);
  if (!lsop) {
    std::cerr << "bad --lsop (use generic, punctured:v,v,..., random, split)\n";
    return kExitUsage;
  }
  HilbertReport rep = with_field(field, [&](auto one) {
    using K = decltype(one);
    Orientation o = fixture_orientation(fx, field);
    DegreeEngine<K> eng(c, o, one, lsop->punctured ? lsop->subset : 0);
    return hilbert_report(eng, field, seed);
  });
  j["lsop"] = lsop->punctured ? "punctured:" + face_str(lsop->subset) : "generic";
  j["report"] = hilbert_to_json(rep);
  (void)as_json;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degree maps and Hodge-Riemann determinants on "
               "simplicial homology manifolds"};
  app.require_subcommand(1);

  std::string fixture, input, char_str = "0", lsop_str = "generic", monomial;
  uint64_t seed = 12345;
  bool as_json = false, with_timings = false, ell = false;
  int q = 0, parallel = 1;

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    sub->add_option("--char", char_str, "coefficient characteristic: 0, p, or 2^e");
    sub->add_option("--seed", seed, "seed for randomized stages");
    sub->add_flag("--json", as_json, "machine-readable output");
    if (with_input) {
      sub->add_option("--fixture", fixture, "built-in complex name");
      sub->add_option("--input", input, "JSON file with {\"n\", \"facets\"}");
    }
  };

  auto* analyze = app.add_subcommand("analyze", "topology, orientation, h-vector");
  add_common(analyze);

  auto* degree = app.add_subcommand("degree", "degree of a monomial or of l^d");
  add_common(degree);
  degree->add_option("--monomial", monomial, "face monomial, e.g. x_1^2*x_3");
  degree->add_flag("--ell", ell, "compute deg(l^d)");
  degree->add_option("--lsop", lsop_str, "generic | punctured:v,v,...");

  auto* gram = app.add_subcommand("gram", "Hodge-Riemann Gram matrix and D_q");
  add_common(gram);
  gram->add_option("--q", q, "form degree, 0 <= q <= d/2")->required();
  gram->add_option("--lsop", lsop_str, "generic | punctured:v,v,...");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert functions of H and its quotient");
  add_common(hilbert);
  hilbert->add_option("--lsop", lsop_str,
                      "generic | punctured:v,v,... | random | split");

  auto* verify = app.add_subcommand("verify", "run theorem/conjecture checkers");
  add_common(verify, false);
  std::vector<std::string> check_names;
  std::string suite = "desk";
  verify->add_option("--suite", suite, "check suite (desk)");
  verify->add_option("--check", check_names, "run only the named checks");
  verify->add_option("--parallel", parallel, "worker threads");
  verify->add_flag("--timings", with_timings, "include runtimes in JSON");
  verify->add_flag("--list", "list check names and exit");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list built-in complexes");

  CLI11_PARSE(app, argc, argv);

  try {
    FieldSpec field = parse_field_or_exit(char_str);

    if (analyze->parsed()) {
      if (fixture.empty() && input.empty()) {
        std::cerr << "analyze needs --fixture or --input\n";
        return kExitUsage;
      }
      return cmd_analyze(fixture, input, field, as_json);
    }
    if (degree->parsed()) {
      if (fixture.empty() && input.empty()) {
        std::cerr << "degree needs --fixture or --input\n";
        return kExitUsage;
      }
      if (!ell && monomial.empty()) {
        std::cerr << "degree needs --monomial or --ell\n";
        return kExitUsage;
      }
      auto lsop = parse_lsop(lsop_str);
      if (!lsop) {
        std::cerr << "bad --lsop\n";
        return kExitUsage;
      }
      Fixture fx;
      SimplicialComplex c = load_complex(fixture, input, &fx);
      return with_field(field, [&](auto one) {
        return degree_for_field(c, fx, field, *lsop, monomial, ell, as_json, one);
      });
    }
    if (gram->parsed()) {
      if (fixture.empty() && input.empty()) {
        std::cerr << "gram needs --fixture or --input\n";
        return kExitUsage;
      }
      auto lsop = parse_lsop(lsop_str);
      if (!lsop) {
        std::cerr << "bad --lsop\n";
        return kExitUsage;
      }
      Fixture fx;
      SimplicialComplex c = load_complex(fixture, input, &fx);
      if (q < 0 || 2 * q > c.d()) {
        std::cerr << "--q must satisfy 0 <= q <= d/2\n";
        return kExitUsage;
      }
      return with_field(field, [&](auto one) {
        return gram_for_field(c, fx, field, *lsop, q, seed, as_json, one);
      });
    }
    if (hilbert->parsed()) {
      if (fixture.empty() && input.empty()) {
        std::cerr << "hilbert needs --fixture or --input\n";
        return kExitUsage;
      }
      return cmd_hilbert(fixture, input, field, lsop_str, seed, as_json);
    }
    if (verify->parsed()) {
      if (verify->count("--list")) {
        for (const auto& name : suite_check_names()) std::cout << name << "\n";
        return 0;
      }
      if (suite != "desk") {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
      }
      CheckOptions opts;
      opts.field = field;
      opts.seed = seed;
      opts.parallel = parallel;
      SuiteResult res = run_suite(check_names, opts);
      if (as_json) {
        Json j;
        j["schema"] = kReportSchema;
        j["field"] = field.str();
        j["seed"] = seed;
        Json arr = Json::array();
        for (const auto& o : res.outcomes)
          arr.push_back(outcome_to_json(o, with_timings));
        j["checks"] = arr;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& o : res.outcomes) {
          std::cout << status_str(o.status) << "  " << o.claim;
          if (o.status != CheckOutcome::Status::Verified)
            std::cout << "  " << o.evidence.dump();
          std::cout << "\n";
        }
      }
      return res.exit_code();
    }
    if (fixtures_cmd->parsed()) {
      for (const auto& name : fixture_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::NotAnLsop) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
