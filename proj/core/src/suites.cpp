#include "mk/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace mk {

namespace {

std::string lvl(int l) { return "l=" + std::to_string(l); }

Check make_check(std::string id, std::string property, bool passed, std::string detail = {}) {
  return Check{std::move(id), std::move(property), passed, false, std::move(detail)};
}

// Runs fn, turning exceptions into a failed check.
template <class Fn>
Check guarded(const std::string& id, const std::string& property, Fn fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Check c = make_check(id, property, false, e.what());
    c.precision_exhausted = std::string(e.what()) == "precision exhausted";
    return c;
  }
}

SuiteResult finish(std::string name, std::vector<Check> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return SuiteResult{std::move(name), std::move(checks)};
}

std::vector<Weight> ws(std::initializer_list<Weight> l) { return l; }

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* SuiteResult::first_failure() const {
  for (const Check& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string SuiteResult::json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json j = {{"id", c.id}, {"property", c.property}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.precision_exhausted) j["precision_exhausted"] = true;
    cs.push_back(j);
  }
  nlohmann::json j = {{"suite", name}, {"passed", passed()}, {"checks", cs}};
  return j.dump();
}

std::vector<LabelCase> standard_label_cases() {
  std::vector<LabelCase> out;
  SatakeEntry ai1 = satake_catalog(Family::AI1);
  SatakeEntry ci = satake_catalog(Family::CI, 2);
  for (int l = 0; l <= 2; ++l) {
    out.push_back({"AI1/" + lvl(l), label_for(ai1, l), ws({{0}, {2}, {4}, {6}, {8}})});
    out.push_back({"CI2/" + lvl(l), label_for(ci, l), ws({{0, 0}, {2, 0}, {2, 2}, {4, 0}, {4, 2}})});
  }
  return out;
}

SuiteResult suite_weight_shift_reduced() {
  const std::string prop = "f bar(f) times the weight equals the weight with k4 = |l|";
  std::vector<Check> checks;
  for (auto [f, n] : {std::pair{Family::AI1, 1}, {Family::AIIIb, 1}, {Family::CI, 2}, {Family::AIIIb, 2}, {Family::BI, 2}}) {
    SatakeEntry e = satake_catalog(f, n);
    for (int l = 0; l <= 3; ++l) {
      std::string id = "weight-shift/" + family_name(f) + std::to_string(e.n) + "/" + lvl(l);
      checks.push_back(guarded(id, prop, [&] {
        KLabel k0 = label_for(e, 0);
        int D = std::lcm(k0.D, label_for(e, l).D);
        k0 = label_for(e, 0, Q(0), D);
        KLabel target = make_label({k0.k[0], Q(0), Q(0), Q(std::abs(l)), k0.k[4]}, e.n, k0.family, D);
        bool ok = shifted_weight(k0, e, l).equals(koornwinder_weight(target));
        return make_check(id, prop, ok, ok ? "" : "products differ");
      }));
    }
  }
  return finish("weight-shift-reduced", std::move(checks));
}

SuiteResult suite_weight_shift_nonreduced() {
  const std::string prop = "f bar(f) times the weight equals the weight with the level moved into k2 or k4";
  std::vector<Check> checks;
  for (Q sigma : {Q(0), Q(1, 2), Q(1)})
    for (int m : {2, 3})
      for (int n : {1, 2})
        for (int l : {-2, -1, 1, 2}) {
          std::string id = "weight-shift/AIIIa" + std::to_string(n) + "/m=" + std::to_string(m) +
                           "/sigma=" + sigma.get_str() + "/" + lvl(l);
          checks.push_back(guarded(id, prop, [&] {
            SatakeEntry e = satake_catalog(Family::AIIIa, n, m);
            int D = std::lcm(label_for(e, 0, sigma).D, label_for(e, l, sigma).D);
            KLabel k0 = label_for(e, 0, sigma, D);
            Q up = l > 0 ? Q(l) : Q(0);
            Q down = l < 0 ? Q(-l) : Q(0);
            KLabel target = make_label({Q(1, 2), sigma + Q(1, 2) + up, Q(m - 1), down - sigma, Q(1)}, n, k0.family, D);
            bool ok = shifted_weight(k0, e, l, sigma).equals(koornwinder_weight(target));
            return make_check(id, prop, ok, ok ? "" : "products differ");
          }));
        }
  return finish("weight-shift-nonreduced", std::move(checks));
}

SuiteResult suite_orthogonality(const SuiteOptions& opt) {
  const std::string prop = "off-diagonal constant terms vanish mod v^(M+1)";
  std::vector<Check> checks;
  std::vector<LabelCase> cases = standard_label_cases();
  SatakeEntry a3 = satake_catalog(Family::AIIIa, 1, 2);
  for (int l : {0, 1}) cases.push_back({"AIIIa1/m=2/" + lvl(l), label_for(a3, l), ws({{0}, {2}, {4}, {6}})});
  for (const LabelCase& c : cases) {
    std::string id = "orthogonality/" + c.id;
    checks.push_back(guarded(id, prop, [&] {
      OrthogonalityReport R = verify_orthogonality(c.label, c.lambdas, opt.M);
      std::string detail;
      for (const PairVerdict& p : R.pairs)
        if (!p.zero)
          detail += weight_str(p.a) + "," + weight_str(p.b) + " order " + std::to_string(p.first_nonzero) + "; ";
      return make_check(id, prop, R.ok(), detail);
    }));
  }
  return finish("orthogonality", std::move(checks));
}

SuiteResult suite_rank1() {
  const std::string prop = "solved restrictions multiply to the closed form and f bar(f) is the shift factor";
  std::vector<Check> checks;
  auto add = [&](Rank1Kind kind, int n, int l, const Q& sigma) {
    std::string fam = kind == Rank1Kind::AI1 ? "AI1" : "AIV" + std::to_string(n);
    std::string id = "rank1/" + fam + "/sigma=" + sigma.get_str() + "/" + lvl(l);
    checks.push_back(guarded(id, prop, [&] {
      Rank1Report R = verify_rank1(kind, n, l, sigma);
      std::string detail;
      if (!R.ok()) detail = R.json();
      return make_check(id, prop, R.ok(), detail);
    }));
  };
  for (int l = -4; l <= 4; ++l) add(Rank1Kind::AI1, 1, l, Q(0));
  for (int n : {2, 3})
    for (Q sigma : {Q(0), Q(1, 2), Q(1)})
      for (int l = -3; l <= 3; ++l) add(Rank1Kind::AIV, n, l, sigma);
  return finish("rank1", std::move(checks));
}

SuiteResult suite_bar_invariance() {
  const std::string prop = "m-basis coefficients fixed by v -> 1/v";
  std::vector<Check> checks;
  for (const LabelCase& c : standard_label_cases())
    for (const Weight& lam : c.lambdas) {
      std::string id = "bar/" + c.id + "/" + weight_str(lam);
      checks.push_back(guarded(id, prop, [&] {
        bool ok = check_bar_invariance(build_polynomial(c.label, lam));
        return make_check(id, prop, ok, ok ? "" : "a coefficient is not bar invariant");
      }));
    }
  return finish("bar", std::move(checks));
}

SuiteResult suite_eigenvalue_identity() {
  const std::string prop = "ambient and restricted eigenvalue sums agree and the rho shift gives the level-l eigenvalue";
  std::vector<Check> checks;
  auto run = [&](Family f, int n, const std::vector<Weight>& lams) {
    for (const Weight& lam : lams)
      for (int l = 0; l <= 2; ++l) {
        std::string id = "eigenvalue-identity/" + family_name(f) + std::to_string(n) + "/" + weight_str(lam) + "/" + lvl(l);
        checks.push_back(guarded(id, prop, [&] {
          EigenIdentityReport R = eigenvalue_identity_check(f, n, lam, l);
          return make_check(id, prop, R.ok(), R.ok() ? "" : R.json());
        }));
      }
  };
  run(Family::AI1, 1, ws({{0}, {2}, {4}}));
  run(Family::CI, 2, ws({{0, 0}, {2, 0}, {2, 2}, {4, 2}}));
  return finish("eigenvalue-identity", std::move(checks));
}

SuiteResult suite_connection() {
  const std::string prop = "P^l expands in the level l+1 family with support {lambda, lambda - eps_1} and leading 1";
  std::vector<Check> checks;
  auto run = [&](const SatakeEntry& e, const std::string& name) {
    for (int l : {0, 1})
      for (const Weight& lam : ws({{0}, {2}, {4}})) {
        std::string id = "connection/" + name + "/" + lvl(l) + "/" + weight_str(lam);
        checks.push_back(guarded(id, prop, [&] {
          ConnectionResult R = connection_coeffs(e, l, 1, lam);
          bool ok = R.reproduces && R.two_term;
          return make_check(id, prop, ok, ok ? "" : R.json());
        }));
      }
  };
  run(satake_catalog(Family::AI1), "AI1");
  run(satake_catalog(Family::AIVm, 0, 2), "AIV2");
  return finish("connection", std::move(checks));
}

SuiteResult suite_operator_soundness(const SuiteOptions& opt) {
  std::vector<Check> checks;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const LabelCase& c : standard_label_cases()) {
    const KLabel& k = c.label;
    Weight top = c.lambdas.back();

    std::string id = "operator/" + c.id + "/triangular";
    checks.push_back(guarded(id, "operator is triangular with distinct diagonal entries", [&] {
      OperatorAction A = operator_action(k, top);
      std::string detail;
      for (size_t i = 0; i < A.basis.size(); ++i)
        for (size_t j = i + 1; j < A.basis.size(); ++j)
          if (A.eigenvalue(A.basis[i]) == A.eigenvalue(A.basis[j]))
            detail += "equal eigenvalues at " + weight_str(A.basis[i]) + "," + weight_str(A.basis[j]) + "; ";
      return make_check(id, "operator is triangular with distinct diagonal entries", detail.empty(), detail);
    }));

    const std::string lin = "operator is linear and preserves invariance on random inputs";
    id = "operator/" + c.id + "/random";
    checks.push_back(guarded(id, lin, [&] {
      std::vector<Weight> basis = dominant_weights_below(top, Lattice::BC);
      bool ok = true;
      for (int r = 0; r < opt.random_cases && ok; ++r) {
        GAElem f(k.n), expected(k.n);
        for (const Weight& mu : basis) {
          int a = coef(rng);
          if (a == 0) continue;
          f += orbit_sum(mu) * Scalar(Q(a));
          expected += apply_qdiff(k, {}, orbit_sum(mu)) * Scalar(Q(a));
        }
        GAElem got = apply_qdiff(k, {}, f);
        ok = got == expected && got.is_w_invariant();
      }
      return make_check(id, lin, ok, ok ? "" : "random combination disagrees");
    }));

    const std::string poly = "literal form is rejected as non-polynomial exactly when l >= 1";
    id = "operator/" + c.id + "/literal";
    checks.push_back(guarded(id, poly, [&] {
      bool shifted = k.k[3] != 0;
      bool threw = false;
      try {
        apply_qdiff(k, {}, orbit_sum(c.lambdas[1]), QDiffForm::Literal);
      } catch (const std::domain_error& e) {
        threw = std::string(e.what()) == "non-polynomial result";
      }
      return make_check(id, poly, threw == shifted, threw ? "rejected" : "polynomial");
    }));

    for (const Weight& lam : c.lambdas) {
      const std::string dual = "operator-exact and Gram-Schmidt coefficients agree mod v^(M+1)";
      id = "operator/" + c.id + "/dual/" + weight_str(lam);
      checks.push_back(guarded(id, dual, [&] {
        int d = compare_dual_paths(build_polynomial(k, lam), build_polynomial_gs(k, lam, opt.M));
        return make_check(id, dual, d < 0, d < 0 ? "" : "first difference at order " + std::to_string(d));
      }));
    }
  }
  return finish("operator", std::move(checks));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"weight-shift", "orthogonality",       "rank1",     "bar",
                                                 "eigenvalue-identity", "connection", "operator"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "weight-shift") {
    SuiteResult a = suite_weight_shift_reduced();
    SuiteResult b = suite_weight_shift_nonreduced();
    a.checks.insert(a.checks.end(), b.checks.begin(), b.checks.end());
    return finish("weight-shift", std::move(a.checks));
  }
  if (name == "orthogonality") return suite_orthogonality(opt);
  if (name == "rank1") return suite_rank1();
  if (name == "bar") return suite_bar_invariance();
  if (name == "eigenvalue-identity") return suite_eigenvalue_identity();
  if (name == "connection") return suite_connection();
  if (name == "operator") return suite_operator_soundness(opt);
  throw std::invalid_argument("unknown suite");
}

}  // namespace mk
