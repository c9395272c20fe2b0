#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "mk/identities.hpp"

namespace mk {

namespace {

// Laurent polynomial keyed by v-exponent.
using VSum = std::map<int, long>;

int to_int(const Q& x, const char* what) {
  if (x.get_den() != 1) throw std::domain_error(std::string("non-integral exponent in ") + what);
  return static_cast<int>(x.get_num().get_si());
}

Scalar vsum_scalar(const VSum& s) {
  Scalar r(0);
  for (const auto& [e, c] : s)
    if (c != 0) r += Scalar::monomial(Q(c), e);
  return r;
}

std::vector<Q> apply_q(const SignedPerm& g, const std::vector<Q>& x) {
  std::vector<Q> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[g.perm[i]] = g.sign[i] * x[i];
  return r;
}

Q dot(const std::vector<Q>& a, const std::vector<Q>& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Q> eps_coords(const Weight& w) {
  std::vector<Q> r;
  for (int x : w) r.push_back(Q(x) / 2);
  return r;
}

// sum over the restricted Weyl group of base^((w d, x)), d and x in eps-coordinates
VSum restricted_sum(const std::vector<Q>& d, const std::vector<Q>& x, int base_vexp) {
  VSum s;
  for (const SignedPerm& g : weyl_group(static_cast<int>(d.size()))) s[to_int(dot(apply_q(g, d), x) * base_vexp, "restricted sum")] += 1;
  return s;
}

std::vector<Q> plus(std::vector<Q> a, const std::vector<Q>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

AmbientData ambient_data(Family f, int n) {
  AmbientData a;
  if (f == Family::AI1 && n == 1) {
    // coordinates in units of the fundamental weight, (omega, omega) = 1/2;
    // the restricted root eps_1 is the simple root 2 omega
    a.algebra = "sl2";
    a.dim = 1;
    a.dot_scale = Q(1, 2);
    a.eps_scale = 2;
    a.weyl = weyl_group(1);
    a.mu = {Q(1)};
    a.rho = {Q(1)};
    return a;
  }
  if (f == Family::CI && n == 2) {
    // standard e-coordinates of sp4 with eps_i = 2 e_i
    a.algebra = "sp4";
    a.dim = 2;
    a.dot_scale = 1;
    a.eps_scale = 2;
    a.weyl = weyl_group(2);
    a.mu = {Q(1), Q(0)};
    a.rho = {Q(2), Q(1)};
    return a;
  }
  throw std::invalid_argument("ambient data not stored");
}

std::vector<Q> rho_label(const KLabel& k) {
  std::vector<Q> r(k.n);
  for (int i = 0; i < k.n; ++i) r[i] = (k.k[0] + k.k[1] + k.k[2] + k.k[3]) / 2 + Q(k.n - 1 - i) * k.k[4];
  return r;
}

std::string EigenIdentityReport::json() const {
  nlohmann::json j = {{"family", family},
                      {"level", l},
                      {"lambda", lambda},
                      {"N", N},
                      {"lhs", lhs.str()},
                      {"rhs", rhs.str()},
                      {"operator_eigenvalue", operator_value.str()},
                      {"closed_form", closed_value.str()},
                      {"identity", identity_ok},
                      {"operator", operator_ok},
                      {"rho_shift", rho_shift_ok},
                      {"ok", ok()}};
  return j.dump();
}

EigenIdentityReport eigenvalue_identity_check(Family f, int n, const Weight& lambda, int l) {
  SatakeEntry e = satake_catalog(f, n);
  if (!e.reduced) throw std::invalid_argument("non-reduced entry");
  if (f == Family::EVII) throw std::invalid_argument("excluded family");
  AmbientData amb = ambient_data(f, e.n);
  if (static_cast<int>(lambda.size()) != e.n || !is_dominant(lambda) || !is_even(lambda))
    throw std::invalid_argument("lambda must be dominant and integral");

  KLabel k0 = label_for(e, 0);
  KLabel kl = label_for(e, l, Q(0), k0.D);
  int base_v = kl.base_exp();
  Q q_v = Q(base_v) / e.base_exponent;  // q = v^(2D / base exponent)

  EigenIdentityReport R;
  R.family = family_name(f);
  R.l = l;
  R.lambda = lambda;
  std::vector<Q> lam = eps_coords(lambda);

  // sum over the ambient Weyl group of q^((w mu, lambda + rho))
  std::vector<Q> lam_amb(amb.dim);
  for (int i = 0; i < amb.dim; ++i) lam_amb[i] = lam[i] * amb.eps_scale;
  VSum lhs;
  for (const SignedPerm& g : amb.weyl) {
    Q ex = dot(apply_q(g, amb.mu), plus(lam_amb, amb.rho)) * amb.dot_scale * q_v;
    lhs[to_int(ex, "ambient sum")] += 1;
  }
  R.N = static_cast<int>(amb.weyl.size() / weyl_group(e.n).size());
  std::vector<Q> half_eps(e.n, Q(0));
  half_eps[0] = Q(1, 2);
  VSum rhs = restricted_sum(half_eps, plus(lam, rho_label(k0)), base_v);
  for (auto& [ex, c] : rhs) c *= R.N;
  R.lhs = vsum_scalar(lhs);
  R.rhs = vsum_scalar(rhs);
  R.identity_ok = R.lhs == R.rhs;

  std::vector<Q> shifted = rho_label(k0);
  for (auto& x : shifted) x += Q(std::abs(l)) / 2;
  R.rho_shift_ok = shifted == rho_label(kl);

  std::vector<Q> eps1(e.n, Q(0));
  eps1[0] = 1;
  Scalar lead = Scalar::vpow(to_int(dot(eps1, shifted) * base_v, "eigenvalue prefactor"));
  R.closed_value = lead * (vsum_scalar(restricted_sum(eps1, plus(lam, shifted), base_v)) -
                           vsum_scalar(restricted_sum(eps1, shifted, base_v)));
  R.operator_value = operator_action(kl, lambda).eigenvalue(lambda);
  R.operator_ok = R.operator_value == R.closed_value;
  return R;
}

std::string ConnectionResult::json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& [w, c] : coeffs) cs.push_back({{"mu", w}, {"c", c.str()}});
  nlohmann::json j = {{"family", family}, {"level", l},       {"shift", shift},          {"lambda", lambda},
                      {"coeffs", cs},     {"reproduces", reproduces}, {"two_term", two_term}};
  return j.dump();
}

ConnectionResult connection_coeffs(const SatakeEntry& e, int l, int shift, const Weight& lambda, const Q& sigma) {
  if (shift < 1) throw std::invalid_argument("shift must be positive");
  int D = std::lcm(label_for(e, l, sigma).D, label_for(e, l + shift, sigma).D);
  KLabel from = label_for(e, l, sigma, D);
  KLabel to = label_for(e, l + shift, sigma, D);

  ConnectionResult R;
  R.family = family_name(e.family);
  R.l = l;
  R.shift = shift;
  R.lambda = lambda;
  MKPolynomial P = build_polynomial(from, lambda);
  std::map<Weight, Scalar> rest = P.coeffs;
  std::vector<Weight> basis = dominant_weights_below(lambda, Lattice::BC);
  GAElem rebuilt(e.n);
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    auto r = rest.find(*it);
    if (r == rest.end() || r->second.is_zero()) continue;
    Scalar d = r->second;
    MKPolynomial Q1 = build_polynomial(to, *it);
    for (const auto& [mu, c] : Q1.coeffs) {
      rest[mu] -= d * c;
      if (rest[mu].is_zero()) rest.erase(mu);
    }
    R.coeffs[*it] = d;
    rebuilt += Q1.elem() * d;
  }
  R.reproduces = rest.empty() && rebuilt == P.elem();

  Weight below = lambda - unit_weight(e.n, 0);
  if (lambda == zero_weight(e.n)) {
    R.two_term = R.coeffs.size() == 1;
  } else {
    R.two_term = R.coeffs.size() == 2 && R.coeffs.count(below) && R.coeffs.count(lambda) && R.coeffs.at(lambda).is_one();
  }
  return R;
}

}  // namespace mk
