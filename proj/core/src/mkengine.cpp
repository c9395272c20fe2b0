#include "mk/mkengine.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace mk {

namespace {

nlohmann::json label_json(const KLabel& k) {
  nlohmann::json ks = nlohmann::json::array();
  for (const Q& x : k.k) ks.push_back(x.get_str());
  return {{"family", k.family}, {"n", k.n}, {"D", k.D}, {"k", ks}};
}

std::vector<Weight> polynomial_basis(const Weight& lambda) {
  if (!is_dominant(lambda) || !is_even(lambda)) throw std::invalid_argument("lambda must be dominant and integral");
  return dominant_weights_below(lambda, Lattice::BC);
}

}  // namespace

GAElem MKPolynomial::elem() const { return from_m_basis(label.n, coeffs); }

std::string MKPolynomial::json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& [w, c] : coeffs) cs.push_back({{"mu", w}, {"c", c.str()}});
  nlohmann::json j = {{"label", label_json(label)},
                      {"lambda", lambda},
                      {"basis", "m"},
                      {"construction", construction},
                      {"coeffs", cs}};
  return j.dump();
}

MKPolynomial build_polynomial(const KLabel& k, const Weight& lambda, QDiffForm form) {
  std::vector<Weight> basis = polynomial_basis(lambda);
  OperatorAction A = operator_action(k, lambda, form);
  Scalar E = A.eigenvalue(lambda);
  std::map<Weight, Scalar> c;
  c[lambda] = Scalar(1);
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    const Weight& mu = *it;
    if (mu == lambda) continue;
    Scalar rhs(0);
    for (const auto& [nu, cn] : c) rhs += A.entry(mu, nu) * cn;
    Scalar gap = E - A.eigenvalue(mu);
    if (gap.is_zero()) throw std::domain_error("non-generic parameters");
    Scalar x = rhs / gap;
    if (!x.is_zero()) c[mu] = x;
  }
  MKPolynomial P;
  P.label = k;
  P.lambda = lambda;
  P.coeffs = std::move(c);
  return P;
}

GSPolynomial build_polynomial_gs(const KLabel& k, const Weight& lambda, int M) {
  std::vector<Weight> basis = polynomial_basis(lambda);
  int window = 0;
  for (int x : lambda) window = std::max(window, 2 * std::abs(x));
  SeriesGA W = expand(koornwinder_weight(k), M, window);

  std::map<Weight, std::vector<Weight>> orbits;
  for (const Weight& mu : basis) orbits[mu] = weyl_orbit(mu);
  auto gram = [&](const Weight& a, const Weight& b) {
    TruncSeries s(M);
    for (const Weight& x : orbits[a])
      for (const Weight& y : orbits[b]) s += W.coeff(-(x + y));
    return s;
  };

  // Solve G c = -g over Q[[v]] / v^(M+1) for the lower coefficients.
  size_t r = basis.size() - 1;
  std::vector<std::vector<TruncSeries>> G(r, std::vector<TruncSeries>(r + 1, TruncSeries(M)));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) G[i][j] = gram(basis[i], basis[j]);
    G[i][r] = -gram(basis[i], lambda);
  }
  for (size_t col = 0; col < r; ++col) {
    size_t piv = col;
    while (piv < r && G[piv][col][0] == 0) ++piv;
    if (piv == r) throw std::domain_error("precision exhausted");
    std::swap(G[piv], G[col]);
    TruncSeries inv = G[col][col].inverse();
    for (size_t j = col; j <= r; ++j) G[col][j] = G[col][j] * inv;
    for (size_t i = 0; i < r; ++i) {
      if (i == col || G[i][col].is_zero()) continue;
      TruncSeries f = G[i][col];
      for (size_t j = col; j <= r; ++j) G[i][j] -= f * G[col][j];
    }
  }

  GSPolynomial P;
  P.label = k;
  P.lambda = lambda;
  P.M = M;
  for (size_t i = 0; i < r; ++i)
    if (!G[i][r].is_zero()) P.coeffs.emplace(basis[i], G[i][r]);
  TruncSeries one(M);
  one[0] = 1;
  P.coeffs.emplace(lambda, one);
  return P;
}

bool OrthogonalityReport::ok() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairVerdict& p) { return p.zero; });
}

std::string OrthogonalityReport::json() const {
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : pairs) {
    nlohmann::json e = {{"a", p.a}, {"b", p.b}, {"zero", p.zero}};
    if (!p.zero) e["first_nonzero"] = p.first_nonzero;
    ps.push_back(e);
  }
  nlohmann::json j = {{"label", label_json(label)}, {"precision", M}, {"ok", ok()}, {"pairs", ps}};
  return j.dump();
}

OrthogonalityReport verify_orthogonality(const KLabel& k, const std::vector<Weight>& lambdas, int M) {
  OrthogonalityReport R;
  R.label = k;
  R.M = M;
  std::vector<GAElem> polys;
  for (const Weight& l : lambdas) polys.push_back(build_polynomial(k, l).elem());
  PochProduct W = koornwinder_weight(k);
  for (size_t i = 0; i < lambdas.size(); ++i)
    for (size_t j = i + 1; j < lambdas.size(); ++j) {
      // P_j is W-invariant, so P_j(x^-1) = P_j.
      ShiftedSeries ct = constant_term_against(polys[i] * polys[j], W, M);
      PairVerdict v{lambdas[i], lambdas[j]};
      int f = ct.s.first_nonzero();
      if (f >= 0) {
        v.zero = false;
        v.first_nonzero = f - ct.shift;
      }
      R.pairs.push_back(v);
    }
  return R;
}

bool check_bar_invariance(const MKPolynomial& P) {
  return std::all_of(P.coeffs.begin(), P.coeffs.end(), [](const auto& kv) { return kv.second.bar() == kv.second; });
}

int compare_dual_paths(const MKPolynomial& P, const GSPolynomial& G) {
  std::map<Weight, int> keys;
  for (const auto& [w, c] : P.coeffs) keys[w];
  for (const auto& [w, c] : G.coeffs) keys[w];
  int first = -1;
  for (const auto& [w, unused] : keys) {
    auto pit = P.coeffs.find(w);
    TruncSeries a = pit == P.coeffs.end() ? TruncSeries(G.M) : scalar_to_series(pit->second, G.M);
    auto git = G.coeffs.find(w);
    TruncSeries b = git == G.coeffs.end() ? TruncSeries(G.M) : git->second;
    int d = (a - b).first_nonzero();
    if (d >= 0 && (first < 0 || d < first)) first = d;
  }
  return first;
}

}  // namespace mk
