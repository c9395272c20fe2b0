#include "mk/qsp1.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace mk {

namespace {

Mat zeros(int d) { return Mat(d, Vec(d, Scalar(0))); }

Mat identity(int d) {
  Mat m = zeros(d);
  for (int i = 0; i < d; ++i) m[i][i] = Scalar(1);
  return m;
}

Mat add(Mat a, const Mat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  return a;
}

Mat scale(Mat a, const Scalar& s) {
  for (auto& row : a)
    for (auto& x : row)
      if (!x.is_zero()) x *= s;
  return a;
}

Mat mul(const Mat& a, const Mat& b) {
  size_t d = a.size();
  Mat r = zeros(static_cast<int>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < d; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Mat transpose(const Mat& a) {
  Mat r = zeros(static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) r[j][i] = a[i][j];
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  size_t da = a.size(), db = b.size();
  Mat r = zeros(static_cast<int>(da * db));
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t k = 0; k < db; ++k)
        for (size_t l = 0; l < db; ++l)
          if (!b[k][l].is_zero()) r[i * db + k][j * db + l] = a[i][j] * b[k][l];
    }
  return r;
}

Vec apply(const Mat& a, const Vec& x) {
  Vec r(a.size(), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero() && !x[j].is_zero()) r[i] += a[i][j] * x[j];
  return r;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r;
  for (const Scalar& x : a)
    for (const Scalar& y : b) r.push_back(x * y);
  return r;
}

bool is_eigen(const Mat& a, const Vec& x, const Scalar& value) {
  Vec ax = apply(a, x);
  for (size_t i = 0; i < x.size(); ++i)
    if (!(ax[i] == x[i] * value)) return false;
  return true;
}

// Basis of the common kernel of the stacked rows.
std::vector<Vec> nullspace(std::vector<Vec> rows, int d) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int col = 0; col < d && r < rows.size(); ++col) {
    size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = rows[r][col].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (int j = col; j < d; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  std::vector<Vec> basis;
  for (int free = 0; free < d; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec x(d, Scalar(0));
    x[free] = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][free];
    basis.push_back(x);
  }
  return basis;
}

void append_rows(std::vector<Vec>& rows, const Mat& a, const Scalar& value) {
  for (size_t i = 0; i < a.size(); ++i) {
    Vec row = a[i];
    row[i] -= value;
    rows.push_back(row);
  }
}

// Quantum integer [k] in q = v^qv.
Scalar qint(int k, int qv) {
  Scalar q = Scalar::vpow(qv);
  return (q.pow(k) - q.pow(-k)) / (q - q.inverse());
}

Scalar sign_pow(int n) { return Scalar(Q(n % 2 == 0 ? 1 : -1)); }

Mat diag(const std::vector<Scalar>& d) {
  Mat m = zeros(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

Mat inverse_diag(const Mat& k) {
  Mat m = zeros(static_cast<int>(k.size()));
  for (size_t i = 0; i < k.size(); ++i) m[i][i] = k[i][i].inverse();
  return m;
}

std::string idx(int i) { return std::to_string(i); }

// B_i = F_i + d X_i K_i^-1 + t K_i^-1 on the module.
Mat coideal_generator(const Rank1Module& M, bool first, const Scalar& d, const Scalar& t) {
  int i = first ? 1 : M.n;
  const Mat& F = M.gen("F" + idx(i));
  Mat Kinv = inverse_diag(M.gen("K" + idx(i)));
  Mat B = add(F, scale(mul(M.gen(first ? "X1" : "Xn"), Kinv), d));
  if (!t.is_zero()) B = add(B, scale(Kinv, t));
  return B;
}

Mat k1_kn_inverse(const Rank1Module& M) { return mul(M.gen("K1"), inverse_diag(M.gen("K" + idx(M.n)))); }

Vec normalized(Vec x, const Scalar& last) {
  if (x.back().is_zero()) return x;
  Scalar f = last / x.back();
  for (auto& c : x) c *= f;
  return x;
}

Vec solve_one(const std::vector<Vec>& rows, int d) {
  std::vector<Vec> k = nullspace(rows, d);
  if (k.size() != 1) throw std::domain_error("character not integrable here");
  return k[0];
}

Weight w1(int x) { return Weight{x}; }

}  // namespace

const Mat& Rank1Module::gen(const std::string& name) const {
  auto it = gens.find(name);
  if (it == gens.end()) throw std::out_of_range("no generator " + name);
  return it->second;
}

Rank1Module build_rank1(Rank1Kind kind, int n, const Scalar& c1, const Scalar& cn, const Scalar& s, int qv) {
  if (qv < 1) throw std::invalid_argument("q must be a positive power of v");
  Rank1Module M;
  M.kind = kind;
  M.qv = qv;
  M.s = s;
  if (kind == Rank1Kind::AI1) {
    if (c1.is_zero()) throw std::invalid_argument("zero parameter");
    M.n = 1;
    M.dim = 2;
    M.c1 = M.cn = c1;
    M.rho_exp = 2;
    M.ambient = {{1}, {-1}};
    M.restricted = {w1(1), w1(-1)};
    Mat E = zeros(2), F = zeros(2);
    E[0][1] = Scalar(1);
    F[1][0] = Scalar(1);
    M.gens["E1"] = E;
    M.gens["F1"] = F;
    M.gens["K1"] = diag({M.q(), M.q(-1)});
    M.gens["X1"] = M.gens["Xn"] = E;
    Mat B = coideal_generator(M, true, c1, s);
    M.gens["B"] = M.gens["B1"] = B;
    M.gens["rho(B)"] = transpose(B);
    return M;
  }
  if (n < 2) throw std::invalid_argument("AIV needs n >= 2");
  if (c1.is_zero() || cn.is_zero()) throw std::invalid_argument("zero parameter");
  if (!s.is_zero()) throw std::invalid_argument("AIV has no s parameter");
  M.n = n;
  M.dim = n + 1;
  M.c1 = c1;
  M.cn = cn;
  M.rho_exp = n;
  for (int j = 0; j <= n; ++j) {
    std::vector<int> e(n + 1, 0);
    e[j] = 1;
    M.ambient.push_back(e);
    M.restricted.push_back(w1(j == 0 ? 1 : j == n ? -1 : 0));
  }
  for (int i = 1; i <= n; ++i) {
    Mat E = zeros(n + 1), F = zeros(n + 1);
    E[i - 1][i] = Scalar(1);
    F[i][i - 1] = Scalar(1);
    std::vector<Scalar> k(n + 1, Scalar(1));
    k[i - 1] = M.q();
    k[i] = M.q(-1);
    M.gens["E" + idx(i)] = E;
    M.gens["F" + idx(i)] = F;
    M.gens["K" + idx(i)] = diag(k);
  }
  // images of E_tau(1) = E_n and E_tau(n) = E_1 under the longest element of
  // the compact part
  Mat X1 = zeros(n + 1), Xn = zeros(n + 1);
  X1[1][n] = Scalar(1);
  Xn[0][n - 1] = sign_pow(n) * M.q(2 - n);
  M.gens["X1"] = X1;
  M.gens["Xn"] = Xn;
  M.gens["rho(X1)"] = transpose(X1);
  M.gens["rho(Xn)"] = transpose(Xn);
  M.gens["B1"] = coideal_generator(M, true, c1, Scalar(0));
  M.gens["Bn"] = coideal_generator(M, false, cn, Scalar(0));
  M.gens["rho(B1)"] = transpose(M.gens["B1"]);
  M.gens["rho(Bn)"] = transpose(M.gens["Bn"]);
  return M;
}

Rank1Module build_ai1_default(int qv) {
  return build_rank1(Rank1Kind::AI1, 1, Scalar::vpow(-qv), Scalar(0), Scalar(0), qv);
}

SphericalPair solve_spherical(const Rank1Module& M, int level, int direction) {
  if (level < 0 || (direction != 1 && direction != -1)) throw std::invalid_argument("level must be nonnegative");
  SphericalPair P;
  P.level = level;
  P.direction = direction;
  int d = M.dim;
  if (M.kind == Rank1Kind::AI1) {
    if (!M.s.is_zero()) throw std::domain_error("character not integrable here");
    int e = direction;
    P.d1 = P.dn = M.c1;
    P.t = qint(e * level, M.qv);
    P.right_value = qint(e * (level + 1), M.qv);
    std::vector<Vec> rows;
    append_rows(rows, coideal_generator(M, true, P.d1, P.t), P.right_value);
    P.right = normalized(solve_one(rows, d), Scalar(1));

    // rho-twisted algebra: c' = c q^2, t' = q [l], transposed action
    Scalar tl = M.q() * P.t;
    P.left_value = M.q() * P.right_value;
    rows.clear();
    append_rows(rows, transpose(coideal_generator(M, true, M.c1 * M.q(M.rho_exp), tl)), P.left_value);
    P.left = normalized(solve_one(rows, d), Scalar(1));

    Scalar sgn = Scalar(Q(e));
    P.closed_form = P.right == Vec{sgn * M.q(-level), Scalar(1)} && P.left == Vec{sgn * M.q(-level - 1), Scalar(1)};
    return P;
  }

  if (direction != 1) throw std::invalid_argument("negative AIV levels use the tau-flipped parameters");
  int n = M.n;
  P.d1 = M.q(-level) * M.c1;
  P.dn = M.q(level) * M.cn;
  P.t = Scalar(0);
  P.right_value = P.left_value = M.q();
  auto stack = [&](const Scalar& a1, const Scalar& an, bool twisted) {
    std::vector<Vec> rows;
    auto put = [&](const Mat& m, const Scalar& val) { append_rows(rows, twisted ? transpose(m) : m, val); };
    put(coideal_generator(M, true, a1, Scalar(0)), Scalar(0));
    put(coideal_generator(M, false, an, Scalar(0)), Scalar(0));
    put(k1_kn_inverse(M), M.q());
    for (int j = 2; j < n; ++j) {
      put(M.gen("E" + idx(j)), Scalar(0));
      put(M.gen("F" + idx(j)), Scalar(0));
      put(M.gen("K" + idx(j)), Scalar(1));
    }
    return rows;
  };
  P.right = normalized(solve_one(stack(P.d1, P.dn, false), d), Scalar(-1));
  Scalar rq = M.q(M.rho_exp);
  P.left = normalized(solve_one(stack(P.d1 * rq, P.dn * rq, true), d), Scalar(-1));

  Vec v(d, Scalar(0)), f(d, Scalar(0));
  v[0] = M.q(-level) * M.c1;
  v[n] = Scalar(-1);
  f[0] = sign_pow(n) * M.q(-level - 1) * M.cn.inverse();
  f[n] = Scalar(-1);
  P.closed_form = P.right == v && P.left == f;
  return P;
}

GAElem matrix_coeff_res(const SphericalPair& p, const Rank1Module& M) {
  GAElem r(1);
  for (int j = 0; j < M.dim; ++j) r.add_term(M.restricted[j], p.left[j] * p.right[j]);
  return r;
}

GAElem single_level_res(const Rank1Module& M, int level, int direction) {
  (void)direction;  // both directions give the same restriction for AI1
  Scalar y(1);
  if (M.kind == Rank1Kind::AIV) y = sign_pow(M.n) * M.c1.inverse() * M.cn;
  GAElem r = GAElem::monomial(w1(1));
  r.add_term(w1(-1), y * M.q(2 * level + 1));
  return r;
}

namespace {

// -e^(l eps/2) prod_{j<l} (1 + sign y q^(2j+1) e^(-eps)), weights negated when flip
GAElem closed_product(int l, const Scalar& y, int qv, int sign, bool flip) {
  if (l == 0) return GAElem::constant(1, Scalar(1));
  GAElem r = GAElem::monomial(w1(l), Scalar(-1));
  for (int j = 0; j < l; ++j) {
    GAElem f = GAElem::constant(1, Scalar(1));
    f.add_term(w1(-2), Scalar(Q(sign)) * y * Scalar::vpow(qv * (2 * j + 1)));
    r = r * f;
  }
  return flip ? ga_bar(r) : r;
}

Scalar q_power(const Q& x, int qv, const char* what) {
  Q e = x * qv;
  if (e.get_den() != 1) throw std::invalid_argument(what);
  return Scalar::vpow(static_cast<int>(e.get_num().get_si()));
}

GAElem fundamental(Rank1Kind kind, int n, int l, const Q& sigma, int qv, int sign) {
  if (kind == Rank1Kind::AI1) return closed_product(std::abs(l), Scalar(1), qv, sign, false);
  // c1 = (-1)^n q^(-2 sigma), cn = 1: (-1)^n c1^-1 cn = q^(2 sigma), tau-flipped q^(-2 sigma)
  (void)n;
  Scalar y = q_power(l > 0 ? Q(2 * sigma) : Q(-2 * sigma), qv, "sigma incompatible with D");
  return closed_product(std::abs(l), y, qv, sign, l < 0);
}

}  // namespace

GAElem fundamental_res(Rank1Kind kind, int n, int l, const Q& sigma, int qv) {
  return fundamental(kind, n, l, sigma, qv, 1);
}

GAElem fundamental_res_literal(Rank1Kind kind, int n, int l, const Q& sigma, int qv) {
  return fundamental(kind, n, l, sigma, qv, -1);
}

Scalar aiiia_parameter(const Q& sigma, int m, int qv) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  return sign_pow(m) * q_power(Q(2 * sigma), qv, "sigma incompatible with D");
}

GAElem expand_finite(const PochProduct& P) {
  GAElem r = P.prefactor();
  int n = P.rank();
  for (const auto& [s, m] : P.factors()) {
    if (s.length == kInfinite || m < 0) throw std::invalid_argument("product is not a finite polynomial");
    for (int rep = 0; rep < m; ++rep)
      for (int k = 0; k < s.length; ++k) {
        GAElem f = GAElem::constant(n, Scalar(1));
        f.add_term(s.weight, Scalar::monomial(Q(-s.sign), s.v_exp + k * s.base_exp));
        r = r * f;
      }
  }
  return r;
}

bool MultiplicativityReport::ok() const {
  bool levels = std::all_of(per_level.begin(), per_level.end(), [](bool b) { return b; });
  return levels && (!tensor_checked || tensor_spherical);
}

std::string MultiplicativityReport::json() const {
  nlohmann::json j = {{"per_level", per_level},
                      {"tensor_checked", tensor_checked},
                      {"tensor_spherical", tensor_spherical},
                      {"ok", ok()}};
  return j.dump();
}

namespace {

// Iterated coproduct on V^(x k) with D(E) = E x 1 + K x E, D(F) = F x K^-1 + 1 x F.
struct Tensor {
  const Rank1Module& M;
  int k;

  Mat power(const Mat& a, int p) const {
    Mat r = identity(1);
    for (int i = 0; i < p; ++i) r = kron(r, a);
    return r;
  }

  Mat E(int i) const {
    const Mat& e = M.gen("E" + idx(i));
    const Mat& K = M.gen("K" + idx(i));
    Mat I = identity(M.dim);
    Mat r = zeros(static_cast<int>(power(I, k).size()));
    for (int p = 0; p < k; ++p) r = add(r, kron(kron(power(K, p), e), power(I, k - p - 1)));
    return r;
  }

  Mat F(int i) const {
    const Mat& f = M.gen("F" + idx(i));
    Mat Kinv = inverse_diag(M.gen("K" + idx(i)));
    Mat I = identity(M.dim);
    Mat r = zeros(static_cast<int>(power(I, k).size()));
    for (int p = 0; p < k; ++p) r = add(r, kron(kron(power(I, p), f), power(Kinv, k - p - 1)));
    return r;
  }

  Mat Kinv(int i) const { return power(inverse_diag(M.gen("K" + idx(i))), k); }

  // F_i + c E_tau(i) K_i^-1 with E_tau(i) primitive (AI1, AIV_2)
  Mat B(bool first, const Scalar& c) const {
    int i = first ? 1 : M.n;
    int ti = M.kind == Rank1Kind::AI1 ? 1 : (first ? M.n : 1);
    return add(F(i), scale(mul(E(ti), Kinv(i)), c));
  }
};

}  // namespace

MultiplicativityReport verify_multiplicativity(const std::vector<SphericalPair>& pairs, const Rank1Module& M) {
  MultiplicativityReport R;
  Vec v{Scalar(1)}, f{Scalar(1)};
  std::vector<Weight> wts{w1(0)};
  GAElem prod = GAElem::constant(1, Scalar(1));
  for (const SphericalPair& p : pairs) {
    v = kron(v, p.right);
    f = kron(f, p.left);
    std::vector<Weight> next;
    for (const Weight& a : wts)
      for (const Weight& b : M.restricted) next.push_back(a + b);
    wts = std::move(next);
    prod = prod * matrix_coeff_res(p, M);
    GAElem tensor(1);
    for (size_t i = 0; i < v.size(); ++i) tensor.add_term(wts[i], f[i] * v[i]);
    R.per_level.push_back(tensor == prod);
  }

  bool primitive = M.kind == Rank1Kind::AI1 || M.n == 2;
  if (!primitive || pairs.empty()) return R;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].level != static_cast<int>(i) || pairs[i].direction != pairs[0].direction) return R;
  R.tensor_checked = true;
  int k = static_cast<int>(pairs.size());
  int e = pairs[0].direction;
  Tensor T{M, k};
  Scalar rq = M.q(M.rho_exp);
  bool ok = true;
  if (M.kind == Rank1Kind::AI1) {
    Scalar chi = qint(e * k, M.qv);
    ok = is_eigen(T.B(true, M.c1), v, chi) && is_eigen(transpose(T.B(true, M.c1 * rq)), f, M.q() * chi);
  } else {
    Mat K = mul(T.power(M.gen("K1"), k), T.Kinv(M.n));
    for (bool first : {true, false}) {
      Scalar c = first ? M.c1 : M.cn;
      ok = ok && is_eigen(T.B(first, c), v, Scalar(0)) && is_eigen(transpose(T.B(first, c * rq)), f, Scalar(0));
    }
    ok = ok && is_eigen(K, v, M.q(k)) && is_eigen(K, f, M.q(k));
  }
  R.tensor_spherical = ok;
  return R;
}

std::string Rank1Report::json() const {
  nlohmann::json j = {{"family", family},
                      {"n", n},
                      {"level", l},
                      {"sigma", sigma.get_str()},
                      {"vectors", vectors_ok},
                      {"single_levels", single_levels_ok},
                      {"product", product_ok},
                      {"f_bar_f", ffbar_ok},
                      {"multiplicative", multiplicative_ok},
                      {"literal_display_matches", literal_display_matches},
                      {"normalization", normalization.str()},
                      {"product_res", product.str()},
                      {"closed_form", closed.str()},
                      {"ok", ok()}};
  if (!discrepancy.empty()) j["discrepancy"] = discrepancy;
  return j.dump();
}

Rank1Report verify_rank1(Rank1Kind kind, int n, int l, const Q& sigma) {
  Rank1Report R;
  R.n = kind == Rank1Kind::AI1 ? 1 : n;
  R.l = l;
  R.sigma = sigma;
  SatakeEntry e = kind == Rank1Kind::AI1 ? satake_catalog(Family::AI1) : satake_catalog(Family::AIVm, 0, n);
  R.family = kind == Rank1Kind::AI1 ? "AI1" : "AIV" + std::to_string(n);
  KLabel units = label_for(e, l, sigma);
  int qv = units.base_exp() / e.base_exponent;

  Rank1Module M;
  if (kind == Rank1Kind::AI1) {
    M = build_ai1_default(qv);
  } else {
    Scalar a = sign_pow(n) * q_power(Q(-2 * sigma), qv, "sigma incompatible with D");
    M = l >= 0 ? build_rank1(kind, n, a, Scalar(1), Scalar(0), qv) : build_rank1(kind, n, Scalar(1), a, Scalar(0), qv);
  }
  int dir = kind == Rank1Kind::AI1 && l < 0 ? -1 : 1;

  std::vector<SphericalPair> pairs;
  R.vectors_ok = R.single_levels_ok = true;
  GAElem prod = GAElem::constant(1, Scalar(1));
  for (int j = 0; j < std::abs(l); ++j) {
    SphericalPair p = solve_spherical(M, j, dir);
    R.vectors_ok = R.vectors_ok && p.closed_form;
    GAElem r = matrix_coeff_res(p, M);
    Scalar lead = r.coeff(w1(1));
    R.single_levels_ok = R.single_levels_ok && !lead.is_zero() && r * lead.inverse() == single_level_res(M, j, dir);
    prod = prod * r;
    pairs.push_back(p);
  }
  if (kind == Rank1Kind::AIV && l < 0) prod = ga_bar(prod);
  R.product = prod;
  R.closed = fundamental_res(kind, n, l, sigma, qv);
  R.literal = fundamental_res_literal(kind, n, l, sigma, qv);

  auto ratio = [&](const GAElem& c, Scalar& out) {
    const auto& [w, a] = *c.terms().begin();
    out = prod.coeff(w) / a;
    return !out.is_zero() && prod == c * out;
  };
  R.product_ok = ratio(R.closed, R.normalization);
  Scalar unused;
  R.literal_display_matches = ratio(R.literal, unused);
  if (!R.literal_display_matches)
    R.discrepancy = "single-level factors give (-Y q e^a; q^2)_l; the displayed (Y q e^a; q^2)_l does not match";

  R.ffbar_ok = R.closed * ga_bar(R.closed) == expand_finite(shift_factor(e, l, units, sigma));
  R.multiplicative_ok = verify_multiplicativity(pairs, M).ok();
  return R;
}

}  // namespace mk
