#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "mk/mkengine.hpp"

namespace mk {

std::string form_name(QDiffForm f) { return f == QDiffForm::Literal ? "literal" : "normalized"; }

Weight default_direction(int n) { return unit_weight(n, 0); }

namespace {

// Laurent polynomial in v with integer coefficients: sum c[i] v^(lo + i).
struct LPoly {
  int lo = 0;
  std::vector<long long> c;

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
  }

  void add(const LPoly& o, long long sign, int shift) {
    if (o.c.empty()) return;
    int olo = o.lo + shift;
    if (c.empty()) {
      lo = olo;
      c.assign(o.c.size(), 0);
    }
    int nlo = std::min(lo, olo);
    int nhi = std::max(lo + static_cast<int>(c.size()), olo + static_cast<int>(o.c.size()));
    if (nlo != lo || nhi != lo + static_cast<int>(c.size())) {
      std::vector<long long> r(nhi - nlo, 0);
      for (size_t i = 0; i < c.size(); ++i) r[lo - nlo + i] = c[i];
      c = std::move(r);
      lo = nlo;
    }
    for (size_t i = 0; i < o.c.size(); ++i) {
      long long t;
      if (__builtin_mul_overflow(o.c[i], sign, &t) || __builtin_add_overflow(c[olo - lo + i], t, &c[olo - lo + i]))
        throw std::overflow_error("operator coefficient overflow");
    }
  }

  Scalar to_scalar() const {
    std::vector<Q> q(c.size());
    for (size_t i = 0; i < c.size(); ++i) q[i] = Q(static_cast<long>(c[i]));
    Poly p(std::move(q));
    if (lo >= 0) return Scalar(p.shifted(lo), Poly::constant(Q(1)));
    return Scalar(p, Poly::monomial(Q(1), -lo));
  }
};

LPoly from_scalar(const Scalar& s) {
  if (s.den().degree() > 0 && !(s.den() == Poly::monomial(Q(1), s.den().degree())))
    throw std::invalid_argument("operator input coefficient is not a Laurent polynomial");
  LPoly r;
  r.lo = -s.den().degree();
  for (const auto& x : s.num().c) {
    if (x.get_den() != 1) throw std::invalid_argument("operator input coefficient is not integral");
    r.c.push_back(x.get_num().get_si());
  }
  return r;
}

using Key = std::pair<int, Weight>;  // (phi, weight)

struct ConeSeries {
  std::vector<int> phi;
  int bound;
  std::map<Key, LPoly> t;

  int ph(const Weight& w) const {
    int s = 0;
    for (size_t i = 0; i < w.size(); ++i) s += phi[i] * w[i];
    return s;
  }

  void add(const Weight& w, const LPoly& c, long long sign = 1, int shift = 0) {
    int p = ph(w);
    if (p > bound) return;
    auto& slot = t[{p, w}];
    slot.add(c, sign, shift);
  }

  // multiply by (sign v^e e^x) and scale by coef
  ConeSeries shifted(const Weight& x, long long coef, int e) const {
    ConeSeries r{phi, bound, {}};
    for (const auto& [k, c] : t) r.add(k.second + x, c, coef, e);
    return r;
  }

  // divide by (1 - sign v^e e^x), phi(x) > 0
  void geometric(int sign, int e, const Weight& x) {
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (it->second.is_zero()) continue;
      add(it->first.second + x, it->second, sign, e);
    }
  }

  void divide(const Binomial& b) {
    for (int p = 0; p < b.power; ++p) {
      if (ph(b.weight) > 0) {
        geometric(b.sign, b.v_exp, b.weight);
      } else {
        // 1/(1-u) = -u^{-1} / (1 - u^{-1})
        *this = shifted(-b.weight, -b.sign, -b.v_exp);
        geometric(b.sign, -b.v_exp, -b.weight);
      }
    }
  }
};

std::vector<int> generic_functional(int n) {
  std::vector<int> phi(n);
  for (int i = 0; i < n; ++i) phi[i] = n - i;
  return phi;
}

const SignedPerm& element_mapping(const Weight& from, const Weight& to) {
  for (const SignedPerm& g : weyl_group(static_cast<int>(from.size())))
    if (g.apply(from) == to) return g;
  throw std::logic_error("no Weyl element maps " + weight_str(from) + " to " + weight_str(to));
}

struct IntElem {
  std::map<Weight, LPoly> t;
};

IntElem to_int(const GAElem& f) {
  IntElem r;
  for (const auto& [w, c] : f.terms()) r.t[w] = from_scalar(c);
  return r;
}

IntElem mul(const IntElem& a, const IntElem& b) {
  IntElem r;
  for (const auto& [wa, ca] : a.t)
    for (const auto& [wb, cb] : b.t) {
      LPoly prod;
      for (size_t i = 0; i < ca.c.size(); ++i) {
        if (ca.c[i] == 0) continue;
        prod.add(cb, ca.c[i], ca.lo + static_cast<int>(i));
      }
      r.t[wa + wb].add(prod, 1, 0);
    }
  return r;
}

// D(f) for an integral W-invariant f as a Laurent polynomial.
GAElem apply_integral(const KLabel& k, const Weight& dir, const GAElem& f, QDiffForm form) {
  int n = k.n;
  PochProduct Dp = half_density(k);
  Fraction base = poch_ratio(Dp.translated(dir, k.D), Dp);
  std::vector<Weight> images = weyl_orbit(dir);
  long long stab = static_cast<long long>(weyl_group(n).size() / images.size());

  std::vector<int> phi = generic_functional(n);
  int top = 0;
  for (const auto& [w, c] : f.terms()) {
    int p = 0;
    for (int i = 0; i < n; ++i) p += phi[i] * w[i];
    top = std::max(top, p);
  }
  int margin = 0;
  for (int i = 0; i < n; ++i) margin += 2 * phi[i];
  int bound = top + margin;

  ConeSeries total{phi, bound, {}};
  for (const Weight& nu : images) {
    const SignedPerm& g = element_mapping(dir, nu);
    IntElem num = to_int(base.num.apply(g));
    GAElem tf = translate(f, nu, k.D);
    if (form == QDiffForm::Normalized) tf -= f;
    IntElem term = mul(num, to_int(tf));
    ConeSeries s{phi, bound, {}};
    for (const auto& [w, c] : term.t) s.add(w, c);
    if (!(base.den_prefactor == GAElem::constant(n, Scalar(1))))
      throw std::logic_error("unexpected prefactor in operator coefficient");
    for (Binomial b : base.den_factors) {
      b.weight = g.apply(b.weight);
      s.divide(b);
    }
    for (const auto& [key, c] : s.t) total.add(key.second, c, stab, 0);
  }

  GAElem out(n);
  for (const auto& [key, c] : total.t) {
    if (c.is_zero()) continue;
    if (key.first > top) throw std::domain_error("non-polynomial result");
    out.add_term(key.second, c.to_scalar());
  }
  if (!out.is_w_invariant()) throw std::domain_error("non-polynomial result");
  return out;
}

struct CacheKey {
  std::string label;
  Weight dir;
  int form;
  Weight nu;
  bool operator<(const CacheKey& o) const {
    return std::tie(label, dir, form, nu) < std::tie(o.label, o.dir, o.form, o.nu);
  }
};

std::mutex g_cache_mu;
std::map<CacheKey, std::map<Weight, Scalar>> g_cache;

std::map<Weight, Scalar> column(const KLabel& k, const Weight& dir, QDiffForm form, const Weight& nu) {
  CacheKey key{k.str(), dir, static_cast<int>(form), nu};
  {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  auto col = to_m_basis(apply_integral(k, dir, orbit_sum(nu), form));
  std::lock_guard<std::mutex> lock(g_cache_mu);
  g_cache.emplace(key, col);
  return col;
}

}  // namespace

void clear_operator_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mu);
  g_cache.clear();
}

GAElem apply_qdiff(const KLabel& k, const Weight& direction, const GAElem& f, QDiffForm form) {
  if (!f.is_w_invariant()) throw std::invalid_argument("apply_qdiff: input not W-invariant");
  Weight dir = direction.empty() ? default_direction(k.n) : direction;
  GAElem out(k.n);
  for (const auto& [mu, c] : to_m_basis(f)) out += from_m_basis(k.n, column(k, dir, form, mu)) * c;
  return out;
}

Scalar OperatorAction::entry(const Weight& mu, const Weight& nu) const {
  auto it = entries.find({mu, nu});
  return it == entries.end() ? Scalar(0) : it->second;
}

OperatorAction operator_action(const KLabel& k, const Weight& lambda_max, QDiffForm form, const Weight& direction) {
  OperatorAction A;
  A.label = k;
  A.direction = direction.empty() ? default_direction(k.n) : direction;
  A.form = form;
  A.basis = dominant_weights_below(lambda_max, Lattice::BC);
  for (const Weight& nu : A.basis) {
    for (const auto& [mu, c] : column(k, A.direction, form, nu)) {
      if (!dominance_leq(mu, nu, Lattice::BC)) throw std::logic_error("operator not triangular");
      A.entries[{mu, nu}] = c;
    }
  }
  return A;
}

}  // namespace mk
