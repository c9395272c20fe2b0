#include "mk/weights.hpp"

#include <stdexcept>

#include "json.hpp"

namespace mk {

std::string PochSymbol::str() const {
  std::string s = "(" + std::string(sign < 0 ? "-" : "") + "v^" + std::to_string(v_exp) + " e" + weight_str(weight) +
                  "; v^" + std::to_string(base_exp) + ")_";
  return s + (length == kInfinite ? "inf" : std::to_string(length));
}

void PochProduct::add(const PochSymbol& s, int mult) {
  if (static_cast<int>(s.weight.size()) != n_) throw std::invalid_argument("mixed ranks");
  if (s.base_exp <= 0) throw std::invalid_argument("PochSymbol: base exponent must be positive");
  if (mult == 0 || s.length == 0) return;
  auto [it, inserted] = f_.emplace(s, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) f_.erase(it);
  }
}

PochProduct operator*(const PochProduct& a, const PochProduct& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("mixed ranks");
  PochProduct r = a;
  for (const auto& [s, m] : b.f_) r.add(s, m);
  r.prefactor_ = a.prefactor_ * b.prefactor_;
  return r;
}

PochProduct PochProduct::inverse() const {
  PochProduct r(n_);
  for (const auto& [s, m] : f_) r.add(s, -m);
  if (prefactor_.terms().size() != 1) throw std::invalid_argument("PochProduct::inverse: prefactor not a monomial");
  const auto& [w, c] = *prefactor_.terms().begin();
  r.prefactor_ = GAElem::monomial(-w, c.inverse());
  return r;
}

PochProduct PochProduct::apply(const SignedPerm& w) const {
  PochProduct r(n_);
  for (const auto& [s0, m] : f_) {
    PochSymbol s = s0;
    s.weight = w.apply(s.weight);
    r.add(s, m);
  }
  r.prefactor_ = prefactor_.apply(w);
  return r;
}

PochProduct PochProduct::negated_weights() const {
  PochProduct r(n_);
  for (const auto& [s0, m] : f_) {
    PochSymbol s = s0;
    s.weight = -s.weight;
    r.add(s, m);
  }
  r.prefactor_ = ga_bar(prefactor_);
  return r;
}

PochProduct PochProduct::translated(const Weight& mu, int pairing_scale) const {
  PochProduct r(n_);
  for (const auto& [s0, m] : f_) {
    PochSymbol s = s0;
    Q e = pairing(scaled(mu, 2), s.weight) * pairing_scale;
    if (e.get_den() != 1) throw std::domain_error("translate: non-integral v-exponent");
    s.v_exp += static_cast<int>(e.get_num().get_si());
    r.add(s, m);
  }
  r.prefactor_ = translate(prefactor_, mu, pairing_scale);
  return r;
}

namespace {

using CanonMap = std::map<PochProduct::ClassKey, std::map<int, int>>;

int mod_pos(int a, int b) { return ((a % b) + b) % b; }

bool splittable(int sign, int c, const Weight& w, int b) {
  if (sign != 1 || c % 2 != 0 || b % 2 != 0) return false;
  bool nonzero = false;
  for (int x : w) {
    if (x % 4 != 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

void put_infinite(CanonMap& cm, int sign, int c, const Weight& w, int b, int mult) {
  if (splittable(sign, c, w, b)) {
    Weight h = w;
    for (auto& x : h) x /= 2;
    // (X^2; q) = (X, -X, q^(1/2) X, -q^(1/2) X; q)
    for (int off : {c / 2, c / 2 + b / 2}) {
      put_infinite(cm, 1, off, h, b, mult);
      put_infinite(cm, -1, off, h, b, mult);
    }
    return;
  }
  auto& row = cm[{sign, w, b, mod_pos(c, b)}];
  row[c] += mult;
  if (row[c] == 0) row.erase(c);
}

void drop_empty(CanonMap& cm) {
  for (auto it = cm.begin(); it != cm.end();) {
    if (it->second.empty())
      it = cm.erase(it);
    else
      ++it;
  }
}

// Regions [start, next) of constant factor exponent d in one class.
struct Region {
  int start, end, d;  // end == INT_MAX marks the unbounded tail
};

std::vector<Region> regions(const std::map<int, int>& row) {
  std::vector<Region> out;
  int d = 0;
  auto it = row.begin();
  while (it != row.end()) {
    d += it->second;
    int start = it->first;
    ++it;
    int end = it == row.end() ? INT32_MAX : it->first;
    out.push_back({start, end, d});
  }
  return out;
}

}  // namespace

std::map<PochProduct::ClassKey, std::map<int, int>> PochProduct::canonical() const {
  CanonMap cm;
  for (const auto& [s, m] : f_) {
    put_infinite(cm, s.sign, s.v_exp, s.weight, s.base_exp, m);
    if (s.length != kInfinite) put_infinite(cm, s.sign, s.v_exp + s.length * s.base_exp, s.weight, s.base_exp, -m);
  }
  drop_empty(cm);
  return cm;
}

PochProduct PochProduct::normalized() const {
  PochProduct r(n_);
  r.prefactor_ = prefactor_;
  for (const auto& [key, row] : canonical()) {
    const auto& [sign, w, b, res] = key;
    (void)res;
    for (const Region& g : regions(row)) {
      if (g.d == 0) continue;
      int len = g.end == INT32_MAX ? kInfinite : (g.end - g.start) / b;
      r.add(PochSymbol{sign, g.start, w, b, len}, g.d);
    }
  }
  return r;
}

bool PochProduct::equals(const PochProduct& o) const {
  return n_ == o.n_ && canonical() == o.canonical() && prefactor_ == o.prefactor_;
}

std::string PochProduct::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [s, m] : f_) {
    nlohmann::json len = s.length == kInfinite ? nlohmann::json("inf") : nlohmann::json(s.length);
    arr.push_back({{"sign", s.sign},
                   {"v_exp", s.v_exp},
                   {"weight", s.weight},
                   {"base_exp", s.base_exp},
                   {"length", len},
                   {"mult", m}});
  }
  if (!(prefactor_ == GAElem::constant(n_, Scalar(1))))
    arr.push_back({{"prefactor", nlohmann::json::parse(prefactor_.json())}});
  return arr.dump();
}

std::string PochProduct::str() const {
  std::string s;
  if (!(prefactor_ == GAElem::constant(n_, Scalar(1)))) s = "[" + prefactor_.str() + "] ";
  for (const auto& [sym, m] : f_) s += sym.str() + "^" + std::to_string(m) + " ";
  return s.empty() ? "1" : s;
}

PochProduct koornwinder_weight(const KLabel& k) {
  RootSystem rs = build_root_system(k.n);
  PochProduct P(k.n);
  int b = k.base_exp();
  for (const Weight& a : rs.R1) {
    P.add({1, 0, scaled(a, 2), b, kInfinite}, 1);
    P.add({1, k.vexp_base(k.k[0]), a, b, kInfinite}, -1);
    P.add({-1, k.vexp_base(k.k[1]), a, b, kInfinite}, -1);
    P.add({1, k.vexp_base(k.k[2] + Q(1, 2)), a, b, kInfinite}, -1);
    P.add({-1, k.vexp_base(k.k[3] + Q(1, 2)), a, b, kInfinite}, -1);
  }
  for (const Weight& a : rs.R2) {
    P.add({1, 0, a, b, kInfinite}, 1);
    P.add({1, k.vexp_base(k.k[4]), a, b, kInfinite}, -1);
  }
  return P;
}

PochProduct half_density(const KLabel& k) {
  RootSystem rs = build_root_system(k.n);
  PochProduct P(k.n);
  int b = k.base_exp();
  for (const Weight& a : rs.R1pos) {
    P.add({1, 0, scaled(a, 2), b, kInfinite}, 1);
    P.add({1, k.vexp_base(k.k[0]), a, b, kInfinite}, -1);
    P.add({-1, k.vexp_base(k.k[1]), a, b, kInfinite}, -1);
    P.add({1, k.vexp_base(k.k[2] + Q(1, 2)), a, b, kInfinite}, -1);
    P.add({-1, k.vexp_base(k.k[3] + Q(1, 2)), a, b, kInfinite}, -1);
  }
  for (const Weight& a : rs.R2pos) {
    P.add({1, 0, a, b, kInfinite}, 1);
    P.add({1, k.vexp_base(k.k[4]), a, b, kInfinite}, -1);
  }
  return P;
}

PochProduct shift_factor(const SatakeEntry& e, int l, const KLabel& units, const Q& sigma) {
  if (!e.recipe_known) throw std::invalid_argument("parameter identification open");
  RootSystem rs = build_root_system(e.n);
  PochProduct P(e.n);
  if (l == 0) return P;
  int b = units.base_exp();
  // q_alpha e^alpha with q_alpha = base^(1/2); for the non-reduced families
  // the offset carries q^(+-2 sigma) from the parameter relation.
  Q off = Q(1, 2);
  if (!e.reduced) off = l > 0 ? Q(sigma + Q(1, 2)) : Q(-sigma + Q(1, 2));
  for (const Weight& a : rs.R1) P.add({-1, units.vexp_base(off), a, b, std::abs(l)}, 1);
  return P;
}

PochProduct shifted_weight(const KLabel& k, const SatakeEntry& e, int l, const Q& sigma) {
  return (shift_factor(e, l, k, sigma) * koornwinder_weight(k)).normalized();
}

namespace {

GAElem binomial_elem(int n, const Binomial& f) {
  GAElem one = GAElem::constant(n, Scalar(1));
  GAElem t = one - GAElem::monomial(f.weight, Scalar::monomial(Q(f.sign), f.v_exp));
  GAElem r = one;
  for (int i = 0; i < f.power; ++i) r = r * t;
  return r;
}

}  // namespace

Fraction poch_ratio(const PochProduct& numer, const PochProduct& denom) {
  int n = numer.rank();
  PochProduct tmp(n);
  for (const auto& [s, m] : numer.factors()) tmp.add(s, m);
  for (const auto& [s, m] : denom.factors()) tmp.add(s, -m);
  Fraction fr{numer.prefactor(), GAElem::constant(n, Scalar(1)), {}, denom.prefactor()};
  std::vector<Binomial> num_factors;
  for (const auto& [key, row] : tmp.canonical()) {
    const auto& [sign, w, b, res] = key;
    (void)res;
    for (const Region& g : regions(row)) {
      if (g.d == 0) continue;
      if (g.end == INT32_MAX) throw std::domain_error("ratio not rational");
      for (int e = g.start; e < g.end; e += b) {
        Binomial f{sign, e, w, std::abs(g.d)};
        (g.d > 0 ? num_factors : fr.den_factors).push_back(f);
      }
    }
  }
  for (const auto& f : num_factors) fr.num = fr.num * binomial_elem(n, f);
  fr.den = fr.den_prefactor;
  for (const auto& f : fr.den_factors) fr.den = fr.den * binomial_elem(n, f);
  return fr;
}

}  // namespace mk
