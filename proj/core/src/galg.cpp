#include "mk/galg.hpp"

#include <stdexcept>

#include "json.hpp"

namespace mk {

GAElem GAElem::monomial(const Weight& w, const Scalar& c) {
  GAElem f(static_cast<int>(w.size()));
  f.add_term(w, c);
  return f;
}

GAElem GAElem::constant(int n, const Scalar& c) { return monomial(zero_weight(n), c); }

Scalar GAElem::coeff(const Weight& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Scalar(0) : it->second;
}

void GAElem::add_term(const Weight& w, const Scalar& c) {
  if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("mixed ranks");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

GAElem& GAElem::operator+=(const GAElem& o) {
  if (o.n_ != n_) throw std::invalid_argument("mixed ranks");
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

GAElem& GAElem::operator-=(const GAElem& o) { return *this += -o; }

GAElem operator*(const GAElem& a, const GAElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("mixed ranks");
  GAElem r(a.n_);
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) r.add_term(wa + wb, ca * cb);
  return r;
}

GAElem GAElem::operator*(const Scalar& s) const {
  GAElem r(n_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, c * s);
  return r;
}

GAElem GAElem::operator-() const {
  GAElem r = *this;
  for (auto& [w, c] : r.t_) c = -c;
  return r;
}

GAElem GAElem::apply(const SignedPerm& g) const {
  GAElem r(n_);
  for (const auto& [w, c] : t_) r.t_.emplace(g.apply(w), c);
  return r;
}

bool GAElem::is_w_invariant() const {
  for (const auto& [w, c] : t_)
    for (const Weight& x : weyl_orbit(w))
      if (!(coeff(x) == c)) return false;
  return true;
}

std::string GAElem::json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : t_) terms.push_back({{"w", w}, {"c", c.str()}});
  nlohmann::json j = {{"rank", n_}, {"terms", terms}};
  return j.dump();
}

GAElem GAElem::from_json(const std::string& s) {
  auto j = nlohmann::json::parse(s);
  GAElem f(j.at("rank").get<int>());
  for (const auto& t : j.at("terms")) f.add_term(t.at("w").get<Weight>(), Scalar::parse(t.at("c").get<std::string>()));
  return f;
}

std::string GAElem::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : t_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*e" + weight_str(w);
  }
  return s;
}

GAElem ga_mul(const GAElem& f, const GAElem& g) { return f * g; }

GAElem ga_bar(const GAElem& f) {
  GAElem r(f.rank());
  for (const auto& [w, c] : f.terms()) r.add_term(-w, c);
  return r;
}

GAElem ga_zero_inv(const GAElem& f) {
  GAElem r(f.rank());
  for (const auto& [w, c] : f.terms()) r.add_term(w, c.bar());
  return r;
}

GAElem orbit_sum(const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("orbit_sum: weight " + weight_str(lambda) + " not dominant");
  GAElem r(static_cast<int>(lambda.size()));
  for (const Weight& w : weyl_orbit(lambda)) r.add_term(w, Scalar(1));
  return r;
}

GAElem translate(const GAElem& f, const Weight& mu, int pairing_scale) {
  GAElem r(f.rank());
  for (const auto& [w, c] : f.terms()) {
    Q e = pairing(scaled(mu, 2), w) * pairing_scale;
    if (e.get_den() != 1) throw std::domain_error("translate: non-integral v-exponent");
    r.add_term(w, c * Scalar::vpow(static_cast<int>(e.get_num().get_si())));
  }
  return r;
}

Scalar constant_term(const GAElem& f) { return f.coeff(zero_weight(f.rank())); }

GAElem symmetrize(const GAElem& f) {
  GAElem r(f.rank());
  for (const SignedPerm& g : weyl_group(f.rank())) r += f.apply(g);
  return r;
}

std::map<Weight, Scalar> to_m_basis(const GAElem& f) {
  std::map<Weight, Scalar> out;
  GAElem rest = f;
  while (!rest.is_zero()) {
    const Weight* best = nullptr;
    for (const auto& [w, c] : rest.terms())
      if (is_dominant(w) && (!best || linear_extension_less(*best, w))) best = &w;
    if (!best) throw std::invalid_argument("to_m_basis: element is not W-invariant");
    Weight lam = *best;
    Scalar c = rest.coeff(lam);
    out[lam] = c;
    rest -= orbit_sum(lam) * c;
  }
  return out;
}

GAElem from_m_basis(int n, const std::map<Weight, Scalar>& c) {
  GAElem r(n);
  for (const auto& [w, s] : c) r += orbit_sum(w) * s;
  return r;
}

}  // namespace mk
