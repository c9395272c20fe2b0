#include "mk/poly.hpp"

#include <stdexcept>

namespace mk {

Poly Poly::constant(const Q& a) { return Poly(std::vector<Q>{a}); }

Poly Poly::monomial(const Q& a, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent in Poly::monomial");
  std::vector<Q> c(e + 1);
  c[e] = a;
  return Poly(std::move(c));
}

Q Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return Q(0);
  return c[i];
}

int Poly::valuation() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return -1;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Q l = lead();
  Poly r = *this;
  for (auto& x : r.c) x /= l;
  return r;
}

Poly Poly::reversed(int deg) const {
  std::vector<Q> r(deg + 1);
  for (int i = 0; i <= degree(); ++i) r[deg - i] = c[i];
  return Poly(std::move(r));
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Q> r(k + c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i + k] = c[i];
  return Poly(std::move(r));
}

Poly Poly::unshifted(int k) const {
  if (is_zero() || k == 0) return *this;
  for (int i = 0; i < k; ++i)
    if (coeff(i) != 0) throw std::logic_error("Poly::unshifted: not divisible");
  return Poly(std::vector<Q>(c.begin() + k, c.end()));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Q> r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Q> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return Poly(std::move(r));
}

Poly Poly::operator*(const Q& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Q> r = a.c;
  std::vector<Q> q(a.c.size() - b.c.size() + 1);
  const Q& lb = b.lead();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Q t = r[i + b.degree()] / lb;
    q[i] = t;
    if (t == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= t * b.c[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("Poly::exact_div: nonzero remainder");
  return q;
}

std::vector<Z> zpoly_trim(std::vector<Z> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Z zpoly_content(const std::vector<Z>& a) {
  Z g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::pair<std::vector<Z>, Q> Poly::primitive_integer() const {
  if (is_zero()) return {{}, Q(0)};
  Z l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Z> z(c.size());
  for (size_t i = 0; i < c.size(); ++i) z[i] = c[i].get_num() * (l / c[i].get_den());
  Z g = zpoly_content(z);
  if (z.back() < 0) g = -g;
  for (auto& x : z) x /= g;
  Q f(g, l);
  f.canonicalize();
  return {z, f};
}

namespace {

// Pseudo-remainder of a by b over Z.
std::vector<Z> zpoly_prem(std::vector<Z> a, const std::vector<Z>& b) {
  int db = static_cast<int>(b.size()) - 1;
  const Z& lb = b.back();
  int steps = static_cast<int>(a.size()) - db;
  for (; steps > 0; --steps) {
    int da = static_cast<int>(a.size()) - 1;
    Z la = a.back();
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    a = zpoly_trim(std::move(a));
    if (static_cast<int>(a.size()) - 1 < db) {
      // account for the remaining multiplications by lb
      Z m;
      mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), steps - 1);
      for (auto& x : a) x *= m;
      break;
    }
  }
  return a;
}

Z zpow(const Z& b, unsigned long e) {
  Z r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

std::vector<Z> zpoly_subresultant_gcd(std::vector<Z> a, std::vector<Z> b) {
  a = zpoly_trim(std::move(a));
  b = zpoly_trim(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a;
  Z ca = zpoly_content(a), cb = zpoly_content(b);
  Z d;
  mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  for (auto& x : a) x /= ca;
  for (auto& x : b) x /= cb;
  Z g = 1, h = 1;
  while (true) {
    int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
    std::vector<Z> r = zpoly_prem(a, b);
    if (r.empty()) break;
    if (r.size() == 1) {
      b = {Z(1)};
      break;
    }
    Z div = g * zpow(h, delta);
    for (auto& x : r) x /= div;
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (g < 0) g = -g;
    if (delta == 0) {
      // h unchanged
    } else {
      h = zpow(g, delta) / zpow(h, delta - 1);
    }
  }
  Z cbb = zpoly_content(b);
  for (auto& x : b) x /= cbb;
  for (auto& x : b) x *= d;
  if (b.back() < 0)
    for (auto& x : b) x = -x;
  return b;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return constant(Q(1));
  auto za = a.primitive_integer().first;
  auto zb = b.primitive_integer().first;
  auto g = zpoly_subresultant_gcd(za, zb);
  std::vector<Q> qc(g.size());
  for (size_t i = 0; i < g.size(); ++i) qc[i] = Q(g[i]);
  return Poly(std::move(qc)).monic();
}

std::string format_int_poly(const std::vector<Z>& a) {
  std::string s;
  bool first = true;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] == 0) continue;
    Z m = abs(a[i]);
    if (a[i] < 0)
      s += "-";
    else if (!first)
      s += "+";
    if (i == 0 || m != 1) s += m.get_str();
    if (i > 0) {
      if (m != 1) s += "*";
      s += "v";
      if (i > 1) s += "^" + std::to_string(i);
    }
    first = false;
  }
  return first ? "0" : s;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  auto [z, f] = primitive_integer();
  std::string body = format_int_poly(z);
  if (f == 1) return body;
  return "(" + f.get_str() + ")*(" + body + ")";
}

}  // namespace mk
