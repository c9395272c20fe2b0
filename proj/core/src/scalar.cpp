#include "mk/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace mk {

std::pair<Poly, Poly> normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) return {Poly(), Poly::constant(Q(1))};
  Poly g = Poly::gcd(num, den);
  Poly n = num, d = den;
  if (g.degree() > 0) {
    n = Poly::exact_div(num, g);
    d = Poly::exact_div(den, g);
  }
  Q l = d.lead();
  return {n * (1 / l), d * (1 / l)};
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

void Scalar::canonicalize() {
  auto [n, d] = normalize(num_, den_);
  num_ = std::move(n);
  den_ = std::move(d);
}

Scalar Scalar::vpow(int e) { return monomial(Q(1), e); }

Scalar Scalar::monomial(const Q& a, int e) {
  Scalar s;
  if (a == 0) {
    s.num_ = Poly();
    return s;
  }
  if (e >= 0) {
    s.num_ = Poly::monomial(a, e);
  } else {
    s.num_ = Poly::constant(a);
    s.den_ = Poly::monomial(Q(1), -e);
  }
  return s;
}

bool Scalar::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.c[0] == 1; }

Q Scalar::constant_value() const {
  if (!is_constant()) throw std::logic_error("Scalar is not a constant");
  return num_.is_zero() ? Q(0) : num_.c[0];
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
    if (den_.degree() > 0) canonicalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  // cross-cancel before multiplying to keep degrees small
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly a = g1.degree() > 0 ? Poly::exact_div(num_, g1) : num_;
  Poly d2 = g1.degree() > 0 ? Poly::exact_div(o.den_, g1) : o.den_;
  Poly b = g2.degree() > 0 ? Poly::exact_div(o.num_, g2) : o.num_;
  Poly d1 = g2.degree() > 0 ? Poly::exact_div(den_, g2) : den_;
  num_ = a * b;
  den_ = d1 * d2;
  Q l = den_.lead();
  if (l != 1) {
    num_ = num_ * (1 / l);
    den_ = den_ * (1 / l);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::bar() const {
  if (is_zero()) return *this;
  int dn = num_.degree(), dd = den_.degree();
  Poly n = num_.reversed(dn), d = den_.reversed(dd);
  if (dd > dn) n = n.shifted(dd - dn);
  if (dn > dd) d = d.shifted(dn - dd);
  return Scalar(n, d);
}

int Scalar::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return num_.valuation() - den_.valuation();
}

std::string Scalar::str() const {
  if (is_zero()) return "(0)/(1)";
  auto [zn, fn] = num_.primitive_integer();
  auto [zd, fd] = den_.primitive_integer();
  Q f = fn / fd;  // num/den = f * zn/zd
  for (auto& x : zn) x *= f.get_num();
  for (auto& x : zd) x *= f.get_den();
  return "(" + format_int_poly(zn) + ")/(" + format_int_poly(zd) + ")";
}

namespace {

Poly parse_poly(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty polynomial string");
  Poly p;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    Z coef = digits.empty() ? Z(1) : Z(digits);
    int e = 0;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'v') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
        if (ed.empty()) throw std::invalid_argument("bad exponent in '" + s + "'");
        e = std::stoi(ed);
      }
    } else if (digits.empty()) {
      throw std::invalid_argument("bad term in '" + s + "'");
    }
    p = p + Poly::monomial(Q(coef * sign), e);
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw std::invalid_argument("unexpected character in '" + s + "'");
  }
  return p;
}

std::string strip_parens(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Scalar Scalar::parse(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  int depth = 0;
  size_t slash = std::string::npos;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      slash = i;
      break;
    }
  }
  if (slash == std::string::npos) return Scalar(parse_poly(strip_parens(s)), Poly::constant(Q(1)));
  return Scalar(parse_poly(strip_parens(s.substr(0, slash))), parse_poly(strip_parens(s.substr(slash + 1))));
}

}  // namespace mk
