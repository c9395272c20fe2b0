#pragma once

#include <string>

#include "mk/poly.hpp"

namespace mk {

// Element of Q(v), v = q^(1/D). Canonical form: gcd(num, den) = 1 and den monic.
class Scalar {
 public:
  Scalar() : den_(Poly::constant(Q(1))) {}
  Scalar(long a) : Scalar(Q(a)) {}
  Scalar(const Q& a) : num_(Poly::constant(a)), den_(Poly::constant(Q(1))) { num_.trim(); }
  Scalar(Poly num, Poly den);

  static Scalar vpow(int e);  // v^e for any integer e
  static Scalar monomial(const Q& a, int e);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Q constant_value() const;  // requires is_constant()

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar inverse() const;
  Scalar pow(long e) const;

  // v -> 1/v on coefficients.
  Scalar bar() const;

  // Order of vanishing at v = 0 (negative for a pole); throws on zero.
  int valuation() const;

  // "(num)/(den)" with integer coefficients, descending exponents.
  std::string str() const;
  static Scalar parse(const std::string& s);

 private:
  Poly num_, den_;
  void canonicalize();
};

// Canonical pair for num/den: returns (num', den') with gcd 1 and den' monic.
std::pair<Poly, Poly> normalize(const Poly& num, const Poly& den);

}  // namespace mk
