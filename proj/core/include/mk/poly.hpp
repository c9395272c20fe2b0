#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace mk {

using Q = mpq_class;
using Z = mpz_class;

// Dense univariate polynomial in v over Q; c[i] is the coefficient of v^i.
// Invariant: no trailing zeros, so the zero polynomial has empty c.
class Poly {
 public:
  std::vector<Q> c;

  Poly() = default;
  explicit Poly(std::vector<Q> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(const Q& a);
  static Poly monomial(const Q& a, int e);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Q& lead() const { return c.back(); }
  Q coeff(int i) const;
  int valuation() const;

  void trim();
  Poly monic() const;
  Poly reversed(int deg) const;  // v^deg * p(1/v)
  Poly shifted(int k) const;     // p * v^k, k >= 0
  Poly unshifted(int k) const;   // p / v^k, requires v^k | p

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Q& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  // Division with remainder; throws on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly exact_div(const Poly& a, const Poly& b);

  // Monic gcd via subresultant PRS on the primitive integer parts.
  static Poly gcd(const Poly& a, const Poly& b);

  // Integer-coefficient primitive multiple with positive leading coefficient,
  // and the rational factor f with p = f * result.
  std::pair<std::vector<Z>, Q> primitive_integer() const;

  std::string str() const;
};

// Helpers on integer coefficient vectors (constant term first).
std::vector<Z> zpoly_trim(std::vector<Z> a);
Z zpoly_content(const std::vector<Z>& a);
std::vector<Z> zpoly_subresultant_gcd(std::vector<Z> a, std::vector<Z> b);

std::string format_int_poly(const std::vector<Z>& a);

}  // namespace mk
