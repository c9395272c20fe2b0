#pragma once

#include <map>
#include <string>

#include "mk/roots.hpp"
#include "mk/scalar.hpp"

namespace mk {

// Finite sum of f_lambda e^lambda with Scalar coefficients.
class GAElem {
 public:
  explicit GAElem(int n = 1) : n_(n) {}
  static GAElem monomial(const Weight& w, const Scalar& c = Scalar(1));
  static GAElem constant(int n, const Scalar& c);

  int rank() const { return n_; }
  const std::map<Weight, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coeff(const Weight& w) const;
  void add_term(const Weight& w, const Scalar& c);

  GAElem& operator+=(const GAElem& o);
  GAElem& operator-=(const GAElem& o);
  friend GAElem operator+(GAElem a, const GAElem& b) { return a += b; }
  friend GAElem operator-(GAElem a, const GAElem& b) { return a -= b; }
  friend GAElem operator*(const GAElem& a, const GAElem& b);
  GAElem operator*(const Scalar& s) const;
  GAElem operator-() const;
  friend bool operator==(const GAElem& a, const GAElem& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  GAElem apply(const SignedPerm& w) const;
  bool is_w_invariant() const;

  std::string json() const;
  static GAElem from_json(const std::string& s);
  std::string str() const;

 private:
  int n_;
  std::map<Weight, Scalar> t_;
};

GAElem ga_mul(const GAElem& f, const GAElem& g);
GAElem ga_bar(const GAElem& f);
GAElem ga_zero_inv(const GAElem& f);
GAElem orbit_sum(const Weight& lambda);
// e^lambda -> v^(pairing_scale * (2 mu, lambda)) e^lambda.
GAElem translate(const GAElem& f, const Weight& mu, int pairing_scale);
Scalar constant_term(const GAElem& f);
GAElem symmetrize(const GAElem& f);

// W-invariant f as coefficients on orbit sums m_lambda (lambda dominant).
std::map<Weight, Scalar> to_m_basis(const GAElem& f);
GAElem from_m_basis(int n, const std::map<Weight, Scalar>& c);

}  // namespace mk
