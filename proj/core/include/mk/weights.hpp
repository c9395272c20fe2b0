#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mk/catalog.hpp"
#include "mk/galg.hpp"
#include "mk/series.hpp"

namespace mk {

inline constexpr int kInfinite = -1;

// (sign * v^v_exp * e^weight ; v^base_exp)_length
struct PochSymbol {
  int sign = 1;
  int v_exp = 0;
  Weight weight;
  int base_exp = 1;
  int length = kInfinite;

  auto key() const { return std::tie(sign, v_exp, weight, base_exp, length); }
  bool operator<(const PochSymbol& o) const { return key() < o.key(); }
  bool operator==(const PochSymbol& o) const { return key() == o.key(); }
  std::string str() const;
};

// One binomial factor (1 - sign * v^v_exp * e^weight)^power.
struct Binomial {
  int sign = 1;
  int v_exp = 0;
  Weight weight;
  int power = 1;
};

class PochProduct {
 public:
  explicit PochProduct(int n = 1) : n_(n), prefactor_(GAElem::constant(n, Scalar(1))) {}

  int rank() const { return n_; }
  const std::map<PochSymbol, int>& factors() const { return f_; }
  const GAElem& prefactor() const { return prefactor_; }
  void set_prefactor(const GAElem& p) { prefactor_ = p; }

  // Multiplies by symbol^mult; identical symbols merge.
  void add(const PochSymbol& s, int mult = 1);
  bool is_empty() const { return f_.empty() && prefactor_ == GAElem::constant(n_, Scalar(1)); }

  friend PochProduct operator*(const PochProduct& a, const PochProduct& b);
  PochProduct inverse() const;  // prefactor must be a monomial
  PochProduct apply(const SignedPerm& w) const;
  PochProduct negated_weights() const;
  // e^lambda -> v^(pairing_scale * (2 mu, lambda)) e^lambda on every symbol and the prefactor.
  PochProduct translated(const Weight& mu, int pairing_scale) const;

  // Canonical content: per class (sign, weight, base, v_exp mod base) the
  // multiplicities of infinite symbols by starting exponent, after splitting
  // every (v^2c e^2mu; v^2b) into its four square-root factors.
  using ClassKey = std::tuple<int, Weight, int, int>;
  std::map<ClassKey, std::map<int, int>> canonical() const;

  // Cancellation-normal form: identical symbols merged, infinite pairs in one
  // class collapsed into finite symbols.
  PochProduct normalized() const;

  // Exact equality of the products they represent.
  bool equals(const PochProduct& o) const;

  std::string json() const;
  std::string str() const;

 private:
  int n_;
  std::map<PochSymbol, int> f_;
  GAElem prefactor_;
};

// Weight with parameters k in base v^(2D) (label units).
PochProduct koornwinder_weight(const KLabel& k);
PochProduct half_density(const KLabel& k);
// Product over long roots +-eps_i of the level-l factor.
PochProduct shift_factor(const SatakeEntry& e, int l, const KLabel& units, const Q& sigma = Q(0));
PochProduct shifted_weight(const KLabel& k, const SatakeEntry& e, int l, const Q& sigma = Q(0));

struct Fraction {
  GAElem num, den;
  std::vector<Binomial> den_factors;  // den = product of these (times den prefactor)
  GAElem den_prefactor;
};

// numer / denom as a quotient of Laurent polynomials; throws "ratio not rational".
Fraction poch_ratio(const PochProduct& numer, const PochProduct& denom);

// Group-algebra element with truncated power-series coefficients.
struct SeriesGA {
  int n = 1;
  int M = kDefaultPrecision;
  std::map<Weight, TruncSeries> terms;
  TruncSeries coeff(const Weight& w) const;
};

// Expansion with v-order <= M. Weights farther than `window` (doubled
// coordinates, sup norm) from the origin are dropped at the end; with window
// < 0 nothing is dropped. Intermediate terms that cannot come back within the
// window are pruned.
SeriesGA expand(const PochProduct& P, int M, int window = -1);

// <f, g>_W = ct(f * bar(g) * W) / ct(base weight), mod v^(M+1).
TruncSeries inner_product(const GAElem& f, const GAElem& g, const PochProduct& W, const PochProduct& base, int M);

// ct(F * expansion of W) for an exactly known F whose coefficients may have
// poles at v = 0; returned as v^shift * ct with shift chosen to clear them.
struct ShiftedSeries {
  int shift = 0;
  TruncSeries s;
};
ShiftedSeries constant_term_against(const GAElem& F, const PochProduct& W, int M);

}  // namespace mk
