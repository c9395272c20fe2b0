#pragma once

#include <map>
#include <string>
#include <vector>

#include "mk/weights.hpp"

namespace mk {

// Literal: sum_w c_w w(T f). Normalized: sum_w c_w (w(T f) - f), which removes
// the multiplication part sum_w c_w and stays polynomial for every label.
enum class QDiffForm { Literal, Normalized };

std::string form_name(QDiffForm f);

// Default translation direction eps_1 (doubled (2, 0, ...)).
Weight default_direction(int n);

// Action on a W-invariant f; throws "non-polynomial result" when the sum does
// not collapse to a W-invariant Laurent polynomial.
GAElem apply_qdiff(const KLabel& k, const Weight& direction, const GAElem& f, QDiffForm form = QDiffForm::Normalized);

struct OperatorAction {
  KLabel label;
  Weight direction;
  QDiffForm form = QDiffForm::Normalized;
  std::vector<Weight> basis;  // dominant weights below lambda_max, linear extension order
  std::map<std::pair<Weight, Weight>, Scalar> entries;  // (mu, nu): coefficient of m_mu in D m_nu

  Scalar entry(const Weight& mu, const Weight& nu) const;
  Scalar eigenvalue(const Weight& mu) const { return entry(mu, mu); }
};

OperatorAction operator_action(const KLabel& k, const Weight& lambda_max, QDiffForm form = QDiffForm::Normalized,
                               const Weight& direction = {});

struct MKPolynomial {
  KLabel label;
  Weight lambda;
  std::map<Weight, Scalar> coeffs;  // m-basis
  std::string construction = "operator-exact";

  GAElem elem() const;
  std::string json() const;
};

// Triangular solve of the eigenvalue equation; throws "non-generic parameters"
// when an eigenvalue below lambda coincides with E_lambda.
MKPolynomial build_polynomial(const KLabel& k, const Weight& lambda, QDiffForm form = QDiffForm::Normalized);

struct GSPolynomial {
  KLabel label;
  Weight lambda;
  int M = kDefaultPrecision;
  std::map<Weight, TruncSeries> coeffs;
};

// Orthogonalization of m_lambda against all m_mu, mu < lambda, with respect to
// the label's weight; coefficients known mod v^(M+1). Throws "precision
// exhausted" when the truncated Gram system has no unit pivot.
GSPolynomial build_polynomial_gs(const KLabel& k, const Weight& lambda, int M = kDefaultPrecision);

struct PairVerdict {
  Weight a, b;
  bool zero = true;
  int first_nonzero = -1;  // order of the first nonzero coefficient when not zero
};

struct OrthogonalityReport {
  KLabel label;
  int M = kDefaultPrecision;
  std::vector<PairVerdict> pairs;
  bool ok() const;
  std::string json() const;
};

OrthogonalityReport verify_orthogonality(const KLabel& k, const std::vector<Weight>& lambdas, int M = kDefaultPrecision);

// Every m-basis coefficient fixed by v -> 1/v.
bool check_bar_invariance(const MKPolynomial& P);

// Coefficient-wise comparison mod v^(M+1); returns the first differing order
// or -1 when they agree.
int compare_dual_paths(const MKPolynomial& P, const GSPolynomial& G);

// Clears the operator cache (tests and benchmarks).
void clear_operator_cache();

}  // namespace mk
