#pragma once

#include <map>
#include <string>
#include <vector>

#include "mk/mkengine.hpp"

namespace mk {

// Ambient diagram data for the eigenvalue identity. Ambient weights use their
// own coordinates; an eps-coordinate vector x maps to eps_scale * x, and
// q^(pairing) uses dot_scale * (dot product).
struct AmbientData {
  std::string algebra;
  int dim = 1;
  Q dot_scale = 1;
  Q eps_scale = 1;
  std::vector<SignedPerm> weyl;
  std::vector<Q> mu;   // minuscule weight
  std::vector<Q> rho;  // half sum of positive roots
};

// Stored for AI1 (sl2) and CI n=2 (sp4); throws "ambient data not stored".
AmbientData ambient_data(Family f, int n);

// rho_k in eps-coordinates and base units: (k1+k2+k3+k4)/2 + (n-i) k5.
std::vector<Q> rho_label(const KLabel& k);

struct EigenIdentityReport {
  std::string family;
  int l = 0;
  Weight lambda;
  int N = 0;
  Scalar lhs, rhs;         // sum over W, and N * sum over the restricted Weyl group
  Scalar operator_value;   // diagonal entry of the operator at the level-l label
  Scalar closed_value;     // closed form with rho_{k',0} + (|l|/2) sum eps_i
  bool identity_ok = false;
  bool operator_ok = false;
  bool rho_shift_ok = false;
  bool ok() const { return identity_ok && operator_ok && rho_shift_ok; }
  std::string json() const;
};

// Throws "non-reduced entry" for AIIIa, DIIIb, EIII and AIVm, and
// "excluded family" for EVII.
EigenIdentityReport eigenvalue_identity_check(Family f, int n, const Weight& lambda, int l = 0);

struct ConnectionResult {
  std::string family;
  int l = 0, shift = 1;
  Weight lambda;
  std::map<Weight, Scalar> coeffs;  // P^l_lambda = sum_mu coeffs[mu] P^(l+shift)_mu
  bool reproduces = false;          // substituted back, equals P^l_lambda exactly
  bool two_term = false;            // support {lambda, lambda - eps_1} with leading 1
  std::string json() const;
};

ConnectionResult connection_coeffs(const SatakeEntry& e, int l, int shift, const Weight& lambda,
                                   const Q& sigma = Q(0));

}  // namespace mk
