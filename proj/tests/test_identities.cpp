#include "doctest.h"
#include "printers.hpp"
#include "mk/identities.hpp"

using namespace mk;

TEST_CASE("eigenvalue identity at rank one and two") {
  for (int l = 0; l <= 2; ++l) {
    for (const Weight& lam : std::vector<Weight>{{0}, {2}, {4}}) CHECK(eigenvalue_identity_check(Family::AI1, 1, lam, l).ok());
    for (const Weight& lam : std::vector<Weight>{{0, 0}, {2, 0}, {2, 2}, {4, 2}})
      CHECK(eigenvalue_identity_check(Family::CI, 2, lam, l).ok());
  }
}

TEST_CASE("eigenvalue identity multiplicity") {
  CHECK(eigenvalue_identity_check(Family::AI1, 1, {2}).N == 1);
  CHECK(eigenvalue_identity_check(Family::CI, 2, {2, 0}).N == 1);
}

TEST_CASE("eigenvalue identity rejects unsupported input") {
  CHECK_THROWS_WITH(eigenvalue_identity_check(Family::AIIIa, 1, {2}), "non-reduced entry");
  CHECK_THROWS(eigenvalue_identity_check(Family::AI1, 1, {1}));
  CHECK_THROWS_WITH(eigenvalue_identity_check(Family::AIIIb, 1, {2}), "ambient data not stored");
}

TEST_CASE("rho shift per level") {
  KLabel k0 = label_for(satake_catalog(Family::CI, 2), 0);
  KLabel k2 = label_for(satake_catalog(Family::CI, 2), 2, Q(0), k0.D);
  std::vector<Q> a = rho_label(k0), b = rho_label(k2);
  for (size_t i = 0; i < a.size(); ++i) CHECK(b[i] - a[i] == 1);
}

TEST_CASE("connection coefficients are two-term") {
  SatakeEntry ai1 = satake_catalog(Family::AI1);
  ConnectionResult z = connection_coeffs(ai1, 0, 1, {0});
  CHECK(z.coeffs.size() == 1);
  CHECK(z.coeffs.at({0}).is_one());
  CHECK(z.two_term);
  for (int l = 0; l <= 1; ++l)
    for (const Weight& lam : std::vector<Weight>{{2}, {4}}) {
      ConnectionResult R = connection_coeffs(ai1, l, 1, lam);
      CHECK(R.reproduces);
      CHECK(R.two_term);
    }
  SatakeEntry aiv = satake_catalog(Family::AIVm, 1, 2);
  for (int l = 0; l <= 1; ++l) {
    ConnectionResult R = connection_coeffs(aiv, l, 1, {4});
    CHECK(R.reproduces);
    CHECK(R.two_term);
  }
}

TEST_CASE("connection requires a positive shift") {
  CHECK_THROWS(connection_coeffs(satake_catalog(Family::AI1), 0, 0, {2}));
}
