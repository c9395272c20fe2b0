#include "doctest.h"
#include "printers.hpp"
#include "mk/mkengine.hpp"

using namespace mk;

namespace {

Scalar v(int e = 1) { return Scalar::vpow(e); }
GAElem one(int n = 1) { return GAElem::constant(n, Scalar(1)); }

KLabel ai1(int l) { return label_for(satake_catalog(Family::AI1), l); }
KLabel ci2(int l) { return label_for(satake_catalog(Family::CI, 2), l); }
KLabel aiiia(int l) { return label_for(satake_catalog(Family::AIIIa, 1, 2), l); }

}  // namespace

TEST_CASE("normalized operator kills constants") {
  for (int l = 0; l <= 2; ++l) CHECK(apply_qdiff(ai1(l), {}, one()).is_zero());
  CHECK(apply_qdiff(ci2(1), {}, one(2)).is_zero());
}

TEST_CASE("literal operator maps 1 to a constant at level zero") {
  GAElem d = apply_qdiff(ai1(0), {}, one(), QDiffForm::Literal);
  CHECK(d.terms().size() == 1);
  CHECK(d.terms().count({0}) == 1);
}

TEST_CASE("literal operator is not polynomial at positive level") {
  CHECK_THROWS_WITH(apply_qdiff(ai1(1), {}, orbit_sum({2}), QDiffForm::Literal), "non-polynomial result");
}

TEST_CASE("operator is triangular up to norm 4") {
  for (int l = 0; l <= 1; ++l) {
    OperatorAction A = operator_action(ci2(l), {4, 4});
    for (const auto& [key, c] : A.entries) CHECK(dominance_leq(key.first, key.second, Lattice::BC));
    for (size_t i = 0; i < A.basis.size(); ++i)
      for (size_t j = 0; j < i; ++j) CHECK_FALSE(A.eigenvalue(A.basis[i]) == A.eigenvalue(A.basis[j]));
  }
}

TEST_CASE("rank one eigenvalues match the closed form") {
  // label (1, 0, 0, l, 0): D = 2, base = v^4, rho = (1 + l) / 2
  for (int l = 0; l <= 2; ++l) {
    OperatorAction A = operator_action(ai1(l), {8});
    auto closed = [&](int L) { return v(2 * L + 2 * (1 + l)) + v(-(2 * L + 2 * (1 + l))); };
    for (int L : {0, 2, 4, 6, 8}) CHECK(A.eigenvalue({L}) == v(2 * (1 + l)) * (closed(L) - closed(0)));
  }
}

TEST_CASE("small polynomials") {
  CHECK(build_polynomial(ai1(1), {0}).elem() == one());
  // nothing lies strictly below (2) for the BC order except 0, which the
  // even lattice reaches; at rank two (2, 2) has (2, 0)... so check (0, 0)
  CHECK(build_polynomial(ci2(1), {0, 0}).elem() == one(2));
  MKPolynomial P = build_polynomial(ai1(2), {4});
  CHECK(P.coeffs.at({4}).is_one());
  for (const auto& [mu, c] : P.coeffs) CHECK(dominance_leq(mu, {4}, Lattice::BC));
}

TEST_CASE("polynomials are eigenfunctions") {
  KLabel k = ci2(1);
  for (const Weight& lam : std::vector<Weight>{{2, 0}, {2, 2}, {4, 2}}) {
    MKPolynomial P = build_polynomial(k, lam);
    Scalar E = operator_action(k, lam).eigenvalue(lam);
    CHECK(apply_qdiff(k, {}, P.elem()) == P.elem() * E);
  }
}

TEST_CASE("odd or non-dominant weights are rejected") {
  CHECK_THROWS(build_polynomial(ai1(0), {1}));
  CHECK_THROWS(build_polynomial(ci2(0), {0, 2}));
}

TEST_CASE("Gram-Schmidt agrees with the operator construction") {
  KLabel k = aiiia(0);
  CHECK(compare_dual_paths(build_polynomial(k, {2}), build_polynomial_gs(k, {2}, 40)) == -1);
  CHECK(compare_dual_paths(build_polynomial(k, {4}), build_polynomial_gs(k, {4}, 40)) == -1);
  GSPolynomial z = build_polynomial_gs(k, {0}, 10);
  CHECK(z.coeffs.size() == 1);
}

TEST_CASE("orthogonality of a rank one family") {
  OrthogonalityReport R = verify_orthogonality(ai1(1), {{0}, {2}, {4}, {6}}, 40);
  CHECK(R.pairs.size() == 6);
  CHECK(R.ok());
  CHECK(verify_orthogonality(ai1(1), {{2}}, 40).pairs.empty());
}

TEST_CASE("a corrupted coefficient is detected") {
  KLabel k = ai1(1);
  GAElem p4 = build_polynomial(k, {4}).elem() + one() * v(1);
  ShiftedSeries ct = constant_term_against(p4 * build_polynomial(k, {0}).elem(), koornwinder_weight(k), 20);
  CHECK(ct.s.first_nonzero() >= 0);
  ShiftedSeries ok = constant_term_against(build_polynomial(k, {6}).elem() * build_polynomial(k, {2}).elem(),
                                           koornwinder_weight(k), 20);
  CHECK(ok.s.first_nonzero() == -1);
}

TEST_CASE("bar invariance of coefficients") {
  CHECK(check_bar_invariance(build_polynomial(ai1(0), {0})));
  for (const Weight& lam : std::vector<Weight>{{4}, {6}}) CHECK(check_bar_invariance(build_polynomial(ai1(1), lam)));
  CHECK(check_bar_invariance(build_polynomial(ci2(2), {4, 2})));
}

TEST_CASE("polynomial json") {
  std::string j = build_polynomial(ai1(1), {2}).json();
  CHECK(j.find("\"basis\":\"m\"") != std::string::npos);
  CHECK(j.find("\"lambda\":[2]") != std::string::npos);
}
