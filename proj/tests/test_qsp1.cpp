#include "doctest.h"
#include "printers.hpp"
#include "mk/qsp1.hpp"

using namespace mk;

namespace {

Scalar v(int e = 1) { return Scalar::vpow(e); }
Scalar c(long x) { return Scalar(Q(x)); }
GAElem one() { return GAElem::constant(1, Scalar(1)); }
GAElem e(int w, const Scalar& s = Scalar(1)) { return GAElem::monomial({w}, s); }

Vec column(const Mat& m, int j) {
  Vec r;
  for (const Vec& row : m) r.push_back(row[j]);
  return r;
}

}  // namespace

TEST_CASE("rank one actions with c = 1/q and s = 0") {
  Rank1Module M = build_ai1_default();
  const Mat& B = M.gen("B");
  CHECK(column(B, 0) == Vec{c(0), c(1)});
  CHECK(column(B, 1) == Vec{c(1), c(0)});
}

TEST_CASE("rank one actions with general parameters") {
  Scalar cc = c(3) * v(2), s = v() + c(2);
  Rank1Module M = build_rank1(Rank1Kind::AI1, 1, cc, Scalar(0), s);
  const Mat& B = M.gen("B");
  const Mat& R = M.gen("rho(B)");
  Scalar q = v();
  CHECK(column(B, 0) == Vec{s / q, c(1)});
  CHECK(column(B, 1) == Vec{cc * q, s * q});
  CHECK(column(R, 0) == Vec{s / q, cc * q});
  CHECK(column(R, 1) == Vec{c(1), s * q});
}

TEST_CASE("zero parameters are rejected") {
  CHECK_THROWS_WITH(build_rank1(Rank1Kind::AI1, 1, c(0), c(0), c(0)), "zero parameter");
  CHECK_THROWS_WITH(build_rank1(Rank1Kind::AIV, 2, c(1), c(0), c(0)), "zero parameter");
}

TEST_CASE("compact-part images in the vector representation") {
  Rank1Module M = build_rank1(Rank1Kind::AIV, 2, c(1), c(1), c(0));
  const Mat& X = M.gen("X1");
  CHECK(column(X, 2) == Vec{c(0), c(1), c(0)});
  CHECK(column(X, 0) == Vec{c(0), c(0), c(0)});
  CHECK(column(X, 1) == Vec{c(0), c(0), c(0)});

  Rank1Module M3 = build_rank1(Rank1Kind::AIV, 3, c(1), c(1), c(0));
  CHECK(column(M3.gen("Xn"), 2) == Vec{-v(-1), c(0), c(0), c(0)});
  CHECK(column(M3.gen("rho(X1)"), 1) == Vec{c(0), c(0), c(0), c(1)});
}

TEST_CASE("K actions are diagonal") {
  Rank1Module M = build_rank1(Rank1Kind::AIV, 3, c(1), c(1), c(0));
  for (int i = 1; i <= 3; ++i) {
    const Mat& K = M.gen("K" + std::to_string(i));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b) CHECK(K[a][b].is_zero());
  }
}

TEST_CASE("spherical vectors at rank one") {
  Rank1Module M = build_ai1_default();
  SphericalPair p1 = solve_spherical(M, 1);
  CHECK(p1.right == Vec{v(-1), c(1)});
  SphericalPair p2 = solve_spherical(M, 2);
  CHECK(p2.left == Vec{v(-3), c(1)});
  CHECK(p2.closed_form);
  CHECK(p2.t == v() + v(-1));
  SphericalPair p0 = solve_spherical(M, 0);
  CHECK(p0.right == Vec{c(1), c(1)});
  CHECK(p0.left == Vec{v(-1), c(1)});
}

TEST_CASE("spherical vectors for the vector representation") {
  Scalar c1 = v(3), cn = c(2) * v(-1);
  Rank1Module M = build_rank1(Rank1Kind::AIV, 2, c1, cn, c(0));
  SphericalPair p = solve_spherical(M, 1);
  CHECK(p.right == Vec{v(-1) * c1, c(0), c(-1)});
  CHECK(p.closed_form);
  for (int n : {2, 3, 4}) {
    Rank1Module Mn = build_rank1(Rank1Kind::AIV, n, c1, cn, c(0));
    for (int l = 0; l <= 3; ++l) CHECK(solve_spherical(Mn, l).closed_form);
  }
}

TEST_CASE("non-integrable characters") {
  Rank1Module M = build_rank1(Rank1Kind::AI1, 1, c(2), c(0), c(0));
  CHECK_THROWS_WITH(solve_spherical(M, 1), "character not integrable here");
}

TEST_CASE("single level restrictions") {
  Rank1Module M = build_ai1_default();
  for (int l = 0; l <= 4; ++l) {
    GAElem r = matrix_coeff_res(solve_spherical(M, l), M);
    // q^(-2l-1) e^(a/2) + e^(-a/2)
    CHECK(r == e(1, v(-2 * l - 1)) + e(-1));
    CHECK(r * v(2 * l + 1) == single_level_res(M, l));
  }
}

TEST_CASE("product of three rank one levels") {
  Rank1Module M = build_ai1_default();
  GAElem prod = one();
  for (int j = 0; j < 3; ++j) prod = prod * matrix_coeff_res(solve_spherical(M, j), M);
  // -e^(3a/2) (1 + q e^-a)(1 + q^3 e^-a)(1 + q^5 e^-a), up to the scalar -q^-9
  GAElem closed = e(3, c(-1)) * (one() + e(-2, v(1))) * (one() + e(-2, v(3))) * (one() + e(-2, v(5)));
  CHECK(fundamental_res(Rank1Kind::AI1, 1, 3, Q(0), 1) == closed);
  CHECK(prod == closed * (-v(-9)));
}

TEST_CASE("fundamental restrictions") {
  CHECK(fundamental_res(Rank1Kind::AI1, 1, 0, Q(0), 1) == one());
  CHECK(fundamental_res(Rank1Kind::AIV, 2, 0, Q(1, 2), 2) == one());
  for (int l = 1; l <= 3; ++l) {
    GAElem a = fundamental_res(Rank1Kind::AI1, 1, l, Q(0), 1);
    GAElem b = fundamental_res(Rank1Kind::AI1, 1, -l, Q(0), 1);
    CHECK(a * ga_bar(a) == b * ga_bar(b));
  }
  // sigma = 1/2, q = v: f bar(f) = prod over +-a of (-q^2 e^a; q^2)_2
  GAElem f = fundamental_res(Rank1Kind::AIV, 2, 2, Q(1, 2), 1);
  GAElem expect = one();
  for (int s : {1, -1})
    for (int j : {2, 4}) expect = expect * (one() + e(2 * s, v(j)));
  CHECK(f * ga_bar(f) == expect);
}

TEST_CASE("parameter ratio") {
  CHECK(aiiia_parameter(Q(0), 2) == c(1));
  CHECK(aiiia_parameter(Q(1, 2), 2) == v());
  CHECK(aiiia_parameter(Q(1), 3) == -v(2));
  CHECK_THROWS_WITH(aiiia_parameter(Q(1, 4), 2, 1), "sigma incompatible with D");
}

TEST_CASE("multiplicativity") {
  Rank1Module M = build_ai1_default();
  std::vector<SphericalPair> pairs;
  for (int j = 0; j < 3; ++j) pairs.push_back(solve_spherical(M, j));
  MultiplicativityReport R = verify_multiplicativity({pairs[0]}, M);
  CHECK(R.ok());
  R = verify_multiplicativity(pairs, M);
  CHECK(R.per_level.size() == 3);
  CHECK(R.tensor_checked);
  CHECK(R.ok());

  Rank1Module A = build_rank1(Rank1Kind::AIV, 2, v(-2), c(1), c(0));
  std::vector<SphericalPair> ap = {solve_spherical(A, 0), solve_spherical(A, 1)};
  MultiplicativityReport RA = verify_multiplicativity(ap, A);
  CHECK(RA.tensor_checked);
  CHECK(RA.ok());
}

TEST_CASE("tensor sphericity fails for vectors taken at the wrong level") {
  Rank1Module M = build_ai1_default();
  std::vector<SphericalPair> pairs = {solve_spherical(M, 0), solve_spherical(M, 2)};
  pairs[1].level = 1;
  CHECK_FALSE(verify_multiplicativity(pairs, M).ok());
}

TEST_CASE("rank one verification") {
  for (int l = -4; l <= 4; ++l) CHECK(verify_rank1(Rank1Kind::AI1, 1, l).ok());
  for (int n : {2, 3})
    for (int l = -3; l <= 3; ++l) {
      Rank1Report R = verify_rank1(Rank1Kind::AIV, n, l, Q(1, 2));
      CHECK(R.ok());
      if (l != 0) CHECK_FALSE(R.literal_display_matches);
    }
}
