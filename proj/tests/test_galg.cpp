#include <random>

#include "doctest.h"
#include "printers.hpp"
#include "mk/galg.hpp"

using namespace mk;

namespace {

Scalar v(int e = 1) { return Scalar::vpow(e); }
Scalar c(long x) { return Scalar(Q(x)); }
GAElem e(const Weight& w, const Scalar& s = Scalar(1)) { return GAElem::monomial(w, s); }

GAElem random_elem(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-2, 2);
  GAElem f(n);
  for (int t = 0; t < 4; ++t) {
    Weight w(n);
    for (int& x : w) x = 2 * d(rng);
    f.add_term(w, c(d(rng)) * v(d(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("group algebra multiplication") {
  CHECK(e({2}) * e({4}) == e({6}));
  GAElem f = e({2}, v()) + e({-4}, c(3));
  CHECK(f * GAElem::constant(1, Scalar(1)) == f);
  GAElem s = e({2}) + e({-2});
  CHECK(s * s == e({4}) + e({0}, c(2)) + e({-4}));
}

TEST_CASE("no stored zero coefficients") {
  GAElem f = e({2}) - e({2});
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
}

TEST_CASE("bar negates weights") {
  CHECK(ga_bar(e({2, 0})) == e({-2, 0}));
  CHECK(ga_bar(orbit_sum({2, 2})) == orbit_sum({2, 2}));
  CHECK(ga_bar(e({2}, c(3) * v())) == e({-2}, c(3) * v()));
}

TEST_CASE("zero inversion acts on coefficients") {
  CHECK(ga_zero_inv(e({2}, v())) == e({2}, v(-1)));
  CHECK(ga_zero_inv(e({0}, v() + v(-1))) == e({0}, v() + v(-1)));
  CHECK(ga_zero_inv(e({2}) + e({4}, v(2))) == e({2}) + e({4}, v(-2)));
}

TEST_CASE("involutions are multiplicative and involutive") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    GAElem f = random_elem(rng, 2), g = random_elem(rng, 2);
    CHECK(ga_bar(ga_bar(f)) == f);
    CHECK(ga_bar(f * g) == ga_bar(f) * ga_bar(g));
    CHECK(ga_zero_inv(f * g) == ga_zero_inv(f) * ga_zero_inv(g));
  }
}

TEST_CASE("orbit sums") {
  CHECK(orbit_sum({0, 0}) == GAElem::constant(2, Scalar(1)));
  CHECK(orbit_sum({2, 0}) == e({2, 0}) + e({-2, 0}) + e({0, 2}) + e({0, -2}));
  CHECK(orbit_sum({2, 2}).terms().size() == 4);
}

TEST_CASE("translation") {
  CHECK(translate(GAElem::constant(1, Scalar(1)), {2}, 1) == GAElem::constant(1, Scalar(1)));
  // (2 eps, eps) = 2
  CHECK(translate(e({2}), {2}, 1) == e({2}, v(2)));
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    GAElem f = random_elem(rng, 2), g = random_elem(rng, 2);
    CHECK(translate(f * g, {2, 0}, 3) == translate(f, {2, 0}, 3) * translate(g, {2, 0}, 3));
  }
}

TEST_CASE("constant term") {
  CHECK(constant_term(e({2})).is_zero());
  CHECK(constant_term(e({0}, c(5)) + e({2})) == c(5));
  for (const Weight& lam : std::vector<Weight>{{2, 0}, {2, 2}, {4, 2}}) {
    GAElem m = orbit_sum(lam);
    CHECK(constant_term(m * ga_bar(m)) == c(static_cast<long>(m.terms().size())));
  }
}

TEST_CASE("symmetrization") {
  CHECK(symmetrize(GAElem::constant(2, Scalar(1))) == GAElem::constant(2, c(8)));
  GAElem m = orbit_sum({4, 2});
  CHECK(symmetrize(m) == m * c(8));
  CHECK(symmetrize(e({2, 0})) == orbit_sum({2, 0}) * c(2));
}

TEST_CASE("m-basis round trip") {
  GAElem f = orbit_sum({4, 2}) * v(3) + orbit_sum({2, 0}) * c(-2) + orbit_sum({0, 0});
  auto m = to_m_basis(f);
  CHECK(m.size() == 3);
  CHECK(m.at({4, 2}) == v(3));
  CHECK(from_m_basis(2, m) == f);
}

TEST_CASE("json round trip") {
  GAElem f = e({2, 0}, v(-1) + c(2)) + e({0, -2}, c(7));
  CHECK(GAElem::from_json(f.json()) == f);
}
