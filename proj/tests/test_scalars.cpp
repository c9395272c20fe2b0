#include <random>

#include "doctest.h"
#include "printers.hpp"
#include "mk/series.hpp"

using namespace mk;

namespace {

Scalar v(int e = 1) { return Scalar::vpow(e); }
Scalar c(long x) { return Scalar(Q(x)); }

Poly poly(std::vector<long> xs) {
  std::vector<Q> q;
  for (long x : xs) q.push_back(Q(x));
  return Poly(q);
}

}  // namespace

TEST_CASE("normalization cancels the gcd") {
  Scalar x(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(x.num() == poly({1, 1}));
  CHECK(x.den() == poly({1}));
}

TEST_CASE("zero has denominator one") {
  Scalar x(Poly(), Poly::monomial(Q(1), 3));
  CHECK(x.is_zero());
  CHECK(x.den() == poly({1}));
}

TEST_CASE("constant denominator is absorbed") {
  Scalar x(poly({0, 2}), poly({4}));
  CHECK(x.den() == poly({1}));
  CHECK(x.num() == Poly::monomial(Q(1, 2), 1));
}

TEST_CASE("denominator is monic") {
  Scalar x(poly({1}), poly({2, 6}));
  CHECK(x.den().lead() == 1);
  CHECK(x * Scalar(poly({2, 6}), poly({1})) == c(1));
}

TEST_CASE("bar fixes symmetric elements and inverts v") {
  CHECK((v() + v(-1)).bar() == v() + v(-1));
  CHECK(v(2).bar() == v(-2));
  Scalar x = (c(1) + v()) / (c(1) - v());
  // (1 + 1/v) / (1 - 1/v) = (v + 1) / (v - 1)
  CHECK(x.bar() == (v() + c(1)) / (v() - c(1)));
  CHECK(x.bar() == -x);
}

TEST_CASE("bar is an involutive field automorphism on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random_scalar = [&] {
    Scalar num(0), den(0);
    for (int i = -2; i <= 2; ++i) {
      num += c(d(rng)) * v(i);
      den += c(d(rng)) * v(i);
    }
    if (den.is_zero()) den = c(1);
    return num / den;
  };
  for (int t = 0; t < 20; ++t) {
    Scalar a = random_scalar(), b = random_scalar();
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    Scalar a = c(d(rng)) + c(d(rng)) * v() + c(d(rng)) * v(-2);
    Scalar b = c(d(rng)) * v(3) + c(1);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == c(1));
    CHECK((a + b) - b == a);
    CHECK(a * (b + c(1)) == a * b + a);
  }
}

TEST_CASE("series expansion") {
  TruncSeries g = scalar_to_series(c(1) / (c(1) - v()), 3);
  for (int i = 0; i <= 3; ++i) CHECK(g[i] == 1);

  CHECK(scalar_to_series(v(2), 1).is_zero());

  TruncSeries h = scalar_to_series((c(1) + v()) / (c(1) - v(2)), 4);
  std::vector<int> expect = {1, 1, 1, 1, 1};  // (1 + v) / (1 - v^2) = 1 / (1 - v)
  for (int i = 0; i <= 4; ++i) CHECK(h[i] == expect[i]);

  TruncSeries s = scalar_to_series(c(1) / (c(1) - v(2)), 4);
  std::vector<int> even = {1, 0, 1, 0, 1};
  for (int i = 0; i <= 4; ++i) CHECK(s[i] == even[i]);
}

TEST_CASE("series of a pole throws") { CHECK_THROWS_WITH(scalar_to_series(v(-1), 3), "pole at origin"); }

TEST_CASE("series arithmetic matches scalar arithmetic") {
  Scalar a = (c(2) + v()) / (c(1) - c(3) * v(2));
  Scalar b = (c(1) - v(3)) / (c(1) + v());
  int M = 12;
  CHECK(scalar_to_series(a * b, M) == scalar_to_series(a, M) * scalar_to_series(b, M));
  CHECK(scalar_to_series(a, M).inverse() == scalar_to_series(a.inverse(), M));
}

TEST_CASE("parse and print round trip") {
  Scalar x = (c(3) * v(2) - c(1)) / (v() + c(2));
  CHECK(Scalar::parse(x.str()) == x);
  CHECK(Scalar::parse("1/2") == Scalar(Q(1, 2)));
}

TEST_CASE("gcd of integer polynomials") {
  Poly a = poly({-1, 0, 1}) * poly({2, 1});
  Poly b = poly({-1, 1}) * poly({5, 0, 1});
  CHECK(Poly::gcd(a, b) == poly({-1, 1}));
}
