#include <map>

#include "doctest.h"
#include "printers.hpp"
#include "mk/qsp1.hpp"

using namespace mk;

namespace {

Scalar v(int e = 1) { return Scalar::vpow(e); }
GAElem one(int n = 1) { return GAElem::constant(n, Scalar(1)); }
GAElem e(const Weight& w, const Scalar& s = Scalar(1)) { return GAElem::monomial(w, s); }

// Naive truncated product of the Koornwinder weight for n = 1, every
// denominator factor having a positive v-exponent.
std::map<Weight, std::map<int, Q>> naive_weight(const KLabel& k, int M) {
  using Ser = std::map<Weight, std::map<int, Q>>;
  auto mul = [&](const Ser& a, const Ser& b) {
    Ser r;
    for (const auto& [wa, sa] : a)
      for (const auto& [wb, sb] : b)
        for (const auto& [ea, ca] : sa)
          for (const auto& [eb, cb] : sb)
            if (ea + eb <= M) r[wa + wb][ea + eb] += ca * cb;
    return r;
  };
  Ser acc{{{0}, {{0, Q(1)}}}};
  int b = k.base_exp();
  for (int s : {1, -1}) {
    Weight a{2 * s};
    for (int j = 0; j * b <= M; ++j) {
      // (1 - v^(jb) e^(2a))
      acc = mul(acc, Ser{{{0}, {{0, Q(1)}}}, {a + a, {{j * b, Q(-1)}}}});
    }
    std::vector<std::pair<int, int>> dens = {{1, k.vexp_base(k.k[0])},
                                             {-1, k.vexp_base(k.k[1])},
                                             {1, k.vexp_base(k.k[2] + Q(1, 2))},
                                             {-1, k.vexp_base(k.k[3] + Q(1, 2))}};
    for (auto [sign, ex] : dens)
      for (int j = 0; ex + j * b <= M; ++j) {
        // 1 / (1 - sign v^(ex + jb) e^a) = sum_t (sign v^(ex + jb) e^a)^t
        Ser g;
        int step = ex + j * b;
        Q c = 1;
        for (int t = 0; t * step <= M; ++t) {
          g[scaled(a, t)][t * step] = c;
          c *= sign;
        }
        acc = mul(acc, g);
      }
  }
  return acc;
}

}  // namespace

TEST_CASE("weight structure at rank one") {
  KLabel k = make_label({Q(1), Q(2), Q(3), Q(4), Q(0)}, 1, "test");
  PochProduct W = koornwinder_weight(k);
  int num = 0, den = 0;
  for (const auto& [s, m] : W.factors()) {
    if (m > 0) num += m;
    if (m < 0) den -= m;
  }
  CHECK(num == 2);
  CHECK(den == 8);
  PochProduct H = half_density(k);
  CHECK(H.factors().size() == 5);
  CHECK((H * H.negated_weights()).equals(W));
}

TEST_CASE("sign and offset of the k2 symbol") {
  KLabel k = make_label({Q(1), Q(0), Q(1), Q(1), Q(0)}, 1, "test");
  PochSymbol s{-1, 0, {2}, k.base_exp(), kInfinite};
  CHECK(koornwinder_weight(k).factors().at(s) == -1);
}

TEST_CASE("half density squares to the weight at rank two") {
  KLabel k = label_for(satake_catalog(Family::CI, 2), 1);
  CHECK((half_density(k) * half_density(k).negated_weights()).equals(koornwinder_weight(k)));
}

TEST_CASE("shift factor at rank one") {
  SatakeEntry ai1 = satake_catalog(Family::AI1);
  KLabel u = label_for(ai1, 2);
  Scalar q = v(u.base_exp() / ai1.base_exponent);
  GAElem expect = one();
  for (int s : {1, -1})
    for (int j : {1, 3}) expect = expect * (one() + e({2 * s}, q.pow(j)));
  CHECK(expand_finite(shift_factor(ai1, 2, u)) == expect);
  CHECK(shift_factor(ai1, 0, u).is_empty());

  SatakeEntry a3 = satake_catalog(Family::AIIIa, 1, 2);
  KLabel u3 = label_for(a3, 1);
  Scalar q3 = v(u3.base_exp() / a3.base_exponent);
  CHECK(expand_finite(shift_factor(a3, 1, u3)) == (one() + e({2}, q3)) * (one() + e({-2}, q3)));
}

TEST_CASE("shifted weight at level zero is the weight") {
  SatakeEntry ci = satake_catalog(Family::CI, 2);
  KLabel k = label_for(ci, 0);
  CHECK(shifted_weight(k, ci, 0).equals(koornwinder_weight(k)));
}

TEST_CASE("shifted weight, non-reduced, level one") {
  SatakeEntry a3 = satake_catalog(Family::AIIIa, 1, 2);
  int D = label_for(a3, 1).D;
  KLabel k0 = label_for(a3, 0, Q(0), D);
  KLabel k1 = make_label({Q(1, 2), Q(3, 2), Q(1), Q(0), Q(1)}, 1, "AIIIa", D);
  CHECK(shifted_weight(k0, a3, 1).equals(koornwinder_weight(k1)));
  CHECK_FALSE(shifted_weight(k0, a3, 1).equals(koornwinder_weight(k0)));
}

TEST_CASE("Pochhammer ratios") {
  PochSymbol a{1, 1, {2}, 2, kInfinite};
  PochSymbol aq{1, 3, {2}, 2, kInfinite};
  PochSymbol aq2{1, 5, {2}, 2, kInfinite};
  PochProduct A(1), Aq(1), Aq2(1);
  A.add(a);
  Aq.add(aq);
  Aq2.add(aq2);

  Fraction same = poch_ratio(A, A);
  CHECK(same.num == one());
  CHECK(same.den == one());

  Fraction f = poch_ratio(A, Aq);
  CHECK(f.num == one() - e({2}, v(1)));
  CHECK(f.den == one());

  Fraction g = poch_ratio(Aq2, A);
  CHECK(g.num == one());
  CHECK(g.den == (one() - e({2}, v(1))) * (one() - e({2}, v(3))));
}

TEST_CASE("finite symbols of length zero are empty") {
  PochProduct P(1);
  P.add({-1, 1, {2}, 2, 0});
  CHECK(expand_finite(P) == one());
}

TEST_CASE("expansion against a naive product") {
  KLabel k = label_for(satake_catalog(Family::AIIIa, 1, 2), 0);
  int M = 8;
  SeriesGA S = expand(koornwinder_weight(k), M);
  auto naive = naive_weight(k, M);
  for (const auto& [w, s] : naive) {
    TruncSeries t = S.coeff(w);
    for (const auto& [o, c] : s) CHECK(t[o] == c);
  }
  for (const auto& [w, t] : S.terms)
    for (int o = 0; o <= M; ++o)
      if (t[o] != 0) CHECK(naive.count(w));
  CHECK(S.coeff({0})[0] == 2);
}

TEST_CASE("empty product expands to one") {
  SeriesGA S = expand(PochProduct(1), 5);
  CHECK(S.coeff({0})[0] == 1);
  CHECK(S.terms.size() == 1);
}

TEST_CASE("inner products") {
  SatakeEntry ai1 = satake_catalog(Family::AI1);
  KLabel k0 = label_for(ai1, 0, Q(0), 2);
  PochProduct W = koornwinder_weight(k0);
  TruncSeries unit = inner_product(one(), one(), W, W, 12);
  CHECK(unit[0] == 1);
  for (int o = 1; o <= 12; ++o) CHECK(unit[o] == 0);

  TruncSeries shifted = inner_product(one(), one(), shifted_weight(k0, ai1, 1), W, 12);
  bool differs = false;
  for (int o = 0; o <= 12; ++o) differs = differs || shifted[o] != (o == 0 ? 1 : 0);
  CHECK(differs);

  GAElem a = orbit_sum({2}) + one() * v(1), b = orbit_sum({4});
  CHECK(inner_product(a, b, W, W, 10) == inner_product(b, a, W, W, 10));
}
