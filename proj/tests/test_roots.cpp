#include <algorithm>
#include <set>

#include "doctest.h"
#include "printers.hpp"
#include "mk/catalog.hpp"

using namespace mk;

TEST_CASE("root system counts") {
  RootSystem r1 = build_root_system(1);
  CHECK(r1.R1.size() == 2);
  CHECK(r1.R2.empty());
  CHECK(r1.R3.size() == 2);

  RootSystem r2 = build_root_system(2);
  CHECK(r2.R2.size() == 4);

  for (int n = 1; n <= 4; ++n) {
    RootSystem r = build_root_system(n);
    CHECK(r.R1.size() == static_cast<size_t>(2 * n));
    CHECK(r.R2.size() == static_cast<size_t>(2 * n * (n - 1)));
    CHECK(r.R3.size() == static_cast<size_t>(2 * n));
    std::set<Weight> r3(r.R3.begin(), r.R3.end());
    for (const Weight& a : r.R1) CHECK(r3.count(scaled(a, 2)));
    for (const auto* set : {&r.R1, &r.R2, &r.R3}) {
      std::set<Weight> s(set->begin(), set->end());
      for (const Weight& a : *set) CHECK(s.count(-a));
    }
  }
  RootSystem r3 = build_root_system(3);
  CHECK(r3.R1.size() + r3.R2.size() + r3.R3.size() == 24);
}

TEST_CASE("Weyl group order is 2^n n!") {
  CHECK(weyl_group(1).size() == 2);
  CHECK(weyl_group(2).size() == 8);
  CHECK(weyl_group(3).size() == 48);
}

TEST_CASE("Weyl orbits") {
  CHECK(weyl_orbit({2, 0}) == std::vector<Weight>{{-2, 0}, {0, -2}, {0, 2}, {2, 0}});
  CHECK(weyl_orbit({0, 0}) == std::vector<Weight>{{0, 0}});
  CHECK(weyl_orbit({2, 2}).size() == 4);
  // orbit size oracle: |W| / |stabilizer| by brute force
  for (const Weight& w : std::vector<Weight>{{4, 2, 0}, {2, 2, 2}, {6, 4, 2}, {2, 0, 0}}) {
    std::set<Weight> seen;
    for (const SignedPerm& g : weyl_group(3)) seen.insert(g.apply(w));
    CHECK(weyl_orbit(w).size() == seen.size());
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq({2, 2}, {4, 0}));
  CHECK(dominance_leq({4, 0}, {4, 0}));
  CHECK_FALSE(dominance_leq({4, 0}, {2, 2}));
  CHECK(dominance_leq({0, 0}, {2, 2}, Lattice::BC));
}

TEST_CASE("dominant weights below") {
  CHECK(dominant_weights_below({0, 0}) == std::vector<Weight>{{0, 0}});
  std::vector<Weight> below = dominant_weights_below({4, 0});
  for (const Weight& w : std::vector<Weight>{{2, 2}, {0, 0}, {4, 0}})
    CHECK(std::find(below.begin(), below.end(), w) != below.end());
  // brute-force scan oracle
  for (const Weight& lam : std::vector<Weight>{{4, 2}, {6, 0}, {2, 2}}) {
    std::vector<Weight> expect;
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= a; ++b)
        if (dominance_leq({a, b}, lam)) expect.push_back({a, b});
    std::vector<Weight> got = dominant_weights_below(lam);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("linear extension refines dominance") {
  std::vector<Weight> ws = dominant_weights_below({6, 4}, Lattice::BC);
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = 0; j < ws.size(); ++j)
      if (i != j && dominance_leq(ws[i], ws[j], Lattice::BC)) CHECK(i < j);
}

TEST_CASE("catalog reducedness") {
  for (Family f : all_families()) {
    SatakeEntry e = satake_catalog(f);
    bool nonreduced = f == Family::AIIIa || f == Family::DIIIb || f == Family::EIII || f == Family::AIVm;
    CHECK(e.reduced == !nonreduced);
  }
}

TEST_CASE("catalog recipes") {
  SatakeEntry a = satake_catalog(Family::AIIIa, 1, 2);
  KLabel k = label_for(a, 0);
  CHECK(k.k == std::array<Q, 5>{Q(1, 2), Q(1, 2), Q(1), Q(0), Q(1)});
  KLabel km = label_for(a, -2, Q(1, 2));
  CHECK(km.k == std::array<Q, 5>{Q(1, 2), Q(1), Q(1), Q(3, 2), Q(1)});

  SatakeEntry ci = satake_catalog(Family::CI, 2);
  KLabel kc = label_for(ci, -3);
  CHECK(kc.k[1] == 0);
  CHECK(kc.k[2] == 0);
  CHECK(kc.k[3] == 3);
}

TEST_CASE("bottom of the well") {
  CHECK(bottom_of_well(satake_catalog(Family::AI1), 3) == Weight{3});
  CHECK(bottom_of_well(satake_catalog(Family::AIVm, 0, 3), 2) == Weight{2});
  CHECK(bottom_of_well(satake_catalog(Family::CI, 2), 0) == Weight{0, 0});
}

TEST_CASE("catalog dump round trips") {
  std::string s = catalog_json();
  CHECK(catalog_roundtrip(s) == s);
  CHECK(catalog_json(true).find("AIIIa") == std::string::npos);
}

TEST_CASE("unknown family") { CHECK_THROWS_WITH(parse_family("XYZ"), "unknown family 'XYZ'"); }
