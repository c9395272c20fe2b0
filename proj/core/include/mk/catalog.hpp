#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mk/roots.hpp"

namespace mk {

enum class Family { AIIIa, AIIIb, BI, CI, DI, DIIIb, EIII, EVII, AI1, AIVm };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws "unknown family"
const std::vector<Family>& all_families();

struct SatakeEntry {
  Family family;
  int n = 1;        // rank of the restricted root system
  int m = 0;        // auxiliary integer (AIIIa, AIVm; ambient size for BI, DI)
  bool reduced = true;
  std::string sigma_type;  // "none", "half-integer", "open"
  Q long_mult, med_mult, short_mult;
  int base_exponent = 2;  // q_i^2 as a power of q
  std::string n_range;
  bool recipe_known = true;

  std::string recipe_template() const;
};

SatakeEntry satake_catalog(Family f, int n = 0, int m = 0);

// Five-parameter label of a Koornwinder weight together with the v-scale:
// v = q_label^(1/D), base = q_label^2 = v^(2D).
struct KLabel {
  std::array<Q, 5> k;
  int n = 1;
  int D = 2;
  std::string family;

  int base_exp() const { return 2 * D; }
  // v-exponent of base^x; throws when not integral.
  int vexp_base(const Q& x) const;
  // v-exponent of q_label^x.
  int vexp_q(const Q& x) const;
  std::string str() const;
  bool operator==(const KLabel& o) const { return k == o.k && n == o.n && D == o.D; }
};

// D = 2 * lcd of the parameters (and sigma where present).
int twice_lcd(const std::vector<Q>& xs);
KLabel make_label(const std::array<Q, 5>& k, int n, const std::string& family, std::optional<int> D = {});

// Label of the weight for the given level l (and sigma for AIIIa / AIVm).
KLabel label_for(const SatakeEntry& e, int l, const Q& sigma = Q(0), std::optional<int> D = {});

// (|l|/2) * sum of the positive long roots, long roots being +-eps_i.
Weight bottom_of_well(const SatakeEntry& e, int l);

std::string catalog_json(bool reduced_only = false);
// Parses a dump produced by catalog_json and re-serializes it.
std::string catalog_roundtrip(const std::string& json);

}  // namespace mk
