#include "mk/catalog.hpp"

#include <cstdlib>
#include "json.hpp"
#include <stdexcept>

namespace mk {

namespace {

const std::vector<std::pair<Family, const char*>> kNames = {
    {Family::AIIIa, "AIIIa"}, {Family::AIIIb, "AIIIb"}, {Family::BI, "BI"},
    {Family::CI, "CI"},       {Family::DI, "DI"},       {Family::DIIIb, "DIIIb"},
    {Family::EIII, "EIII"},   {Family::EVII, "EVII"},   {Family::AI1, "AI1"},
    {Family::AIVm, "AIVm"},
};

std::string qstr(const Q& x) { return x.get_str(); }

}  // namespace

std::string family_name(Family f) {
  for (auto& [g, s] : kNames)
    if (g == f) return s;
  throw std::invalid_argument("unknown family");
}

Family parse_family(const std::string& s) {
  for (auto& [g, name] : kNames)
    if (s == name) return g;
  throw std::invalid_argument("unknown family '" + s + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> r;
    for (auto& [g, s] : kNames) r.push_back(g);
    return r;
  }();
  return v;
}

SatakeEntry satake_catalog(Family f, int n, int m) {
  SatakeEntry e;
  e.family = f;
  e.long_mult = 1;
  e.sigma_type = "none";
  switch (f) {
    case Family::AIIIa:
      e.n = n > 0 ? n : 1;
      e.m = m > 0 ? m : 2;
      if (e.m < 2) throw std::invalid_argument("AIIIa needs m >= 2");
      e.reduced = false;
      e.med_mult = 2;
      e.short_mult = 2 * (e.m - 1);
      e.sigma_type = "half-integer";
      e.n_range = "n>=1";
      break;
    case Family::AIIIb:
      e.n = n > 0 ? n : 1;
      e.med_mult = 2;
      e.n_range = "n>=1";
      break;
    case Family::BI:
      // so(2, 2m-1), m >= 2
      e.n = 2;
      e.m = m > 0 ? m : 3;
      e.med_mult = 2 * e.m - 3;
      e.n_range = "2";
      break;
    case Family::CI:
      e.n = n > 0 ? n : 2;
      if (e.n < 2) throw std::invalid_argument("CI needs n >= 2");
      e.med_mult = 1;
      e.base_exponent = 4;
      e.n_range = "n>=2";
      break;
    case Family::DI:
      // so(2, 2m-2), m >= 3
      e.n = 2;
      e.m = m > 0 ? m : 4;
      e.med_mult = 2 * e.m - 4;
      e.n_range = "2";
      break;
    case Family::DIIIb:
      e.n = n > 0 ? n : 1;
      e.reduced = false;
      e.med_mult = 4;
      e.short_mult = 4;
      e.sigma_type = "open";
      e.recipe_known = false;
      e.n_range = "n>=1";
      break;
    case Family::EIII:
      e.n = 2;
      e.reduced = false;
      e.med_mult = 6;
      e.short_mult = 8;
      e.sigma_type = "open";
      e.recipe_known = false;
      e.n_range = "2";
      break;
    case Family::EVII:
      e.n = 3;
      e.med_mult = 8;
      e.n_range = "3";
      break;
    case Family::AI1:
      e.n = 1;
      e.med_mult = 0;
      e.n_range = "1";
      break;
    case Family::AIVm:
      e.n = 1;
      e.m = m > 0 ? m : 2;
      if (e.m < 2) throw std::invalid_argument("AIVm needs m >= 2");
      e.reduced = false;
      e.med_mult = 0;
      e.short_mult = 2 * (e.m - 1);
      e.sigma_type = "half-integer";
      e.n_range = "1";
      break;
  }
  if (n > 0 && n != e.n) throw std::invalid_argument("rank " + std::to_string(n) + " not available for " + family_name(f));
  return e;
}

std::string SatakeEntry::recipe_template() const {
  if (!recipe_known) return "open";
  if (reduced) return "(" + qstr(long_mult) + ",0,0,|l|," + qstr(med_mult / 2) + ")";
  return "(1/2,sigma+1/2+max(l,0)," + std::to_string(m - 1) + ",-sigma+max(-l,0),1)";
}

int twice_lcd(const std::vector<Q>& xs) {
  Z l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return static_cast<int>(2 * l.get_si());
}

int KLabel::vexp_base(const Q& x) const {
  Q r = x * base_exp();
  if (r.get_den() != 1) throw std::domain_error("exponent " + x.get_str() + " not representable with D=" + std::to_string(D));
  return static_cast<int>(r.get_num().get_si());
}

int KLabel::vexp_q(const Q& x) const {
  Q r = x * D;
  if (r.get_den() != 1) throw std::domain_error("exponent " + x.get_str() + " not representable with D=" + std::to_string(D));
  return static_cast<int>(r.get_num().get_si());
}

std::string KLabel::str() const {
  std::string s = family + " n=" + std::to_string(n) + " k=(";
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + k[i].get_str();
  return s + ") D=" + std::to_string(D);
}

KLabel make_label(const std::array<Q, 5>& k, int n, const std::string& family, std::optional<int> D) {
  KLabel L;
  L.k = k;
  L.n = n;
  L.family = family;
  L.D = D ? *D : twice_lcd({k.begin(), k.end()});
  for (const auto& x : k) L.vexp_base(x);
  return L;
}

KLabel label_for(const SatakeEntry& e, int l, const Q& sigma, std::optional<int> D) {
  if (!e.recipe_known) throw std::invalid_argument("parameter identification open");
  std::array<Q, 5> k;
  if (e.reduced) {
    k = {e.long_mult, Q(0), Q(0), Q(std::abs(l)), e.med_mult / 2};
  } else {
    k = {Q(1, 2), sigma + Q(1, 2), Q(e.m - 1), -sigma, Q(1)};
    if (l > 0) k[1] += l;
    if (l < 0) k[3] -= l;
  }
  std::optional<int> d = D;
  if (!d) {
    std::vector<Q> xs(k.begin(), k.end());
    xs.push_back(sigma);
    d = twice_lcd(xs);
  }
  return make_label(k, e.n, family_name(e.family), d);
}

Weight bottom_of_well(const SatakeEntry& e, int l) {
  if (!e.recipe_known) throw std::invalid_argument("parameter identification open");
  return Weight(e.n, std::abs(l));
}

namespace {

nlohmann::json entry_json(const SatakeEntry& e) {
  return {{"family", family_name(e.family)},
          {"n_range", e.n_range},
          {"reduced", e.reduced},
          {"sigma_type", e.sigma_type},
          {"recipe_template", e.recipe_template()}};
}

}  // namespace

std::string catalog_json(bool reduced_only) {
  nlohmann::json arr = nlohmann::json::array();
  for (Family f : all_families()) {
    SatakeEntry e = satake_catalog(f);
    if (reduced_only && !e.reduced) continue;
    arr.push_back(entry_json(e));
  }
  return arr.dump(2);
}

std::string catalog_roundtrip(const std::string& json) {
  auto arr = nlohmann::json::parse(json);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& o : arr) {
    SatakeEntry e = satake_catalog(parse_family(o.at("family").get<std::string>()));
    nlohmann::json rebuilt = entry_json(e);
    if (rebuilt != o) throw std::runtime_error("catalog entry does not round-trip: " + o.dump());
    out.push_back(rebuilt);
  }
  return out.dump(2);
}

}  // namespace mk
