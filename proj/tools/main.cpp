// mkpoly: compute polynomials, run verification suites, dump the catalog.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mk/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family = "AI1";
  int n = 0, m = 0, level = 0;
  std::string sigma = "0";
  std::string lambda;
  int bound = 4;
  int precision = mk::kDefaultPrecision;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::optional<bool> reduced;
};

int default_precision() {
  if (const char* s = std::getenv("MK_PRECISION")) {
    try {
      int M = std::stoi(s);
      if (M >= 1) return M;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring MK_PRECISION=" << s << "\n";
  }
  return mk::kDefaultPrecision;
}

mk::Q parse_rational(const std::string& s) {
  mk::Q q;
  if (q.set_str(s, 10) != 0) throw UsageError("invalid rational '" + s + "'");
  q.canonicalize();
  return q;
}

mk::Weight parse_weight(const std::string& s, int n) {
  mk::Weight w;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t pos = 0;
      w.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("invalid --lambda '" + s + "'");
    }
  }
  if (static_cast<int>(w.size()) != n)
    throw UsageError("--lambda needs " + std::to_string(n) + " coordinates");
  if (!mk::is_dominant(w) || !mk::is_even(w)) throw UsageError("--lambda must be dominant with even doubled coordinates");
  return w;
}

// Dominant weights with even doubled coordinates and coordinate sum <= bound,
// ordered by sum and then lexicographically.
std::vector<mk::Weight> weights_within(int n, int bound) {
  std::vector<mk::Weight> out;
  mk::Weight w(n, 0);
  std::function<void(int, int, int)> rec = [&](int i, int cap, int left) {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (int x = 0; x <= std::min(cap, left); x += 2) {
      w[i] = x;
      rec(i + 1, x, left - x);
    }
  };
  rec(0, bound, bound);
  std::sort(out.begin(), out.end(), [](const mk::Weight& a, const mk::Weight& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

// "(p)/(1)" -> "p" for human-readable output
std::string pretty_scalar(const mk::Scalar& c) {
  std::string s = c.str();
  const std::string one = "/(1)";
  if (s.size() > one.size() && s.compare(s.size() - one.size(), one.size(), one) == 0) {
    s.resize(s.size() - one.size());
    if (s.find_first_of("+-", 2) == std::string::npos) s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::string weight_str(const mk::Weight& w) {
  std::string r;
  for (size_t i = 0; i < w.size(); ++i) r += (i ? "," : "") + std::to_string(w[i]);
  return r;
}

int cmd_compute(const RunConfig& cfg) {
  mk::KLabel label;
  std::vector<mk::Weight> lambdas;
  try {
    mk::SatakeEntry e = mk::satake_catalog(mk::parse_family(cfg.family), cfg.n, cfg.m);
    label = mk::label_for(e, cfg.level, parse_rational(cfg.sigma));
    lambdas = cfg.lambda.empty() ? weights_within(e.n, cfg.bound) : std::vector<mk::Weight>{parse_weight(cfg.lambda, e.n)};
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  std::vector<mk::MKPolynomial> polys;
  try {
    for (const auto& lam : lambdas) polys.push_back(mk::build_polynomial(label, lam));
  } catch (const std::exception& ex) {
    std::cerr << "construction failed: " << ex.what() << "\n";
    return kExitFailure;
  }

  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& P : polys) arr.push_back(nlohmann::json::parse(P.json()));
    std::cout << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "label,lambda,mu,coefficient\n";
    for (const auto& P : polys)
      for (const auto& [mu, c] : P.coeffs)
        std::cout << csv_field(label.str()) << ',' << csv_field(weight_str(P.lambda)) << ',' << csv_field(weight_str(mu))
                  << ',' << csv_field(c.str()) << "\n";
  } else {
    std::cout << "label " << label.str() << "\n";
    for (const auto& P : polys) {
      std::cout << "P(" << weight_str(P.lambda) << ") =\n";
      for (auto it = P.coeffs.rbegin(); it != P.coeffs.rend(); ++it)
        std::cout << "  m(" << weight_str(it->first) << ")  " << pretty_scalar(it->second) << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = mk::suite_names();
  } else if (std::find(mk::suite_names().begin(), mk::suite_names().end(), cfg.suite) != mk::suite_names().end()) {
    names = {cfg.suite};
  } else {
    std::cerr << "error: unknown suite '" << cfg.suite << "'\n";
    return kExitUsage;
  }
  mk::SuiteOptions opt;
  opt.M = cfg.precision;
  opt.seed = cfg.seed;

  std::vector<mk::SuiteResult> results;
  for (const auto& name : names) results.push_back(mk::run_suite(name, opt));

  bool all_ok = true, exhausted = false;
  for (const auto& r : results) {
    if (r.passed()) continue;
    all_ok = false;
    for (const auto& c : r.checks) exhausted |= c.precision_exhausted;
  }

  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(nlohmann::json::parse(r.json()));
    std::cout << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "suite,id,property,status,detail\n";
    for (const auto& r : results)
      for (const auto& c : r.checks)
        std::cout << csv_field(r.name) << ',' << csv_field(c.id) << ',' << csv_field(c.property) << ','
                  << (c.passed ? "pass" : c.precision_exhausted ? "precision-exhausted" : "fail") << ','
                  << csv_field(c.detail) << "\n";
  } else {
    for (const auto& r : results) {
      size_t ok = std::count_if(r.checks.begin(), r.checks.end(), [](const mk::Check& c) { return c.passed; });
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << ok << "/" << r.checks.size() << ")\n";
      for (const auto& c : r.checks)
        if (!c.passed)
          std::cout << "  " << (c.precision_exhausted ? "precision exhausted " : "failed ") << c.id << ": "
                    << c.property << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
    }
  }

  if (!all_ok) {
    for (const auto& r : results)
      if (const mk::Check* f = r.first_failure()) {
        std::cerr << (f->precision_exhausted ? "precision exhausted at " : "first failure: ") << r.name << "/"
                  << f->id << (f->detail.empty() ? "" : ": " + f->detail) << "\n";
        break;
      }
    if (exhausted) std::cerr << "increase --precision to resolve exhausted checks\n";
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_catalog(const RunConfig& cfg) {
  std::string dump = mk::catalog_json(cfg.reduced.value_or(false));
  nlohmann::json j = nlohmann::json::parse(dump);
  if (cfg.reduced && !*cfg.reduced) {
    nlohmann::json filtered = nlohmann::json::array();
    for (const auto& e : j)
      if (!e.at("reduced").get<bool>()) filtered.push_back(e);
    j = filtered;
  }
  if (cfg.format == "csv") {
    std::cout << "family,n_range,reduced,sigma_type,recipe_template\n";
    for (const auto& e : j)
      std::cout << csv_field(e.at("family").get<std::string>()) << ',' << csv_field(e.at("n_range").get<std::string>())
                << ',' << (e.at("reduced").get<bool>() ? "true" : "false") << ','
                << csv_field(e.at("sigma_type").get<std::string>()) << ','
                << csv_field(e.at("recipe_template").get<std::string>()) << "\n";
  } else if (cfg.format == "pretty") {
    for (const auto& e : j)
      std::cout << e.at("family").get<std::string>() << "  n " << e.at("n_range").get<std::string>() << "  "
                << (e.at("reduced").get<bool>() ? "reduced" : "non-reduced") << "  "
                << e.at("recipe_template").get<std::string>() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of Macdonald-Koornwinder polynomials for Hermitian symmetric pairs"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.precision = default_precision();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto add_label = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Catalog family, e.g. AI1, CI, AIIIa");
    sub->add_option("--n", cfg.n, "Restricted rank (0 picks the catalog default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--m", cfg.m, "Auxiliary integer for AIIIa and AIVm")->check(CLI::NonNegativeNumber);
    sub->add_option("--sigma", cfg.sigma, "Rational parameter p/q for AIIIa and AIVm");
    sub->add_option("--level,-l", cfg.level, "Character level l");
  };

  CLI::App* compute = app.add_subcommand("compute", "Build polynomials for one label");
  add_label(compute);
  compute->add_option("--lambda", cfg.lambda, "Single dominant weight, comma-separated doubled coordinates");
  compute->add_option("--bound", cfg.bound, "All dominant weights with doubled coordinate sum <= bound")
      ->check(CLI::NonNegativeNumber);
  add_common(compute);

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suites_help = "Suite name or 'all':";
  for (const auto& s : mk::suite_names()) suites_help += " " + s;
  verify->add_option("suite", cfg.suite, suites_help);
  verify->add_option("--precision", cfg.precision, "Series truncation order M (env MK_PRECISION)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Seed for randomized property checks");
  add_common(verify);

  CLI::App* catalog = app.add_subcommand("catalog", "Dump the catalog of symmetric pairs");
  catalog->add_option("--reduced", cfg.reduced, "Only entries with (true) or without (false) a reduced root system");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_catalog(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
