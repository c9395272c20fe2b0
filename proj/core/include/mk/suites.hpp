#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mk/identities.hpp"
#include "mk/qsp1.hpp"

namespace mk {

struct Check {
  std::string id;        // e.g. "weight-shift/CI2/l=1"
  std::string property;  // what the check asserts
  bool passed = false;
  bool precision_exhausted = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;  // sorted by id
  bool passed() const;
  const Check* first_failure() const;
  std::string json() const;
};

struct SuiteOptions {
  int M = kDefaultPrecision;
  std::uint64_t seed = 1;
  int random_cases = 6;
};

// Labels used by the orthogonality, bar and operator suites, with the
// weights each one is tested on.
struct LabelCase {
  std::string id;
  KLabel label;
  std::vector<Weight> lambdas;
};
std::vector<LabelCase> standard_label_cases();

SuiteResult suite_weight_shift_reduced();
SuiteResult suite_weight_shift_nonreduced();
SuiteResult suite_orthogonality(const SuiteOptions& opt = {});
SuiteResult suite_rank1();
SuiteResult suite_bar_invariance();
SuiteResult suite_eigenvalue_identity();
SuiteResult suite_connection();
SuiteResult suite_operator_soundness(const SuiteOptions& opt = {});

// "weight-shift" runs both weight-shift suites merged.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});  // throws "unknown suite"

}  // namespace mk
