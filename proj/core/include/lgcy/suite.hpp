#pragma once

#include <string>
#include <vector>

#include "lgcy/model.hpp"
#include "lgcy/precision.hpp"
#include "lgcy/report.hpp"

namespace lgcy {

struct SuiteOptions {
  long l_min = -5;
  long l_max = 5;
  int order = 6;
  int digits = kDefaultDigits;
  int jobs = 1;
};

struct CheckResult {
  CheckReport report;
  double seconds = 0;
};

// induced, delta, qsd, ksquare, gamma-pairing, chi, lgcy, ifunction.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

// Tolerance 10^{-(digits - 30)}, floored at 10^{-10}.
Real numeric_tolerance(int digits);

CheckReport run_check(const SymmetryGroup& G, const std::string& name, const SuiteOptions& opt);
// Runs the named checks on up to opt.jobs threads; results keep the order of `names`.
std::vector<CheckResult> run_checks(const SymmetryGroup& G, const std::vector<std::string>& names,
                                    const SuiteOptions& opt);

}  // namespace lgcy
