#pragma once

#include <string>
#include <vector>

namespace lgcy {

// Outcome of a verification harness. Witnesses name failing cases; `cases`
// counts every comparison made.
struct CheckReport {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::vector<std::string> witnesses;
  std::string max_deviation;  // numeric checks only
  std::vector<std::string> notes;

  void fail(std::string witness) {
    passed = false;
    if (witnesses.size() < 32) witnesses.push_back(std::move(witness));
  }
  void merge(const CheckReport& o) {
    passed = passed && o.passed;
    cases += o.cases;
    for (const auto& w : o.witnesses)
      if (witnesses.size() < 32) witnesses.push_back(w);
    for (const auto& n : o.notes) notes.push_back(n);
    if (!o.max_deviation.empty() && (max_deviation.empty() || std::stod(o.max_deviation) > std::stod(max_deviation)))
      max_deviation = o.max_deviation;
  }
};

}  // namespace lgcy
