#pragma once

#include <functional>
#include <string>
#include <vector>

namespace azposet::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  double time_budget_seconds;  // 0 for none
  std::function<CriterionResult()> run;
};

/// The ten acceptance criteria in order.
const std::vector<Criterion>& criteria();

/// Runs the selected criteria (all when `ids` is empty). Each result is also
/// handed to `on_result` as soon as it is known.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace azposet::verify
