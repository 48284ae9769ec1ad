#pragma once

#include <string>
#include <vector>

namespace solenoid::verify {

/// Full runs every criterion at its stated sample size; Fast uses smaller
/// samples for `solenoid selftest`.
enum class Scale { Fast, Full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

[[nodiscard]] std::vector<CriterionResult> run_acceptance(Scale scale);

/// `PASS  [ 3] title (detail, 0.012 s)`.
[[nodiscard]] std::string format_result(const CriterionResult& r);

}  // namespace solenoid::verify
