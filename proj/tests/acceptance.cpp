#include <cstdio>

#include "solenoid/verify/acceptance.hpp"

int main() {
  const auto results = solenoid::verify::run_acceptance(solenoid::verify::Scale::Full);
  int failed = 0;
  double total = 0;
  for (const auto& r : results) {
    std::printf("%s\n", solenoid::verify::format_result(r).c_str());
    failed += r.passed ? 0 : 1;
    total += r.seconds;
  }
  std::printf("%zu criteria, %d failed, %.2f s\n", results.size(), failed, total);
  return failed == 0 ? 0 : 1;
}
