// Runs the acceptance suite and prints one line per criterion.

#include <cstdio>

#include "periodgeom/acceptance.hpp"

int main() {
  const auto results = periodgeom::run_acceptance();
  for (const auto& r : results) {
    std::printf("%s %2d %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.empty() ? "" : ": ", r.detail.c_str());
  }
  return periodgeom::all_criteria_passed(results) ? 0 : 1;
}
