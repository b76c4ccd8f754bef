#pragma once

// Acceptance harness: one result per criterion, with pinned tolerances.

#include <string>
#include <vector>

namespace periodgeom {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance();

bool all_criteria_passed(const std::vector<CriterionResult>& results);

}  // namespace periodgeom
