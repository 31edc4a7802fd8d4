#pragma once

#include <string>
#include <vector>

namespace vpt {
namespace verify {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

// Runs the acceptance criteria (all, or the one whose name contains `only`).
std::vector<CriterionResult> run_acceptance(const std::string& only = "");

}  // namespace verify
}  // namespace vpt
