#pragma once

#include <string>
#include <vector>

namespace pin2k {

// One acceptance criterion outcome. The suite is deterministic (fixed RNG
// seed) and exact: every comparison is equality of exact values except the
// floating cross-check, which uses the stated 1e-9 window.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance_suite();

bool acceptance_all_pass(const std::vector<CriterionResult>& results);

// One line per criterion: "PASS  1  degree closed forms ...".
std::string render_acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace pin2k
