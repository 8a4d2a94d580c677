#pragma once

#include <string>
#include <vector>

namespace farey {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
};

// The acceptance criteria, grouped into suites. Each function returns its
// criteria in numbering order; run_all_suites returns all eleven.
std::vector<CriterionResult> run_counts_suite();       // 1, 8
std::vector<CriterionResult> run_equivalence_suite();  // 2, 11
std::vector<CriterionResult> run_grainline_suite();    // 3, 4, 5
std::vector<CriterionResult> run_minor_suite();        // 6, 7
std::vector<CriterionResult> run_pipeline_suite();     // 9, 10
std::vector<CriterionResult> run_all_suites();

}  // namespace farey
