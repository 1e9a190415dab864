#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace t5census {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string claim;
  bool passed = false;
  std::string detail;
  double elapsed_seconds = 0;
};

// Body returns pass/fail plus a one-line detail with the recorded values.
using CriterionBody = std::pair<bool, std::string> (*)();

struct CriterionInfo {
  int id;
  const char* name;
  const char* claim;
  CriterionBody run;
};

// The acceptance gate. The array length is pinned: registering a new
// criterion without bumping the count (and vice versa) fails to compile.
inline constexpr int kCriterionCount = 12;

const std::array<CriterionInfo, kCriterionCount>& acceptance_registry();

CriterionResult run_criterion(int id);  // ids are 1..kCriterionCount
std::vector<CriterionResult> run_all_criteria();

// "PASS  3 counting-gap-n6: ..." - one line, no volatile fields.
std::string criterion_line(const CriterionResult& r);

}  // namespace t5census
