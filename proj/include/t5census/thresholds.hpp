#pragma once

namespace t5census {

// Constants eta << mu << beta << alpha used by the structural condition
// checkers. A tuple is valid when it satisfies the hierarchy inequalities
// (see threshold_hierarchy_check in bounds.hpp).
struct Thresholds {
  double eta = 1e-51;
  double mu = 1e-15;
  double alpha = 7e-4;
  double beta = 1e-10;
};

inline constexpr Thresholds kDefaultThresholds{};

}  // namespace t5census
