#pragma once

#include "vbs/weyl.hpp"

namespace vbs {

/// Evaluation of a Renyi entropy at (possibly complex) alpha. When the power
/// sum Tr rho^alpha vanishes, alpha sits on a branch point and `value` is
/// meaningless.
struct RenyiValue {
  Complex value;
  bool branch_point = false;
};

// |Tr rho^alpha| at or below this fraction of sum_i |lambda_i^alpha| marks a branch point.
inline constexpr double kBranchPointTolerance = 1e-14;

}  // namespace vbs
