#pragma once

#include <Eigen/Dense>

#include "lfsim/tolerances.hpp"

namespace lfsim::lfpoly {

/// min 0 s.t. a_eq x = b_eq, a_le x <= b_le, x >= 0.
struct LinearProgram {
  int num_vars = 0;
  Eigen::MatrixXd a_eq;
  Eigen::VectorXd b_eq;
  Eigen::MatrixXd a_le;
  Eigen::VectorXd b_le;

  /// Throws on inconsistent dimensions.
  void validate() const;
};

struct FeasibilityResult {
  bool feasible = false;
  Eigen::VectorXd witness;      // satisfies all constraints within tol
  double infeasibility = 0.0;   // phase-1 objective at optimum (0 if feasible)
  bool ill_conditioned = false; // coefficient-range heuristic tripped
};

/// Phase-1 simplex with Bland's pivot rule (deterministic, cycle-free).
/// Programs with coefficient magnitude ratios beyond 1e12 are flagged as
/// ill-conditioned rather than silently answered.
FeasibilityResult simplex_feasibility(const LinearProgram& lp,
                                      double tol = kTolLP);

}  // namespace lfsim::lfpoly
