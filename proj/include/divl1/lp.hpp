#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "divl1/diversity.hpp"
#include "divl1/splits.hpp"

namespace divl1 {

enum class ConstraintSense { le, ge, eq };

// min objective . x subject to constraints * x (sense) rhs, x >= 0.
// Optional per-variable upper bounds (empty vector = none; +inf entries
// leave a variable unbounded above).
struct LpProblem {
  Eigen::VectorXd objective;
  Eigen::MatrixXd constraints;
  std::vector<ConstraintSense> senses;
  Eigen::VectorXd rhs;
  Eigen::VectorXd upper_bounds;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpSolution {
  LpStatus status = LpStatus::iteration_limit;
  double objective = 0.0;
  Eigen::VectorXd x;
  int iterations = 0;
};

struct LpOptions {
  double pivot_tol = 1e-10;
  double feasibility_tol = 1e-7;
  int max_iterations = 200000;
};

// Two-phase dense simplex, Bland's rule on both the entering and leaving
// choices; fully deterministic. Hitting max_iterations is reported via
// LpStatus::iteration_limit, never silently.
LpSolution solve_lp(const LpProblem& p, const LpOptions& options = {});

// Plain-text dump (objective row, then one constraint per line) for
// external cross-checking.
std::string dump_lp(const LpProblem& p);

// Canonical split representatives of {0..n-1} in ascending bitmask order.
std::vector<Subset> canonical_splits(int n);

// min c subject to delta(A) <= sum_B w_B delta_B(A) <= c delta(A) for every
// |A| >= 2, w >= 0, c >= 1. Variables are ordered [w for each given split, c].
LpProblem make_split_distortion_lp(const FiniteDiversity& div, const std::vector<Subset>& splits);

struct SplitDistortionResult {
  double distortion = 1.0;
  SplitWeighting witness;
  LpSolution solution;
};

// Optimal distortion achievable by any non-negative split combination,
// via LP over all canonical splits. Requires n <= 8. The witness is checked
// to satisfy delta <= delta-hat <= c delta within the reporting tolerance.
SplitDistortionResult optimal_split_distortion(const FiniteDiversity& div);

}  // namespace divl1
