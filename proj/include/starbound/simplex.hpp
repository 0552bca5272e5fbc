#pragma once

#include "starbound/lp.hpp"

#include <vector>

namespace starbound {

enum class LPStatus { Optimal, Infeasible, IterationLimit };
const char* status_name(LPStatus s);

struct SolveOptions {
  double tol = 1e-9;
  int max_iterations = 200000;
  /// Consecutive degenerate pivots before switching from Dantzig to Bland pricing.
  int bland_after = 50;
};

/// Row order of `dual` and `ray`: the LP rows, then one upper-box row per column.
struct SolveResult {
  LPStatus status = LPStatus::IterationLimit;
  double value = 0;
  std::vector<double> x;
  std::vector<double> dual;
  std::vector<double> ray;
  int iterations = 0;
};

/// Dense tableau simplex on the dual of the box-shifted problem. Deterministic.
SolveResult solve_max(const LPProblem& lp, const SolveOptions& opt = {});

}  // namespace starbound
