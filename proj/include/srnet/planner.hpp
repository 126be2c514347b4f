#pragma once

#include <optional>
#include <string>

#include "srnet/equilibrium.hpp"

namespace srnet {

// Best uniform linking probability for a utilitarian planner, i.e. the
// maximizer of symmetric_expected_utility over p.
struct PlannerSolution {
  double p_hat = 0.0;
  bool is_corner = false;
  double expected_degree = 0.0;
  RegimeLabel regime{Regime::Critical, 0.0};
  double welfare_per_agent = 0.0;
};

// c = [v1 - v2 + (1-p)^(n-2) (1+p)^(n-3) (1 + (2n-3)p) v2] / ((n-1)p)^(alpha-1)
double planner_foc_rhs(double p, const ModelParams& params);

// alpha = 2: corner if RHS(1) >= c, otherwise bisection on the planner FOC.
// Other exponents: every stationary point on a dense grid plus the corner is
// evaluated and the welfare maximizer is returned.
PlannerSolution solve_efficient(const ModelParams& params, double tol = kDefaultSolverTol);

// Threshold c / 2.
RegimeLabel classify_efficiency_regime(const ModelParams& params,
                                       double epsilon = kDefaultRegimeEpsilon);

enum class WelfareLoss { Bounded, Unbounded };

std::string_view to_string(WelfareLoss loss);

struct WelfareGap {
  std::optional<double> ratio;  // planner / equilibrium welfare per agent
  WelfareLoss classification = WelfareLoss::Bounded;
  std::string diagnostic;       // set when the ratio is undefined
};

// Finite-n welfare ratio. Loss is Unbounded iff c/2 < v2 < c.
WelfareGap welfare_gap(const ModelParams& params);

}  // namespace srnet
