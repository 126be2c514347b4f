#include "srnet/planner.hpp"

#include <algorithm>
#include <cmath>

#include "srnet/root_finding.hpp"

namespace srnet {

double planner_foc_rhs(double p, const ModelParams& params) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("planner_foc_rhs needs p in (0,1], got " + std::to_string(p));
  }
  const double n = static_cast<double>(params.n);
  const double numerator = params.v1 - params.v2 +
                           detail::overlap_factor(p, params.n) *
                               (1.0 + (2.0 * n - 3.0) * p) * params.v2;
  const double scale = (n - 1.0) * p;
  return params.alpha == 2.0 ? numerator / scale
                             : numerator / std::pow(scale, params.alpha - 1.0);
}

PlannerSolution solve_efficient(const ModelParams& params, double tol) {
  params.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");

  auto rhs = [&](double p) { return planner_foc_rhs(p, params); };
  const double others = static_cast<double>(params.n - 1);
  const double start = std::min(0.5, params.v1 / (2.0 * params.c * others));

  PlannerSolution solution;
  if (params.alpha == 2.0) {
    if (rhs(1.0) >= params.c) {
      solution.p_hat = 1.0;
      solution.is_corner = true;
    } else {
      const double lo = shrink_lower_bracket(rhs, start, params.c);
      solution.p_hat = bisect_crossing(rhs, lo, 1.0, params.c, tol);
    }
  } else {
    const double lo = shrink_lower_bracket(rhs, start, params.c);
    std::vector<double> candidates = grid_crossings(rhs, log_grid(lo, 1.0, 4096), params.c, tol);
    candidates.push_back(1.0);
    double best_welfare = -INFINITY;
    for (double p : candidates) {
      const double w = symmetric_expected_utility(p, params);
      if (w > best_welfare) {
        best_welfare = w;
        solution.p_hat = p;
      }
    }
    solution.is_corner = solution.p_hat == 1.0;
  }
  solution.expected_degree = others * solution.p_hat;
  solution.regime = classify_efficiency_regime(params);
  solution.welfare_per_agent = symmetric_expected_utility(solution.p_hat, params);
  return solution;
}

RegimeLabel classify_efficiency_regime(const ModelParams& params, double epsilon) {
  const double tau = params.c / 2.0;
  if (params.v2 < tau - epsilon) return {Regime::Low, tau};
  if (params.v2 > tau + epsilon) return {Regime::High, tau};
  return {Regime::Critical, tau};
}

std::string_view to_string(WelfareLoss loss) {
  return loss == WelfareLoss::Bounded ? "Bounded" : "Unbounded";
}

WelfareGap welfare_gap(const ModelParams& params) {
  params.validate();
  WelfareGap gap;
  gap.classification = (params.c / 2.0 < params.v2 && params.v2 < params.c)
                           ? WelfareLoss::Unbounded
                           : WelfareLoss::Bounded;

  // Equilibrium for non-quadratic costs comes from the extensions module;
  // the ratio here is defined for the baseline model.
  const EquilibriumSolution eq = solve_symmetric_equilibrium(params);
  const PlannerSolution eff = solve_efficient(params);
  if (eq.is_corner || eff.is_corner) {
    gap.diagnostic = "corner solution: welfare ratio reported for interior solutions only";
    return gap;
  }
  if (!(eq.welfare_per_agent > 0.0)) {
    gap.diagnostic = "equilibrium welfare is not positive (" +
                     std::to_string(eq.welfare_per_agent) + ")";
    return gap;
  }
  gap.ratio = eff.welfare_per_agent / eq.welfare_per_agent;
  return gap;
}

}  // namespace srnet
