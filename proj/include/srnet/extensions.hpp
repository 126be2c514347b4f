#pragma once

#include <optional>
#include <span>
#include <vector>

#include "srnet/equilibrium.hpp"

namespace srnet {

// Symmetric equilibrium when costs scale as (c/alpha) (sum_j p_ij)^alpha.
// Stationarity of deviation_utility at q = p gives
//   c ((n-1)p)^(alpha-1) = (v1-v2) + v2 (1-p)^(n-2) (1+p)^(n-3) (1+(n-1)p),
// i.e. foc_rhs(p) = c. Every solution is an equilibrium because the
// deviation utility is strictly concave in q. alpha = 2 uses the monotone
// bisection; otherwise all crossings on a 4096-point log grid are refined and
// the one with the highest symmetric welfare is returned (the corner p = 1 is
// a candidate when RHS(1) >= c). Throws std::domain_error for alpha <= 1.
EquilibriumSolution solve_alpha_equilibrium(const ModelParams& params,
                                            double tol = kDefaultSolverTol);

// All symmetric equilibria found by the grid scan, ascending in p.
std::vector<double> alpha_equilibrium_candidates(const ModelParams& params,
                                                 double tol = kDefaultSolverTol);

struct AlphaSweepRow {
  double alpha;
  double v2;
  double p_star;
  double expected_degree;
};

// Rows in alpha-major, v2-minor order. base.v2 is ignored.
std::vector<AlphaSweepRow> alpha_sweep(const ModelParams& base, std::span<const double> alphas,
                                       std::span<const double> v2_grid);

// v2 values lo, lo + step, ... strictly below hi, generated as lo + k * step.
std::vector<double> make_v2_grid(double lo, double hi, double step);

// First v2 whose degree exceeds factor times the degree at baseline_v2.
// nullopt when the baseline is absent from the grid or no jump occurs.
std::optional<double> detect_transition(std::span<const double> v2,
                                        std::span<const double> degree,
                                        double baseline_v2 = 0.05, double factor = 10.0);

}  // namespace srnet
