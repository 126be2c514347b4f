#pragma once

#include <cstdint>
#include <string_view>

#include "srnet/core_model.hpp"

namespace srnet {

inline constexpr double kDefaultSolverTol = 1e-12;
inline constexpr double kDefaultRegimeEpsilon = 1e-9;

enum class Regime { Low, High, Critical };

std::string_view to_string(Regime regime);

struct RegimeLabel {
  Regime regime;
  double threshold;  // the value of v2 separating the two regimes
};

struct EquilibriumSolution {
  double p_star = 0.0;
  bool is_corner = false;
  double expected_degree = 0.0;  // (n-1) p_star
  RegimeLabel regime{Regime::Critical, 0.0};
  double welfare_per_agent = 0.0;
};

// Right-hand side of the symmetric FOC written as c = RHS(p):
//   [(v1 - v2) + v2 (1-p)^(n-2) (1+p)^(n-3) (1 + (n-1)p)] / ((n-1)p)^(alpha-1)
// For alpha = 2 it is strictly decreasing on (0,1]. Throws std::domain_error
// for p outside (0,1].
double foc_rhs(double p, const ModelParams& params);

// Unique symmetric equilibrium with positive linking probability for the
// quadratic cost (alpha = 2). Returns the corner p* = 1 when RHS(1) >= c,
// otherwise bisects RHS(p) = c. tol is relative to p. Other cost exponents
// are handled by solve_alpha_equilibrium and raise unsupported_error here.
EquilibriumSolution solve_symmetric_equilibrium(const ModelParams& params,
                                                double tol = kDefaultSolverTol);

// Low when v2 < c - eps, High when v2 > c + eps, Critical otherwise.
RegimeLabel classify_regime(const ModelParams& params,
                            double epsilon = kDefaultRegimeEpsilon);

// Large-n behaviour of the expected degree (n-1) p*.
struct AsymptoticDegree {
  enum class Scaling { Constant, SqrtN };
  Scaling scaling;
  double value;  // the limit itself, or the coefficient of sqrt(n)
};

// Low: v1 / (c - v2). High: sqrt(log(v2 / c)). Critical: unsupported_error.
AsymptoticDegree asymptotic_degree(const ModelParams& params,
                                   double epsilon = kDefaultRegimeEpsilon);

// Implicit derivatives of p* at an interior solution (alpha = 2).
// Throw unsupported_error for a corner solution.
double dp_dc(const EquilibriumSolution& solution, const ModelParams& params);
double dp_dv1(const EquilibriumSolution& solution, const ModelParams& params);
double dp_dv2(const EquilibriumSolution& solution, const ModelParams& params);

// g(p) = (1-p)^(n-2) (1+p)^(n-3) (1 + (n-1)p) - 1; its sign is the sign of
// dp*/dv2.
double v2_sign_indicator(double p, std::int64_t n);

// The unique root of g in (0,1). g > 0 below it (raising v2 raises p*) and
// g < 0 above it (free riding dominates). Requires n >= 4.
double v2_sign_threshold(std::int64_t n);

}  // namespace srnet
