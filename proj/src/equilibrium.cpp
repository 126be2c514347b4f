#include "srnet/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srnet/root_finding.hpp"

namespace srnet {

namespace {

void require_quadratic_cost(const ModelParams& params, const char* what) {
  if (params.alpha != 2.0) {
    throw unsupported_error(std::string(what) +
                            " is defined for the quadratic cost (alpha = 2)");
  }
}

void require_interior(const EquilibriumSolution& solution) {
  if (solution.is_corner || !(solution.p_star > 0.0 && solution.p_star < 1.0)) {
    throw unsupported_error("comparative statics need an interior solution (0 < p* < 1)");
  }
}

// Common denominator of the implicit derivatives:
// (v1 - v2) + (1-p)^(n-3) (1+p)^(n-4) (1 + p + (3n-7)p^2 + (n-1)(2n-5)p^3) v2
double implicit_denominator(double p, const ModelParams& params) {
  const double n = static_cast<double>(params.n);
  const double powers = detail::pow_one_minus(p, n - 3) *
                        std::exp((n - 4) * std::log1p(p));
  const double poly = 1.0 + p + (3.0 * n - 7.0) * p * p +
                      (n - 1.0) * (2.0 * n - 5.0) * p * p * p;
  return (params.v1 - params.v2) + powers * poly * params.v2;
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Low:
      return "Low";
    case Regime::High:
      return "High";
    case Regime::Critical:
      return "Critical";
  }
  return "Unknown";
}

double foc_rhs(double p, const ModelParams& params) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("foc_rhs needs p in (0,1], got " + std::to_string(p));
  }
  const double others = static_cast<double>(params.n - 1);
  const double numerator = (params.v1 - params.v2) +
                           params.v2 * detail::overlap_factor(p, params.n) *
                               (1.0 + others * p);
  const double scale = others * p;
  return params.alpha == 2.0 ? numerator / scale
                             : numerator / std::pow(scale, params.alpha - 1.0);
}

EquilibriumSolution solve_symmetric_equilibrium(const ModelParams& params, double tol) {
  params.validate();
  require_quadratic_cost(params, "solve_symmetric_equilibrium");
  if (!(tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");

  EquilibriumSolution solution;
  auto rhs = [&](double p) { return foc_rhs(p, params); };
  if (rhs(1.0) >= params.c) {
    solution.p_star = 1.0;
    solution.is_corner = true;
  } else {
    const double others = static_cast<double>(params.n - 1);
    const double start = std::min(0.5, params.v1 / (2.0 * params.c * others));
    const double lo = shrink_lower_bracket(rhs, start, params.c);
    solution.p_star = bisect_crossing(rhs, lo, 1.0, params.c, tol);
  }
  solution.expected_degree = static_cast<double>(params.n - 1) * solution.p_star;
  solution.regime = classify_regime(params);
  solution.welfare_per_agent = symmetric_expected_utility(solution.p_star, params);
  return solution;
}

RegimeLabel classify_regime(const ModelParams& params, double epsilon) {
  const double tau = params.c;
  if (params.v2 < tau - epsilon) return {Regime::Low, tau};
  if (params.v2 > tau + epsilon) return {Regime::High, tau};
  return {Regime::Critical, tau};
}

AsymptoticDegree asymptotic_degree(const ModelParams& params, double epsilon) {
  params.validate();
  switch (classify_regime(params, epsilon).regime) {
    case Regime::Low:
      return {AsymptoticDegree::Scaling::Constant, params.v1 / (params.c - params.v2)};
    case Regime::High:
      return {AsymptoticDegree::Scaling::SqrtN, std::sqrt(std::log(params.v2 / params.c))};
    case Regime::Critical:
      break;
  }
  throw unsupported_error("no asymptotic degree at the critical value v2 = c");
}

double dp_dc(const EquilibriumSolution& solution, const ModelParams& params) {
  require_quadratic_cost(params, "dp_dc");
  require_interior(solution);
  const double p = solution.p_star;
  return -static_cast<double>(params.n - 1) * p * p / implicit_denominator(p, params);
}

double dp_dv1(const EquilibriumSolution& solution, const ModelParams& params) {
  require_quadratic_cost(params, "dp_dv1");
  require_interior(solution);
  const double p = solution.p_star;
  return p / implicit_denominator(p, params);
}

double dp_dv2(const EquilibriumSolution& solution, const ModelParams& params) {
  require_quadratic_cost(params, "dp_dv2");
  require_interior(solution);
  const double p = solution.p_star;
  return p * v2_sign_indicator(p, params.n) / implicit_denominator(p, params);
}

double v2_sign_indicator(double p, std::int64_t n) {
  return detail::overlap_factor(p, n) * (1.0 + static_cast<double>(n - 1) * p) - 1.0;
}

double v2_sign_threshold(std::int64_t n) {
  if (n < 4) throw std::domain_error("v2_sign_threshold needs n >= 4");
  // g' vanishes where 2(n-1)p^2 + 3p - 1 = 0; g rises to a positive maximum
  // there and then falls monotonically to -1 at p = 1.
  const double m = static_cast<double>(n - 1);
  const double peak = (-3.0 + std::sqrt(9.0 + 8.0 * m)) / (4.0 * m);
  auto g = [n](double p) { return v2_sign_indicator(p, n); };
  return bisect_crossing(g, peak, 1.0, 0.0, 0.0);
}

}  // namespace srnet
