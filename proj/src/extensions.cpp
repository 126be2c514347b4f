#include "srnet/extensions.hpp"

#include <algorithm>
#include <cmath>

#include "srnet/root_finding.hpp"

namespace srnet {

namespace {

void require_alpha(const ModelParams& params) {
  if (!(params.alpha > 1.0)) throw std::domain_error("cost exponent alpha must be > 1");
}

}  // namespace

std::vector<double> alpha_equilibrium_candidates(const ModelParams& params, double tol) {
  require_alpha(params);
  params.validate();
  auto rhs = [&](double p) { return foc_rhs(p, params); };
  const double others = static_cast<double>(params.n - 1);
  const double start = std::min(0.5, params.v1 / (2.0 * params.c * others));
  const double lo = shrink_lower_bracket(rhs, start, params.c);
  std::vector<double> roots = grid_crossings(rhs, log_grid(lo, 1.0, 4096), params.c, tol);
  if (rhs(1.0) >= params.c) roots.push_back(1.0);
  return roots;
}

EquilibriumSolution solve_alpha_equilibrium(const ModelParams& params, double tol) {
  require_alpha(params);
  if (params.alpha == 2.0) return solve_symmetric_equilibrium(params, tol);

  const std::vector<double> candidates = alpha_equilibrium_candidates(params, tol);
  if (candidates.empty()) throw std::runtime_error("no symmetric equilibrium located");
  EquilibriumSolution solution;
  solution.welfare_per_agent = -INFINITY;
  for (double p : candidates) {
    const double w = symmetric_expected_utility(p, params);
    if (w > solution.welfare_per_agent) {
      solution.welfare_per_agent = w;
      solution.p_star = p;
    }
  }
  solution.is_corner = solution.p_star == 1.0;
  solution.expected_degree = static_cast<double>(params.n - 1) * solution.p_star;
  solution.regime = classify_regime(params);
  return solution;
}

std::vector<AlphaSweepRow> alpha_sweep(const ModelParams& base, std::span<const double> alphas,
                                       std::span<const double> v2_grid) {
  std::vector<AlphaSweepRow> rows;
  rows.reserve(alphas.size() * v2_grid.size());
  for (double alpha : alphas) {
    for (double v2 : v2_grid) {
      ModelParams params = base;
      params.alpha = alpha;
      params.v2 = v2;
      const EquilibriumSolution eq = solve_alpha_equilibrium(params);
      rows.push_back({alpha, v2, eq.p_star, eq.expected_degree});
    }
  }
  return rows;
}

std::vector<double> make_v2_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw std::invalid_argument("invalid v2 grid");
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double v = lo + static_cast<double>(k) * step;
    // tolerance so that e.g. hi = 1, step = 0.005 stops at 0.995
    if (v >= hi - 1e-9 * step) break;
    grid.push_back(v);
  }
  return grid;
}

std::optional<double> detect_transition(std::span<const double> v2,
                                        std::span<const double> degree,
                                        double baseline_v2, double factor) {
  if (v2.size() != degree.size()) throw std::invalid_argument("grid and degree lengths differ");
  std::optional<double> baseline;
  for (std::size_t k = 0; k < v2.size(); ++k) {
    if (std::abs(v2[k] - baseline_v2) < 1e-12) baseline = degree[k];
  }
  if (!baseline) return std::nullopt;
  for (std::size_t k = 0; k < v2.size(); ++k) {
    if (v2[k] > baseline_v2 && degree[k] > factor * *baseline) return v2[k];
  }
  return std::nullopt;
}

}  // namespace srnet
