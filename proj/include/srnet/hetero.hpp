#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "srnet/core_model.hpp"
#include "srnet/equilibrium.hpp"

namespace srnet {

// Finite distribution of privately known cost coefficients.
class CostDistribution {
 public:
  CostDistribution(std::vector<double> costs, std::vector<double> probs);

  static CostDistribution degenerate(double cost);
  // Builds the distribution of costs 1/s from sociabilities s.
  static CostDistribution from_sociabilities(std::span<const double> sociabilities,
                                             std::vector<double> probs);

  std::size_t size() const noexcept { return costs_.size(); }
  std::span<const double> costs() const noexcept { return costs_; }
  std::span<const double> probs() const noexcept { return probs_; }
  double mean_cost() const;

 private:
  std::vector<double> costs_;
  std::vector<double> probs_;
};

// Moments of sociability S = 1/C and the equilibrium threshold E[S]/E[S^2].
struct SociabilityMoments {
  double e_s = 0.0;
  double e_s2 = 0.0;
  double tau = 0.0;

  double variance() const { return e_s2 - e_s * e_s; }
};

SociabilityMoments hetero_threshold(const CostDistribution& dist);

// Right-hand side of the per-type FOC c_h = RHS under the product kernel:
//   [(v1-v2) E[X] + v2 E[X (1 - x_h E[X^2] X)^(n-3) (1 + (n-2)E[X^2] - (n-1) x_h X E[X^2])]]
//   / [x_h (E[X^2] + (n-2) E[X]^2)]
// where X is an opponent's intensity (value x[k] with probability probs[k])
// and x_h is the agent's own intensity. Expectations are exact finite sums.
double hetero_foc_rhs(double own, std::span<const double> x,
                      const CostDistribution& dist, const ModelParams& params);

// Same, evaluated at the type's own entry: own = x[h].
double hetero_foc_rhs(std::size_t h, std::span<const double> x,
                      const CostDistribution& dist, const ModelParams& params);

struct HeteroSolverOptions {
  double tol = 1e-10;     // on the max intensity change per sweep
  int max_iter = 10000;
  double damping = 0.5;   // weight of the best response in each update
};

struct HeteroEquilibrium {
  std::vector<double> intensities;  // x_h* per cost type
  std::vector<double> residuals;    // RHS_h - c_h (zero at a binding corner)
  bool converged = false;
  int iterations = 0;
  double last_change = 0.0;

  // (n-1) x_h E[X]: expected number of friends of a type-h agent.
  std::vector<double> expected_degrees(const CostDistribution& dist,
                                       std::int64_t n) const;
};

// Damped best-response iteration started from the homogeneous equilibrium
// for the mean cost. params.c is ignored; costs come from dist. Requires
// alpha = 2. A non-converged result is returned with converged = false.
HeteroEquilibrium solve_hetero_equilibrium(const CostDistribution& dist,
                                           const ModelParams& params,
                                           const HeteroSolverOptions& options = {});

// Low-regime limit of the expected degree of each type,
//   s_h E[S] v1 / (E[S] - v2 E[S^2]),
// which reduces to v1 / (c - v2) for a degenerate distribution.
// Throws unsupported_error unless v2 < tau.
std::vector<double> low_regime_degree_limits(const CostDistribution& dist,
                                             double v1, double v2);

enum class DistributionShift { MeanPreservingSpread, VariancePreservingMeanShift };

struct TauComparison {
  DistributionShift shift;
  double tau_base = 0.0;
  double tau_other = 0.0;
  bool tau_decreased = false;
  // For mean shifts: tau = m / (m^2 + var) rises with m iff m < sd at the
  // base mean.
  std::optional<bool> predicted_increase;
};

// Compares tau across a certified pair: equal sociability means with larger
// variance (spread), or equal variances with different means (shift), both
// to 1e-12. Throws std::invalid_argument otherwise.
TauComparison mps_tau_comparative(const CostDistribution& base,
                                  const CostDistribution& other);

// The strict inequality
//   E[d' E[d]^2 / (E[d^2] A(d'))] < E[d'^2 E[d]^4 / (E[d^2]^2 A(d')^2)],
//   A(d') = E[d exp(-d' d E[d^2])],
// evaluated in log space with exact finite sums. d must be positive with at
// least two distinct support points.
bool lemma_inequality_check(std::span<const double> d, std::span<const double> probs);

struct LemmaSides {
  double log_lhs;
  double log_rhs;
};
LemmaSides lemma_sides(std::span<const double> d, std::span<const double> probs);

}  // namespace srnet
