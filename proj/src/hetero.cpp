#include "srnet/hetero.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "srnet/root_finding.hpp"

namespace srnet {

namespace {

constexpr double kProbSumTol = 1e-12;
constexpr double kCertifyTol = 1e-12;

void validate_probs(std::span<const double> probs, std::size_t expected) {
  if (probs.size() != expected) {
    throw std::invalid_argument("probability vector length must match support size");
  }
  double total = 0.0;
  for (double q : probs) {
    if (!(q >= 0.0) || !std::isfinite(q)) {
      throw std::invalid_argument("probabilities must be finite and nonnegative");
    }
    total += q;
  }
  if (std::abs(total - 1.0) > kProbSumTol) {
    throw std::invalid_argument("probabilities must sum to 1, got " + std::to_string(total));
  }
}

struct IntensityMoments {
  double m1;
  double m2;
};

IntensityMoments moments_of(std::span<const double> x, std::span<const double> probs) {
  IntensityMoments m{0.0, 0.0};
  for (std::size_t k = 0; k < x.size(); ++k) {
    m.m1 += probs[k] * x[k];
    m.m2 += probs[k] * x[k] * x[k];
  }
  return m;
}

double rhs_with_moments(double own, std::span<const double> x, std::span<const double> probs,
                        const IntensityMoments& m, const ModelParams& params) {
  const double n = static_cast<double>(params.n);
  double indirect = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double xk = x[k];
    indirect += probs[k] * xk * detail::pow_one_minus(own * m.m2 * xk, n - 3.0) *
                (1.0 + (n - 2.0) * m.m2 - (n - 1.0) * own * xk * m.m2);
  }
  const double numerator = (params.v1 - params.v2) * m.m1 + params.v2 * indirect;
  return numerator / (own * (m.m2 + (n - 2.0) * m.m1 * m.m1));
}

void check_intensities(std::span<const double> x, const CostDistribution& dist) {
  if (x.size() != dist.size()) {
    throw std::invalid_argument("intensity vector length must match number of cost types");
  }
  for (double xk : x) {
    if (!(xk > 0.0 && xk <= 1.0)) {
      throw std::domain_error("intensities must lie in (0,1]");
    }
  }
}

double best_response(double cost, double start, std::span<const double> x,
                     std::span<const double> probs, const IntensityMoments& m,
                     const ModelParams& params) {
  auto rhs = [&](double own) { return rhs_with_moments(own, x, probs, m, params); };
  if (rhs(1.0) >= cost) return 1.0;
  const double lo = shrink_lower_bracket(rhs, std::min(start, 0.5), cost);
  return bisect_crossing(rhs, lo, 1.0, cost, 1e-15);
}

double log_sum_exp(const std::vector<double>& terms) {
  const double top = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

double centered_variance(const CostDistribution& dist, double mean) {
  double var = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double dev = 1.0 / dist.costs()[k] - mean;
    var += dist.probs()[k] * dev * dev;
  }
  return var;
}

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= kCertifyTol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

CostDistribution::CostDistribution(std::vector<double> costs, std::vector<double> probs)
    : costs_(std::move(costs)), probs_(std::move(probs)) {
  if (costs_.empty()) throw std::invalid_argument("cost distribution needs at least one type");
  for (double c : costs_) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("costs must be finite and positive");
    }
  }
  validate_probs(probs_, costs_.size());
}

CostDistribution CostDistribution::degenerate(double cost) { return {{cost}, {1.0}}; }

CostDistribution CostDistribution::from_sociabilities(std::span<const double> sociabilities,
                                                      std::vector<double> probs) {
  std::vector<double> costs;
  costs.reserve(sociabilities.size());
  for (double s : sociabilities) {
    if (!(s > 0.0)) throw std::invalid_argument("sociabilities must be positive");
    costs.push_back(1.0 / s);
  }
  return {std::move(costs), std::move(probs)};
}

double CostDistribution::mean_cost() const {
  double mean = 0.0;
  for (std::size_t k = 0; k < size(); ++k) mean += probs_[k] * costs_[k];
  return mean;
}

SociabilityMoments hetero_threshold(const CostDistribution& dist) {
  SociabilityMoments m;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double s = 1.0 / dist.costs()[k];
    m.e_s += dist.probs()[k] * s;
    m.e_s2 += dist.probs()[k] * s * s;
  }
  m.tau = m.e_s / m.e_s2;
  return m;
}

double hetero_foc_rhs(double own, std::span<const double> x, const CostDistribution& dist,
                      const ModelParams& params) {
  if (!(own > 0.0 && own <= 1.0)) {
    throw std::domain_error("own intensity must lie in (0,1], got " + std::to_string(own));
  }
  check_intensities(x, dist);
  return rhs_with_moments(own, x, dist.probs(), moments_of(x, dist.probs()), params);
}

double hetero_foc_rhs(std::size_t h, std::span<const double> x, const CostDistribution& dist,
                      const ModelParams& params) {
  if (h >= x.size()) throw std::out_of_range("cost type index out of range");
  return hetero_foc_rhs(x[h], x, dist, params);
}

std::vector<double> HeteroEquilibrium::expected_degrees(const CostDistribution& dist,
                                                        std::int64_t n) const {
  const IntensityMoments m = moments_of(intensities, dist.probs());
  std::vector<double> degrees(intensities.size());
  for (std::size_t h = 0; h < intensities.size(); ++h) {
    degrees[h] = static_cast<double>(n - 1) * intensities[h] * m.m1;
  }
  return degrees;
}

HeteroEquilibrium solve_hetero_equilibrium(const CostDistribution& dist,
                                           const ModelParams& params,
                                           const HeteroSolverOptions& options) {
  ModelParams mean_params = params;
  mean_params.c = dist.mean_cost();
  mean_params.validate();
  if (params.alpha != 2.0) {
    throw unsupported_error("heterogeneous equilibrium is defined for alpha = 2");
  }
  if (!(options.tol > 0.0) || options.max_iter < 1 ||
      !(options.damping > 0.0 && options.damping <= 1.0)) {
    throw std::invalid_argument("invalid heterogeneous solver options");
  }

  const std::size_t m = dist.size();
  const double start = std::sqrt(solve_symmetric_equilibrium(mean_params).p_star);
  std::vector<double> x(m, start);
  std::vector<double> next(m);

  HeteroEquilibrium result;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    const IntensityMoments moments = moments_of(x, dist.probs());
    double change = 0.0;
    for (std::size_t h = 0; h < m; ++h) {
      const double br = best_response(dist.costs()[h], x[h], x, dist.probs(), moments, params);
      next[h] = std::clamp((1.0 - options.damping) * x[h] + options.damping * br,
                           std::numeric_limits<double>::min(), 1.0);
      change = std::max(change, std::abs(next[h] - x[h]));
    }
    x.swap(next);
    result.iterations = iter;
    result.last_change = change;
    if (change < options.tol) {
      result.converged = true;
      break;
    }
  }

  result.intensities = x;
  result.residuals.resize(m);
  for (std::size_t h = 0; h < m; ++h) {
    const double r = hetero_foc_rhs(h, x, dist, params) - dist.costs()[h];
    result.residuals[h] = (x[h] == 1.0 && r >= 0.0) ? 0.0 : r;
  }
  return result;
}

std::vector<double> low_regime_degree_limits(const CostDistribution& dist, double v1,
                                             double v2) {
  const SociabilityMoments m = hetero_threshold(dist);
  if (!(v2 < m.tau)) {
    throw unsupported_error("low-regime limits need v2 below E[S]/E[S^2]");
  }
  std::vector<double> limits(dist.size());
  for (std::size_t h = 0; h < dist.size(); ++h) {
    const double s = 1.0 / dist.costs()[h];
    limits[h] = s * m.e_s * v1 / (m.e_s - v2 * m.e_s2);
  }
  return limits;
}

TauComparison mps_tau_comparative(const CostDistribution& base, const CostDistribution& other) {
  const SociabilityMoments mb = hetero_threshold(base);
  const SociabilityMoments mo = hetero_threshold(other);
  const double var_b = centered_variance(base, mb.e_s);
  const double var_o = centered_variance(other, mo.e_s);

  TauComparison out{DistributionShift::MeanPreservingSpread, mb.tau, mo.tau,
                    mo.tau < mb.tau, std::nullopt};
  if (nearly_equal(mb.e_s, mo.e_s) && var_o > var_b && !nearly_equal(var_b, var_o)) {
    return out;
  }
  if (nearly_equal(var_b, var_o) && !nearly_equal(mb.e_s, mo.e_s)) {
    out.shift = DistributionShift::VariancePreservingMeanShift;
    out.predicted_increase = mb.e_s < std::sqrt(var_b);
    return out;
  }
  throw std::invalid_argument(
      "distribution pair is neither a mean-preserving spread nor a variance-preserving mean shift");
}

LemmaSides lemma_sides(std::span<const double> d, std::span<const double> probs) {
  if (d.empty()) throw std::invalid_argument("lemma needs a nonempty support");
  validate_probs(probs, d.size());
  for (double v : d) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("lemma support must be strictly positive");
    }
  }
  std::vector<double> support;
  std::vector<double> weight;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (probs[k] > 0.0) {
      support.push_back(d[k]);
      weight.push_back(probs[k]);
    }
  }
  if (std::adjacent_find(support.begin(), support.end(),
                         [](double a, double b) { return a != b; }) == support.end()) {
    throw std::invalid_argument("lemma needs at least two distinct support points");
  }

  double m1 = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    m1 += weight[k] * support[k];
    m2 += weight[k] * support[k] * support[k];
  }

  const std::size_t m = support.size();
  std::vector<double> terms(m);
  std::vector<double> lhs_terms(m);
  std::vector<double> rhs_terms(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      terms[k] = std::log(weight[k]) + std::log(support[k]) - support[j] * support[k] * m2;
    }
    const double log_a = log_sum_exp(terms);
    lhs_terms[j] = std::log(weight[j]) + std::log(support[j]) - log_a;
    rhs_terms[j] = std::log(weight[j]) + 2.0 * std::log(support[j]) - 2.0 * log_a;
  }
  return {2.0 * std::log(m1) - std::log(m2) + log_sum_exp(lhs_terms),
          4.0 * std::log(m1) - 2.0 * std::log(m2) + log_sum_exp(rhs_terms)};
}

bool lemma_inequality_check(std::span<const double> d, std::span<const double> probs) {
  const LemmaSides sides = lemma_sides(d, probs);
  return sides.log_lhs < sides.log_rhs;
}

}  // namespace srnet
