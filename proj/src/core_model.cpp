#include "srnet/core_model.hpp"

#include <cmath>
#include <string>

namespace srnet {

namespace {

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0,1], got " +
                            std::to_string(x));
  }
}

void check_index(const IntensityProfile& profile, std::size_t i) {
  if (i >= profile.size()) {
    throw std::out_of_range("agent index " + std::to_string(i) +
                            " out of range for profile of size " +
                            std::to_string(profile.size()));
  }
}

}  // namespace

void ModelParams::validate() const {
  if (!std::isfinite(v1) || !std::isfinite(v2) || !std::isfinite(c) ||
      !std::isfinite(alpha)) {
    throw std::domain_error("model parameters must be finite");
  }
  if (n < 3) throw std::invalid_argument("population size n must be >= 3");
  if (!(v2 >= 0.0)) throw std::invalid_argument("v2 must be >= 0");
  if (!(v1 > v2)) throw std::invalid_argument("v1 must exceed v2");
  if (!(c > 0.0)) throw std::invalid_argument("cost coefficient c must be > 0");
  if (!(alpha > 1.0)) throw std::invalid_argument("cost exponent alpha must be > 1");
}

InteractionKernel InteractionKernel::product() { return {Kind::Product, {}}; }

InteractionKernel InteractionKernel::custom(std::function<double(double, double)> fn) {
  if (!fn) throw std::invalid_argument("custom kernel must be callable");
  return {Kind::Custom, std::move(fn)};
}

IntensityProfile::IntensityProfile(std::vector<double> values)
    : values_(std::move(values)) {
  for (double x : values_) check_unit_interval(x, "intensity");
}

IntensityProfile IntensityProfile::constant(std::size_t n, double x) {
  return IntensityProfile(std::vector<double>(n, x));
}

double link_probability(const InteractionKernel& kernel, double xi, double xj) {
  check_unit_interval(xi, "intensity");
  check_unit_interval(xj, "intensity");
  return kernel(xi, xj);
}

double expected_friend_count(const IntensityProfile& profile,
                             const InteractionKernel& kernel, std::size_t i) {
  check_index(profile, i);
  double total = 0.0;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (k != i) total += kernel(profile[i], profile[k]);
  }
  return total;
}

double expected_fof_count(const IntensityProfile& profile,
                          const InteractionKernel& kernel, std::size_t i) {
  check_index(profile, i);
  const std::size_t n = profile.size();
  std::vector<double> p_i(n);
  for (std::size_t k = 0; k < n; ++k) p_i[k] = kernel(profile[i], profile[k]);

  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i) continue;
    // probability that no l links to both i and k
    double none = 1.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == i || l == k) continue;
      none *= 1.0 - p_i[l] * kernel(profile[l], profile[k]);
    }
    total += (1.0 - p_i[k]) * (1.0 - none);
  }
  return total;
}

double expected_utility(const IntensityProfile& profile,
                        const InteractionKernel& kernel,
                        const ModelParams& params, std::size_t i) {
  params.validate();
  if (static_cast<std::int64_t>(profile.size()) != params.n) {
    throw std::invalid_argument("profile length must equal params.n");
  }
  const double friends = expected_friend_count(profile, kernel, i);
  const double fof = expected_fof_count(profile, kernel, i);
  return params.v1 * friends + params.v2 * fof -
         params.c / params.alpha * std::pow(friends, params.alpha);
}

double symmetric_expected_utility(double p, const ModelParams& params) {
  check_unit_interval(p, "linking probability");
  params.validate();
  const double others = static_cast<double>(params.n - 1);
  const double no_common = detail::pow_one_minus(p * p, static_cast<double>(params.n - 2));
  return params.v1 * others * p +
         params.v2 * others * (1.0 - p) * (1.0 - no_common) -
         params.c / params.alpha * std::pow(others * p, params.alpha);
}

double deviation_utility(double q, double p, const ModelParams& params) {
  check_unit_interval(q, "own linking probability");
  check_unit_interval(p, "linking probability");
  params.validate();
  const double others = static_cast<double>(params.n - 1);
  const double no_common = detail::pow_one_minus(q * p, static_cast<double>(params.n - 2));
  return params.v1 * others * q +
         params.v2 * others * (1.0 - q) * (1.0 - no_common) -
         params.c / params.alpha * std::pow(others * q, params.alpha);
}

namespace detail {

double pow_one_minus(double x, double k) {
  if (k == 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  return std::exp(k * std::log1p(-x));
}

double overlap_factor(double p, std::int64_t n) {
  if (p >= 1.0) return 0.0;
  return std::exp(static_cast<double>(n - 2) * std::log1p(-p) +
                  static_cast<double>(n - 3) * std::log1p(p));
}

}  // namespace detail

}  // namespace srnet
