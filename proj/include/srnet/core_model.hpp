#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace srnet {

// Raised when an operation is asked for something outside the region where
// the model characterizes it (critical regime limits, corner derivatives, ...).
class unsupported_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Homogeneous model parameters. alpha is the cost exponent; 2 is the
// linear-quadratic baseline.
struct ModelParams {
  std::int64_t n = 3;
  double v1 = 1.0;  // value per friend
  double v2 = 0.0;  // value per friend of friend
  double c = 1.0;   // cost coefficient
  double alpha = 2.0;

  // Throws std::domain_error on non-finite values and std::invalid_argument
  // when n >= 3, v1 > v2 >= 0, c > 0 or alpha > 1 is violated.
  void validate() const;

  bool operator==(const ModelParams&) const = default;
};

// Symmetric map [0,1]^2 -> [0,1] turning two intensities into a linking
// probability. Custom kernels are trusted to be symmetric, increasing and to
// satisfy p(0,0) = 0, p(1,1) = 1.
class InteractionKernel {
 public:
  enum class Kind { Product, Custom };

  static InteractionKernel product();
  static InteractionKernel custom(std::function<double(double, double)> fn);

  Kind kind() const noexcept { return kind_; }

  double operator()(double x, double y) const {
    return kind_ == Kind::Product ? x * y : fn_(x, y);
  }

 private:
  InteractionKernel(Kind kind, std::function<double(double, double)> fn)
      : kind_(kind), fn_(std::move(fn)) {}

  Kind kind_;
  std::function<double(double, double)> fn_;
};

// Per-agent intensities x_i, each in [0,1].
class IntensityProfile {
 public:
  explicit IntensityProfile(std::vector<double> values);
  static IntensityProfile constant(std::size_t n, double x);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

double link_probability(const InteractionKernel& kernel, double xi, double xj);

double expected_friend_count(const IntensityProfile& profile,
                             const InteractionKernel& kernel, std::size_t i);

// sum_{k != i} (1 - p_ik) (1 - prod_{l != i,k} (1 - p_il p_lk))
double expected_fof_count(const IntensityProfile& profile,
                          const InteractionKernel& kernel, std::size_t i);

// v1 E[#friends] + v2 E[#friends of friends] - (c/alpha) (sum_k p_ik)^alpha.
// params.n must equal profile.size().
double expected_utility(const IntensityProfile& profile,
                        const InteractionKernel& kernel,
                        const ModelParams& params, std::size_t i);

// expected_utility when every pair links with probability p.
double symmetric_expected_utility(double p, const ModelParams& params);

// Utility of one agent who links to everyone with probability q while all
// other pairs link with probability p. The equilibrium FOC is the
// stationarity condition of this function at q = p.
double deviation_utility(double q, double p, const ModelParams& params);

// Numerically stable powers used throughout the closed forms.
namespace detail {

// (1 - x)^k for x in [0,1], k >= 0; (1-1)^0 is 1.
double pow_one_minus(double x, double k);

// (1 - p)^(n-2) (1 + p)^(n-3), the overlap factor of the symmetric FOC.
double overlap_factor(double p, std::int64_t n);

}  // namespace detail

}  // namespace srnet
