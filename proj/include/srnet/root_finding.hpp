#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace srnet {

// Bisection for the crossing of f(x) = target on [lo, hi], given
// f(lo) > target >= f(hi). Works for any continuous f with that sign pattern;
// for a strictly decreasing f the crossing is unique. Stops when the bracket
// width falls below rel_tol * hi or can no longer shrink in double precision.
template <class F>
double bisect_crossing(F&& f, double lo, double hi, double target, double rel_tol) {
  if (!(lo < hi)) throw std::invalid_argument("bisection bracket is empty");
  for (int iter = 0; iter < 4096; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= rel_tol * hi) break;
  }
  return 0.5 * (lo + hi);
}

// Shrinks lo geometrically until f(lo) > target. Used for FOC right-hand
// sides that diverge to +infinity as p -> 0.
template <class F>
double shrink_lower_bracket(F&& f, double lo, double target) {
  while (!(f(lo) > target)) {
    lo *= 0.5;
    if (lo < 1e-300) throw std::runtime_error("failed to bracket root from below");
  }
  return lo;
}

// All crossings of f(x) = target between consecutive points of an increasing
// grid, each refined by bisection. Pairs of crossings closer together than
// the grid spacing may be missed.
template <class F>
std::vector<double> grid_crossings(F&& f, const std::vector<double>& grid,
                                   double target, double rel_tol) {
  std::vector<double> roots;
  if (grid.size() < 2) return roots;
  bool above = f(grid.front()) > target;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const bool next_above = f(grid[k]) > target;
    if (next_above != above) {
      if (above) {
        roots.push_back(bisect_crossing(f, grid[k - 1], grid[k], target, rel_tol));
      } else {
        auto flipped = [&](double x) { return -f(x); };
        roots.push_back(bisect_crossing(flipped, grid[k - 1], grid[k], -target, rel_tol));
      }
      above = next_above;
    }
  }
  return roots;
}

inline std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  std::vector<double> grid(points);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t k = 0; k < points; ++k) {
    grid[k] = std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace srnet
