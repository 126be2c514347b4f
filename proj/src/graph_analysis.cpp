#include "srnet/graph_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace srnet {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

// Distances from source; returns the eccentricity and the number reached.
std::pair<std::size_t, std::size_t> bfs_eccentricity(const Network& g, NodeId source,
                                                     std::vector<std::size_t>& dist,
                                                     std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  std::size_t eccentricity = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        eccentricity = dist[w];
        queue.push_back(w);
      }
    }
  }
  return {eccentricity, queue.size()};
}

void check_values(double v1, double v2) {
  if (!(v2 >= 0.0 && v1 > v2)) throw std::invalid_argument("need v1 > v2 >= 0");
}

}  // namespace

std::vector<std::vector<NodeId>> connected_components(const Network& g) {
  const std::size_t n = g.num_nodes();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> components;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (NodeId w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

Distance diameter(const Network& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  std::size_t best = 0;
  for (NodeId s = 0; s < n; ++s) {
    const auto [ecc, reached] = bfs_eccentricity(g, s, dist, queue);
    if (reached != n) return std::nullopt;
    best = std::max(best, ecc);
  }
  return best;
}

Distance estimate_diameter(const Network& g, std::size_t sources, std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  if (sources >= n) return diameter(g);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::mt19937_64 engine(seed);
  // partial Fisher-Yates with explicit index draws for portability
  for (std::size_t k = 0; k < sources; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(uniform01(engine) * static_cast<double>(n - k));
    std::swap(order[k], order[std::min(pick, n - 1)]);
  }
  std::vector<std::size_t> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  std::size_t best = 0;
  for (std::size_t k = 0; k < sources; ++k) {
    const auto [ecc, reached] = bfs_eccentricity(g, order[k], dist, queue);
    if (reached != n) return std::nullopt;
    best = std::max(best, ecc);
  }
  return best;
}

double giant_component_fraction(const Network& g) {
  if (g.num_nodes() == 0) return 0.0;
  std::size_t largest = 0;
  for (const auto& comp : connected_components(g)) largest = std::max(largest, comp.size());
  return static_cast<double>(largest) / static_cast<double>(g.num_nodes());
}

std::size_t count_isolated_triangles(const Network& g) {
  std::size_t count = 0;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    if (g.degree(i) != 2) continue;
    const NodeId a = g.neighbors(i)[0];
    const NodeId b = g.neighbors(i)[1];
    // count each triangle once, at its smallest node
    if (i < a && g.degree(a) == 2 && g.degree(b) == 2 && g.has_edge(a, b)) ++count;
  }
  return count;
}

double link_marginal_benefit(const Network& g, NodeId i, NodeId j, double v1, double v2) {
  check_values(v1, v2);
  if (!g.has_edge(i, j)) throw std::invalid_argument("link_marginal_benefit needs an existing link");
  bool common = false;
  for (NodeId k : g.neighbors(i)) {
    if (k != j && g.has_edge(k, j)) {
      common = true;
      break;
    }
  }
  std::size_t only_through_j = 0;
  for (NodeId h : g.neighbors(j)) {
    if (h == i || g.has_edge(i, h)) continue;
    bool other_route = false;
    for (NodeId k : g.neighbors(i)) {
      if (k != j && g.has_edge(k, h)) {
        other_route = true;
        break;
      }
    }
    if (!other_route) ++only_through_j;
  }
  return (v1 - (common ? v2 : 0.0)) + v2 * static_cast<double>(only_through_j);
}

StabilityReport unilateral_stability(const Network& g, double v1, double v2,
                                     double maintenance_cost) {
  check_values(v1, v2);
  if (!(maintenance_cost >= 0.0)) throw std::invalid_argument("maintenance cost must be >= 0");

  const std::size_t n = g.num_nodes();
  StabilityReport report;
  // two_step[h]: number of neighbors of i adjacent to h
  std::vector<std::size_t> two_step(n, 0);
  std::vector<bool> is_neighbor(n, false);
  std::vector<NodeId> touched;
  for (NodeId i = 0; i < n; ++i) {
    touched.clear();
    for (NodeId k : g.neighbors(i)) {
      is_neighbor[k] = true;
      for (NodeId h : g.neighbors(k)) {
        if (h == i) continue;
        if (two_step[h]++ == 0) touched.push_back(h);
      }
    }
    for (NodeId j : g.neighbors(i)) {
      std::size_t only_through_j = 0;
      for (NodeId h : g.neighbors(j)) {
        if (h != i && !is_neighbor[h] && two_step[h] == 1) ++only_through_j;
      }
      const bool common = two_step[j] > 0;
      const double benefit = (v1 - (common ? v2 : 0.0)) + v2 * static_cast<double>(only_through_j);
      if (benefit < maintenance_cost) report.violating_links.push_back({i, j, benefit});
    }
    for (NodeId h : touched) two_step[h] = 0;
    for (NodeId k : g.neighbors(i)) is_neighbor[k] = false;
  }
  report.is_unilaterally_stable = report.violating_links.empty();
  return report;
}

GraphStats compute_stats(const Network& g, std::size_t exact_diameter_limit) {
  GraphStats stats;
  stats.n = g.num_nodes();
  stats.num_edges = g.num_edges();
  const auto components = connected_components(g);
  stats.num_components = components.size();
  for (const auto& comp : components) {
    stats.largest_component_size = std::max(stats.largest_component_size, comp.size());
  }
  stats.is_connected = stats.num_components <= 1;
  if (!stats.is_connected) {
    stats.diameter = std::nullopt;
  } else if (stats.n <= exact_diameter_limit) {
    stats.diameter = diameter(g);
  } else {
    stats.diameter = estimate_diameter(g, 64, g.seed());
    stats.diameter_exact = false;
  }
  stats.mean_degree = stats.n == 0 ? 0.0 : 2.0 * static_cast<double>(stats.num_edges) /
                                               static_cast<double>(stats.n);
  stats.isolated_triangle_count = count_isolated_triangles(g);
  return stats;
}

}  // namespace srnet
