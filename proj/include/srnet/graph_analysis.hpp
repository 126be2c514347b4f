#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "srnet/sampler.hpp"

namespace srnet {

// Graph distance; std::nullopt stands for an infinite distance.
using Distance = std::optional<std::size_t>;

// Breadth-first partition. Members are ascending and components are ordered
// by their smallest node.
std::vector<std::vector<NodeId>> connected_components(const Network& g);

// Exact diameter by BFS from every node; nullopt when disconnected.
Distance diameter(const Network& g);

// Largest eccentricity over `sources` BFS roots drawn with the given seed.
// A lower bound on the diameter; exact if sources >= n.
Distance estimate_diameter(const Network& g, std::size_t sources, std::uint64_t seed);

double giant_component_fraction(const Network& g);

// Components that are exactly a triangle.
std::size_t count_isolated_triangles(const Network& g);

struct ViolatingLink {
  NodeId agent;
  NodeId neighbor;
  double marginal_benefit;  // benefit the agent loses by severing the link
};

struct StabilityReport {
  bool is_unilaterally_stable = true;
  std::vector<ViolatingLink> violating_links;
};

// Marginal benefit to agent i of its link to j:
//   v1 - v2 [i and j share a neighbor] + v2 #{h : h reachable from i in two
//   steps only through j, and not a neighbor of i}.
double link_marginal_benefit(const Network& g, NodeId i, NodeId j, double v1, double v2);

// Every (agent, incident link) whose marginal benefit is below the
// maintenance cost. Requires v1 > v2 >= 0 and maintenance_cost >= 0.
StabilityReport unilateral_stability(const Network& g, double v1, double v2,
                                     double maintenance_cost);

inline constexpr std::size_t kExactDiameterLimit = 2000;

struct GraphStats {
  std::size_t n = 0;
  std::size_t num_edges = 0;
  bool is_connected = false;
  std::size_t num_components = 0;
  std::size_t largest_component_size = 0;
  Distance diameter;
  bool diameter_exact = true;
  double mean_degree = 0.0;
  std::size_t isolated_triangle_count = 0;
};

// Diameter is exact up to exact_diameter_limit nodes and estimated from
// 64 BFS roots above that (flagged by diameter_exact = false).
GraphStats compute_stats(const Network& g, std::size_t exact_diameter_limit = kExactDiameterLimit);

}  // namespace srnet
