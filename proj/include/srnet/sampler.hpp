#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "srnet/core_model.hpp"

namespace srnet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Reproducibility is defined by (kSamplerAlgorithm, seed).
inline constexpr std::string_view kSamplerAlgorithm = "mt19937_64+splitmix64/v1";

// Undirected simple graph with sorted adjacency lists. Immutable.
class Network {
 public:
  Network() = default;
  // Edges may come in any order and orientation; self-loops, duplicates and
  // out-of-range endpoints are rejected.
  Network(std::size_t n, std::span<const Edge> edges, std::uint64_t seed = 0);

  std::size_t num_nodes() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::span<const NodeId> neighbors(NodeId i) const { return adjacency_[i]; }
  std::size_t degree(NodeId i) const { return adjacency_[i].size(); }
  bool has_edge(NodeId i, NodeId j) const;

  // (i, j) with i < j in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Network&) const = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_edges_ = 0;
  std::uint64_t seed_ = 0;
};

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed of sample `index` in a batch: splitmix64(base + (index + 1) * golden),
// golden = 0x9E3779B97F4A7C15.
std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

// Uniform double in [0,1) from the top 53 bits of one engine draw.
double uniform01(std::mt19937_64& engine);

enum class SamplingMethod {
  Auto,    // Sparse when the largest pair probability is below 0.01
  Dense,   // one Bernoulli draw per pair
  Sparse,  // geometric skipping at the largest pair probability, then thinning
};

inline constexpr double kSparseThreshold = 0.01;

// Each pair {i,j} is present independently with probability kernel(x_i, x_j).
Network sample_network(const IntensityProfile& profile, const InteractionKernel& kernel,
                       std::uint64_t seed, SamplingMethod method = SamplingMethod::Auto);

// Erdos-Renyi G(n, p).
Network sample_gnp(std::size_t n, double p, std::uint64_t seed,
                   SamplingMethod method = SamplingMethod::Auto);

// G(n, p*) at the symmetric equilibrium of params (alpha = 2).
Network sample_equilibrium_network(const ModelParams& params, std::uint64_t seed);

struct SampleBatchSpec {
  std::size_t count = 1;
  std::uint64_t base_seed = 0;
};

// Sample k uses seed mix_seed(base_seed, k). The result does not depend on
// the number of worker threads.
std::vector<Network> sample_batch(const SampleBatchSpec& spec, const IntensityProfile& profile,
                                  const InteractionKernel& kernel, unsigned threads = 1);

// Edge-list format: "# n=<n> seed=<seed>" then "i j" per line, i < j,
// ascending lexicographic order.
void write_edge_list(std::ostream& out, const Network& network);
Network read_edge_list(std::istream& in);

}  // namespace srnet
