#include "srnet/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "srnet/equilibrium.hpp"

namespace srnet {

namespace {

// Walks the pairs (i, j), i < j, in lexicographic order. prob(i, j) must not
// exceed p_max.
template <class PairProb>
std::vector<Edge> sample_pairs(std::size_t n, PairProb&& prob, double p_max,
                               std::uint64_t seed, SamplingMethod method) {
  std::mt19937_64 engine(seed);
  std::vector<Edge> edges;
  if (n < 2 || p_max <= 0.0) return edges;

  if (method == SamplingMethod::Auto) {
    method = p_max < kSparseThreshold ? SamplingMethod::Sparse : SamplingMethod::Dense;
  }
  if (method == SamplingMethod::Dense || p_max >= 1.0) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uniform01(engine) < prob(i, j)) {
          edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
      }
    }
    return edges;
  }

  // Geometric skipping: the gap to the next candidate pair is
  // floor(log(U) / log(1 - p_max)); candidates are kept with prob / p_max.
  const double log_q = std::log1p(-p_max);
  const double total_pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  std::uint64_t i = 0;
  std::uint64_t j = 0;  // before (0, 1)
  for (;;) {
    const double u = 1.0 - uniform01(engine);
    const double skip = std::floor(std::log(u) / log_q);
    if (skip >= total_pairs) break;
    j += static_cast<std::uint64_t>(skip) + 1;
    while (i + 1 < n && j >= n) {
      ++i;
      j = i + 1 + (j - n);
    }
    if (i + 1 >= n) break;
    const double p = prob(i, j);
    if (p >= p_max || uniform01(engine) * p_max < p) {
      edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return edges;
}

}  // namespace

Network::Network(std::size_t n, std::span<const Edge> edges, std::uint64_t seed)
    : adjacency_(n), num_edges_(edges.size()), seed_(seed) {
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop on node " + std::to_string(a));
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
}

bool Network::has_edge(NodeId i, NodeId j) const {
  const auto& nbrs = adjacency_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (NodeId i = 0; i < adjacency_.size(); ++i) {
    for (NodeId j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
  return splitmix64(base_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

Network sample_network(const IntensityProfile& profile, const InteractionKernel& kernel,
                       std::uint64_t seed, SamplingMethod method) {
  const auto values = profile.values();
  const double x_max = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  const double p_max = kernel(x_max, x_max);
  auto prob = [&](std::size_t i, std::size_t j) { return kernel(values[i], values[j]); };
  const auto edges = sample_pairs(profile.size(), prob, p_max, seed, method);
  return Network(profile.size(), edges, seed);
}

Network sample_gnp(std::size_t n, double p, std::uint64_t seed, SamplingMethod method) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("edge probability must lie in [0,1], got " + std::to_string(p));
  }
  auto prob = [p](std::size_t, std::size_t) { return p; };
  const auto edges = sample_pairs(n, prob, p, seed, method);
  return Network(n, edges, seed);
}

Network sample_equilibrium_network(const ModelParams& params, std::uint64_t seed) {
  const EquilibriumSolution eq = solve_symmetric_equilibrium(params);
  return sample_gnp(static_cast<std::size_t>(params.n), eq.p_star, seed);
}

std::vector<Network> sample_batch(const SampleBatchSpec& spec, const IntensityProfile& profile,
                                  const InteractionKernel& kernel, unsigned threads) {
  if (spec.count < 1) throw std::invalid_argument("batch count must be >= 1");
  std::vector<Network> out(spec.count);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, spec.count));
  auto work = [&](unsigned w) {
    for (std::size_t k = w; k < spec.count; k += workers) {
      out[k] = sample_network(profile, kernel, mix_seed(spec.base_seed, k));
    }
  };
  if (workers == 1) {
    work(0);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  pool.clear();
  return out;
}

void write_edge_list(std::ostream& out, const Network& network) {
  out << "# n=" << network.num_nodes() << " seed=" << network.seed() << '\n';
  for (const auto& [i, j] : network.edges()) out << i << ' ' << j << '\n';
}

Network read_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("edge list is empty");
  std::size_t n = 0;
  std::uint64_t seed = 0;
  {
    std::istringstream hs(header);
    std::string hash, n_field, seed_field;
    hs >> hash >> n_field >> seed_field;
    if (hash != "#" || n_field.rfind("n=", 0) != 0 || seed_field.rfind("seed=", 0) != 0) {
      throw std::invalid_argument("malformed edge list header: " + header);
    }
    try {
      n = std::stoull(n_field.substr(2));
      seed = std::stoull(seed_field.substr(5));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed edge list header: " + header);
    }
  }
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long a = -1;
    long long b = -1;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0) {
      throw std::invalid_argument("malformed edge line: " + line);
    }
    edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
  }
  return Network(n, edges, seed);
}

}  // namespace srnet
