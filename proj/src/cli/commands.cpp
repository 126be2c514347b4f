#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "srnet/cli.hpp"
#include "srnet/equilibrium.hpp"
#include "srnet/extensions.hpp"
#include "srnet/graph_analysis.hpp"
#include "srnet/hetero.hpp"
#include "srnet/planner.hpp"
#include "srnet/sampler.hpp"

namespace srnet::cli {

namespace {

struct OutputFile {
  std::string path;
  std::string content;
};

// Runs fn(0..count-1) on up to `threads` workers; the first exception is
// rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1)));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k; (k = next++) < count;) {
          try {
            fn(k);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string bool01(bool b) { return b ? "1" : "0"; }

std::string distance_text(const Distance& d) { return d ? std::to_string(*d) : "inf"; }

// The v2 grid of a sweep, cut below v1 so that every point is a valid model.
std::vector<double> sweep_grid(const RunConfig& config) {
  return make_v2_grid(config.v2_min, std::min(config.v2_max, config.model.v1), config.v2_step);
}

double equilibrium_p(const ModelParams& params) {
  return solve_alpha_equilibrium(params).p_star;
}

std::vector<OutputFile> cmd_solve(const RunConfig& config) {
  const ModelParams& m = config.model;
  const EquilibriumSolution eq = solve_alpha_equilibrium(m);
  const PlannerSolution eff = solve_efficient(m);
  std::ostringstream csv;
  csv << "n,v1,v2,c,alpha,p_eq,degree_eq,regime_eq,p_eff,degree_eff,regime_eff,welfare_eq,welfare_eff\n";
  csv << m.n << ',' << format_double(m.v1) << ',' << format_double(m.v2) << ','
      << format_double(m.c) << ',' << format_double(m.alpha) << ',' << format_double(eq.p_star)
      << ',' << format_double(eq.expected_degree) << ',' << to_string(eq.regime.regime) << ','
      << format_double(eff.p_hat) << ',' << format_double(eff.expected_degree) << ','
      << to_string(eff.regime.regime) << ',' << format_double(eq.welfare_per_agent) << ','
      << format_double(eff.welfare_per_agent) << '\n';
  return {{config.out, csv.str()}};
}

std::vector<OutputFile> cmd_sweep(const RunConfig& config) {
  const std::vector<double> grid = sweep_grid(config);
  const std::size_t cells = config.alphas.size() * grid.size();
  std::vector<std::string> rows(cells);
  parallel_for(cells, config.threads, [&](std::size_t k) {
    ModelParams m = config.model;
    m.alpha = config.alphas[k / grid.size()];
    m.v2 = grid[k % grid.size()];
    const EquilibriumSolution eq = solve_alpha_equilibrium(m);
    const PlannerSolution eff = solve_efficient(m);
    rows[k] = format_double(m.alpha) + ',' + format_double(m.v2) + ',' +
              format_double(eq.p_star) + ',' + format_double(eq.expected_degree) + ',' +
              format_double(eff.p_hat) + ',' + format_double(eff.expected_degree) + '\n';
  });
  std::string csv = "alpha,v2,p_eq,degree_eq,p_eff,degree_eff\n";
  for (const auto& row : rows) csv += row;
  return {{config.out, csv}};
}

std::vector<OutputFile> cmd_fig2(const RunConfig& config) {
  const std::vector<double> grid = sweep_grid(config);
  std::vector<std::string> rows(grid.size());
  parallel_for(grid.size(), config.threads, [&](std::size_t k) {
    ModelParams m = config.model;
    m.v2 = grid[k];
    rows[k] = format_double(m.v2) + ',' + format_double(solve_alpha_equilibrium(m).expected_degree) +
              ',' + format_double(solve_efficient(m).expected_degree) + '\n';
  });
  std::string csv = "v2,degree_eq,degree_eff\n";
  for (const auto& row : rows) csv += row;
  return {{config.out, csv}};
}

std::vector<OutputFile> cmd_fig3(const RunConfig& config) {
  const std::vector<double> grid = sweep_grid(config);
  const std::size_t cells = config.alphas.size() * grid.size();
  std::vector<AlphaSweepRow> rows(cells);
  parallel_for(cells, config.threads, [&](std::size_t k) {
    const double alpha = config.alphas[k / grid.size()];
    const double v2 = grid[k % grid.size()];
    rows[k] = alpha_sweep(config.model, std::span(&alpha, 1), std::span(&v2, 1)).front();
  });
  std::string csv = "alpha,v2,degree_eq\n";
  for (const auto& r : rows) {
    csv += format_double(r.alpha) + ',' + format_double(r.v2) + ',' +
           format_double(r.expected_degree) + '\n';
  }
  return {{config.out, csv}};
}

std::vector<OutputFile> cmd_simulate(const RunConfig& config) {
  if (config.samples < 1) throw config_error("samples must be >= 1");
  const ModelParams& m = config.model;
  const double p = equilibrium_p(m);
  const auto n = static_cast<std::size_t>(m.n);
  const std::size_t count = config.samples;

  struct Sample {
    std::uint64_t seed;
    GraphStats stats;
    std::optional<bool> stable;
    std::string edges;
  };
  std::vector<Sample> samples(count);
  parallel_for(count, config.threads, [&](std::size_t k) {
    Sample& s = samples[k];
    s.seed = mix_seed(config.seed, k);
    const Network g = sample_gnp(n, p, s.seed);
    s.stats = compute_stats(g);
    if (config.maintenance_cost) {
      s.stable = unilateral_stability(g, m.v1, m.v2, *config.maintenance_cost).is_unilaterally_stable;
    }
    if (!config.edges_dir.empty()) {
      std::ostringstream edges;
      write_edge_list(edges, g);
      s.edges = edges.str();
    }
  });

  std::ostringstream csv;
  csv << "sample_index,seed,n_edges,is_connected,largest_component,diameter,isolated_triangles,stable\n";
  double connected = 0, edges = 0, largest = 0, triangles = 0, stable = 0, diam_sum = 0;
  std::size_t largest_max = 0, diam_count = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Sample& s = samples[k];
    csv << k << ',' << s.seed << ',' << s.stats.num_edges << ',' << bool01(s.stats.is_connected)
        << ',' << s.stats.largest_component_size << ',' << distance_text(s.stats.diameter) << ','
        << s.stats.isolated_triangle_count << ',' << (s.stable ? bool01(*s.stable) : "") << '\n';
    connected += s.stats.is_connected;
    edges += static_cast<double>(s.stats.num_edges);
    largest += static_cast<double>(s.stats.largest_component_size);
    largest_max = std::max(largest_max, s.stats.largest_component_size);
    triangles += static_cast<double>(s.stats.isolated_triangle_count);
    if (s.stable) stable += *s.stable;
    if (s.stats.diameter) {
      diam_sum += static_cast<double>(*s.stats.diameter);
      ++diam_count;
    }
  }
  const double k = static_cast<double>(count);
  std::ostringstream summary;
  summary << "samples,p_star,expected_degree,connected_fraction,mean_edges,mean_largest_component,"
             "max_largest_component,mean_diameter_connected,mean_isolated_triangles,stable_fraction\n";
  summary << count << ',' << format_double(p) << ',' << format_double(p * static_cast<double>(n - 1))
          << ',' << format_double(connected / k) << ',' << format_double(edges / k) << ','
          << format_double(largest / k) << ',' << largest_max << ','
          << (diam_count ? format_double(diam_sum / static_cast<double>(diam_count)) : "") << ','
          << format_double(triangles / k) << ','
          << (config.maintenance_cost ? format_double(stable / k) : "") << '\n';

  std::vector<OutputFile> files{{config.out, csv.str()}, {config.out + ".summary.csv", summary.str()}};
  if (!config.edges_dir.empty()) {
    for (std::size_t i = 0; i < count; ++i) {
      files.push_back({(std::filesystem::path(config.edges_dir) /
                        ("sample_" + std::to_string(i) + ".edges")).string(),
                       samples[i].edges});
    }
  }
  return files;
}

std::vector<OutputFile> cmd_stability(const RunConfig& config) {
  if (!config.maintenance_cost) throw config_error("stability needs maintenance_cost");
  const ModelParams& m = config.model;
  Network g;
  if (!config.graph.empty()) {
    std::ifstream in(config.graph);
    if (!in) throw config_error("cannot open graph file '" + config.graph + "'");
    try {
      g = read_edge_list(in);
    } catch (const std::exception& e) {
      throw config_error("bad edge list '" + config.graph + "': " + e.what());
    }
  } else {
    g = sample_gnp(static_cast<std::size_t>(m.n), equilibrium_p(m), config.seed);
  }
  const StabilityReport report = unilateral_stability(g, m.v1, m.v2, *config.maintenance_cost);
  std::string csv = "agent,neighbor,marginal_benefit\n";
  for (const auto& v : report.violating_links) {
    csv += std::to_string(v.agent) + ',' + std::to_string(v.neighbor) + ',' +
           format_double(v.marginal_benefit) + '\n';
  }
  return {{config.out, csv}};
}

std::vector<OutputFile> cmd_hetero(const RunConfig& config) {
  const CostDistribution dist(config.costs, config.probs);
  const ModelParams& m = config.model;
  HeteroSolverOptions options;
  options.max_iter = config.max_iter;
  const HeteroEquilibrium eq = solve_hetero_equilibrium(dist, m, options);
  if (!eq.converged) {
    throw convergence_error("best-response iteration stopped after " +
                            std::to_string(eq.iterations) + " sweeps (last change " +
                            format_double(eq.last_change) + ")");
  }
  const SociabilityMoments mom = hetero_threshold(dist);
  Regime regime = Regime::Critical;
  if (m.v2 < mom.tau - kDefaultRegimeEpsilon) regime = Regime::Low;
  if (m.v2 > mom.tau + kDefaultRegimeEpsilon) regime = Regime::High;
  std::vector<double> limits;
  if (regime == Regime::Low) limits = low_regime_degree_limits(dist, m.v1, m.v2);
  const std::vector<double> degrees = eq.expected_degrees(dist, m.n);

  std::ostringstream csv;
  csv << "type,cost,prob,intensity,expected_degree,residual,tau,regime,low_regime_limit\n";
  for (std::size_t h = 0; h < dist.size(); ++h) {
    csv << h << ',' << format_double(dist.costs()[h]) << ',' << format_double(dist.probs()[h]) << ','
        << format_double(eq.intensities[h]) << ',' << format_double(degrees[h]) << ','
        << format_double(eq.residuals[h]) << ',' << format_double(mom.tau) << ','
        << to_string(regime) << ',' << (limits.empty() ? "" : format_double(limits[h])) << '\n';
  }
  return {{config.out, csv.str()}};
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

}  // namespace

std::vector<std::string> execute(const RunConfig& config) {
  if (config.out.empty()) throw config_error("no output path (--out)");
  if (config.v2_step <= 0.0 || config.v2_max < config.v2_min) throw config_error("invalid v2 grid");
  if (config.alphas.empty()) throw config_error("alphas must not be empty");
  try {
    config.model.validate();
  } catch (const std::exception& e) {
    throw config_error(e.what());
  }

  std::vector<OutputFile> files;
  const std::string& cmd = config.command;
  try {
    if (cmd == "solve") files = cmd_solve(config);
    else if (cmd == "sweep") files = cmd_sweep(config);
    else if (cmd == "reproduce-fig2") files = cmd_fig2(config);
    else if (cmd == "reproduce-fig3") files = cmd_fig3(config);
    else if (cmd == "simulate") files = cmd_simulate(config);
    else if (cmd == "stability") files = cmd_stability(config);
    else if (cmd == "hetero-solve") files = cmd_hetero(config);
    else throw config_error("unknown subcommand '" + cmd + "'");
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  } catch (const std::domain_error& e) {
    throw config_error(e.what());
  } catch (const unsupported_error& e) {
    throw config_error(e.what());
  } catch (const config_error&) {
    throw;
  } catch (const convergence_error&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw convergence_error(e.what());
  }

  std::ostringstream sidecar;
  write_config(sidecar, config);
  files.push_back({config.out + ".config.ini", sidecar.str()});

  std::vector<std::string> written;
  for (const auto& f : files) {
    write_file(f.path, f.content);
    written.push_back(f.path);
  }
  return written;
}

}  // namespace srnet::cli
