#include <sys/wait.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "srnet/cli.hpp"
#include "srnet/equilibrium.hpp"
#include "srnet/extensions.hpp"
#include "srnet/graph_analysis.hpp"
#include "srnet/hetero.hpp"
#include "srnet/planner.hpp"
#include "srnet/sampler.hpp"

using namespace srnet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> info;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [FAILED]");
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("srnet_acc_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

oracle::SmallGraph without(const oracle::SmallGraph& g, int i, int j) {
  oracle::SmallGraph h = g;
  h.adj[i] &= ~(1u << j);
  h.adj[j] &= ~(1u << i);
  return h;
}

// ---------------------------------------------------------------------------

Outcome c01() {
  Outcome out;
  const auto t0 = Clock::now();
  const ModelParams cases[] = {{3, 1.0, 0.5, 1.0, 2.0}, {4, 1.0, 0.3, 0.8, 2.0}, {5, 2.0, 1.5, 1.2, 2.0},
                               {5, 1.0, 0.6, 0.9, 2.0}, {4, 1.5, 1.0, 2.0, 2.0}};
  double worst = 0.0;
  for (const auto& params : cases) {
    const double p = solve_symmetric_equilibrium(params).p_star;
    const double best = oracle::grid_argmax(
        [&](double q) { return oracle::enumerated_own_utility(q, p, params); }, 0.0, 1.0, 10001);
    worst = std::max(worst, std::abs(best - p));
    out.info.push_back("n=" + std::to_string(params.n) + " p*=" + fmt(p, 8) + " argmax=" + fmt(best, 8));
  }
  const double t = seconds_since(t0);
  out.require(worst <= 1e-4, "max |argmax - p*| = " + fmt(worst, 3) + " (<= 1e-4)");
  out.require(t < 10.0, "time " + fmt(t, 3) + " s (< 10)");
  return out;
}

Outcome c02() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto kernel = InteractionKernel::product();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> x(n);
      for (auto& v : x) v = unit(rng);
      const IntensityProfile profile(x);
      for (int i = 0; i < n; ++i) {
        const double exact = oracle::expectation(
            n, [&](int a, int b) { return x[a] * x[b]; },
            [&](const oracle::SmallGraph& g) { return double(g.friends_of_friends(i)); });
        worst = std::max(worst, std::abs(expected_fof_count(profile, kernel, i) - exact));
      }
    }
  }
  out.require(worst <= 1e-12, "enumeration n<=5 max error " + fmt(worst, 3) + " (<= 1e-12)");

  const auto profile = IntensityProfile::constant(8, std::sqrt(0.3));
  const long samples = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (long k = 0; k < samples; ++k) {
    const Network g = sample_network(profile, kernel, mix_seed(202, k));
    oracle::SmallGraph small;
    small.n = 8;
    for (auto [i, j] : g.edges()) {
      small.adj[i] |= 1u << j;
      small.adj[j] |= 1u << i;
    }
    const double f = small.friends_of_friends(0);
    sum += f;
    sum2 += f * f;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum2 / samples - mean * mean) / samples);
  const double formula = expected_fof_count(profile, kernel, 0);
  const double z = std::abs(mean - formula) / se;
  out.require(z <= 3.0, "Monte Carlo n=8 p=0.3: mean " + fmt(mean, 6) + " vs " + fmt(formula, 6) +
                            " (" + fmt(z, 3) + " SE, <= 3)");
  const double t = seconds_since(t0);
  out.require(t < 30.0, "time " + fmt(t, 3) + " s (< 30)");
  return out;
}

Outcome c03() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto sol = solve_symmetric_equilibrium({100000, 1.0, 0.2, 0.5, 2.0});
  const double t = seconds_since(t0);
  const double rel = std::abs(sol.expected_degree / (10.0 / 3.0) - 1.0);
  out.require(rel <= 0.02, "(n-1)p* = " + fmt(sol.expected_degree, 6) + ", rel. error " + fmt(rel, 3) +
                               " vs 10/3 (<= 2%)");
  out.require(t < 1.0, "time " + fmt(t, 3) + " s (< 1)");
  return out;
}

Outcome c04() {
  Outcome out;
  const auto t0 = Clock::now();
  const std::int64_t n = 1000000;
  const auto sol = solve_symmetric_equilibrium({n, 2.0, 1.0, 0.5, 2.0});
  const double t = seconds_since(t0);
  const double coef = sol.expected_degree / std::sqrt(double(n));
  const double rel = std::abs(coef / std::sqrt(std::log(2.0)) - 1.0);
  out.require(rel <= 0.05, "(n-1)p*/sqrt(n) = " + fmt(coef, 6) + " vs sqrt(ln 2) = 0.8326, rel. error " +
                               fmt(rel, 3) + " (<= 5%)");
  out.require(t < 1.0, "time " + fmt(t, 3) + " s (< 1)");
  return out;
}

Outcome c05() {
  Outcome out;
  TempDir dir;
  cli::RunConfig config = cli::default_config("reproduce-fig2");
  config.out = (dir.path / "fig2.csv").string();
  config.threads = 4;
  cli::execute(config);
  const auto rows = read_csv(config.out);
  std::vector<double> v2, eq, eff;
  bool dominated = true;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    v2.push_back(std::stod(rows[k][0]));
    eq.push_back(std::stod(rows[k][1]));
    eff.push_back(std::stod(rows[k][2]));
    dominated = dominated && eff.back() >= eq.back();
  }
  const auto t_eff = detect_transition(v2, eff);
  const auto t_eq = detect_transition(v2, eq);
  out.require(t_eff && std::abs(*t_eff - 0.25) <= 0.05,
              "planner jump at v2 = " + (t_eff ? fmt(*t_eff) : std::string("none")) + " (0.25 +- 0.05)");
  out.require(t_eq && std::abs(*t_eq - 0.5) <= 0.05,
              "equilibrium jump at v2 = " + (t_eq ? fmt(*t_eq) : std::string("none")) + " (0.5 +- 0.05)");
  out.require(dominated && v2.size() == 200, "degree_eff >= degree_eq on all " + std::to_string(v2.size()) + " rows");
  return out;
}

Outcome c06() {
  Outcome out;
  const std::int64_t ns[] = {500, 2000, 8000};
  auto ratios = [&](double v2) {
    std::vector<double> r;
    for (auto n : ns) {
      const auto gap = welfare_gap({n, 1.0, v2, 0.5, 2.0});
      r.push_back(gap.ratio ? *gap.ratio : NAN);
    }
    return r;
  };
  auto show = [](const std::vector<double>& r) { return fmt(r[0]) + " -> " + fmt(r[1]) + " -> " + fmt(r[2]); };
  const auto mid = ratios(0.35);
  out.require(mid[0] < mid[1] && mid[1] < mid[2] && mid[2] > 10.0,
              "v2=0.35 ratios " + show(mid) + " (increasing, > 10 at n=8000)");
  for (double v2 : {0.1, 0.6}) {
    const auto r = ratios(v2);
    const double lo = std::min({r[0], r[1], r[2]});
    const double hi = std::max({r[0], r[1], r[2]});
    const double change = hi / lo - 1.0;
    out.require(change < 0.2, "v2=" + fmt(v2) + " ratios " + show(r) + ", change " + fmt(100 * change, 3) +
                                  "% (< 20%)");
  }
  return out;
}

Outcome c07() {
  Outcome out;
  const auto t0 = Clock::now();
  const ModelParams params{400, 1.5, 0.5 * std::numbers::e, 0.5, 2.0};
  const auto sol = solve_symmetric_equilibrium(params);
  const int samples = 100;
  int connected = 0, diameter3 = 0;
  std::map<std::size_t, int> diameters;
  for (int k = 0; k < samples; ++k) {
    const auto stats = compute_stats(sample_gnp(400, sol.p_star, mix_seed(7, k)));
    if (!stats.is_connected) continue;
    ++connected;
    ++diameters[*stats.diameter];
    if (*stats.diameter == 3) ++diameter3;
  }
  const double t = seconds_since(t0);
  out.info.push_back("v1=1.5 v2/c=e: expected degree " + fmt(sol.expected_degree, 5));
  std::string hist;
  for (auto [d, count] : diameters) hist += " diam " + std::to_string(d) + ": " + std::to_string(count);
  out.info.push_back("diameter histogram of connected samples:" + hist);
  const double fc = connected / double(samples);
  const double f3 = connected ? diameter3 / double(connected) : 0.0;
  out.require(fc >= 0.95, "connected " + fmt(100 * fc, 3) + "% (>= 95%)");
  out.require(f3 >= 0.90, "diameter 3 among connected " + fmt(100 * f3, 3) + "% (>= 90%)");
  out.require(t < 60.0, "time " + fmt(t, 3) + " s (< 60)");
  return out;
}

Outcome c08() {
  Outcome out;
  const std::size_t n = 2000;
  const double bound = 5.0 * std::log(double(n));
  {
    const ModelParams params{2000, 0.32, 0.1, 0.5, 2.0};
    const auto sol = solve_symmetric_equilibrium(params);
    int disconnected = 0, small = 0;
    std::size_t worst = 0;
    for (int k = 0; k < 100; ++k) {
      const auto stats = compute_stats(sample_gnp(n, sol.p_star, mix_seed(8, k)));
      if (!stats.is_connected) ++disconnected;
      if (stats.largest_component_size <= bound) ++small;
      worst = std::max(worst, stats.largest_component_size);
    }
    out.info.push_back("v1/(c-v2)=0.8: expected degree " + fmt(sol.expected_degree, 5) +
                       ", largest component max " + std::to_string(worst));
    out.require(disconnected == 100, "disconnected " + std::to_string(disconnected) + "/100 (100%)");
    out.require(small >= 95, "largest component <= " + fmt(bound, 4) + " in " + std::to_string(small) +
                                 "/100 (>= 95%)");
  }
  {
    const ModelParams params{2000, 0.8, 0.1, 0.5, 2.0};
    const auto sol = solve_symmetric_equilibrium(params);
    const int samples = 200;
    double total = 0.0;
    for (int k = 0; k < samples; ++k) {
      total += giant_component_fraction(sample_gnp(n, sol.p_star, mix_seed(80, k)));
    }
    const double mean = total / samples;
    out.info.push_back("v1/(c-v2)=2: expected degree " + fmt(sol.expected_degree, 5) +
                       ", fixed-point share at that degree " +
                       fmt(oracle::giant_fraction_fixed_point(sol.expected_degree), 4) +
                       ", at degree 2 " + fmt(oracle::giant_fraction_fixed_point(2.0), 4));
    out.require(mean >= 0.5 && mean <= 0.95, "mean giant fraction " + fmt(mean, 4) + " (in [0.5, 0.95])");
  }
  return out;
}

Outcome c09() {
  Outcome out;
  double worst = 0.0;
  for (std::int64_t n : {10, 1000, 100000}) {
    for (double c : {0.5, 1.0, 2.0}) {
      for (double v2 : {0.0, 0.2, 0.45, 0.9}) {
        const ModelParams params{n, 1.0, v2, c, 2.0};
        const auto eq = solve_hetero_equilibrium(CostDistribution::degenerate(c), params);
        const double p = solve_symmetric_equilibrium(params).p_star;
        worst = std::max(worst, std::abs(eq.intensities[0] * eq.intensities[0] - p));
      }
    }
  }
  out.require(worst <= 1e-8, "degenerate vs homogeneous max |x^2 - p*| " + fmt(worst, 3) + " (<= 1e-8)");

  {
    const CostDistribution dist({1.0, 2.0}, {0.5, 0.5});
    const ModelParams params{100000, 1.0, 0.5, 1.0, 2.0};
    const auto eq = solve_hetero_equilibrium(dist, params);
    const auto degrees = eq.expected_degrees(dist, params.n);
    const auto mom = hetero_threshold(dist);
    double worst_stated = 0.0, worst_lib = 0.0;
    std::string stated_s, lib_s;
    const auto lib = low_regime_degree_limits(dist, params.v1, params.v2);
    for (std::size_t h = 0; h < 2; ++h) {
      const double s = 1.0 / dist.costs()[h];
      const double stated = s * params.v1 / (mom.e_s - params.v2 * mom.e_s2);
      worst_stated = std::max(worst_stated, std::abs(degrees[h] / stated - 1.0));
      worst_lib = std::max(worst_lib, std::abs(degrees[h] / lib[h] - 1.0));
      stated_s += " " + fmt(stated, 5);
      lib_s += " " + fmt(lib[h], 5);
    }
    out.info.push_back("two-type solver degrees " + fmt(degrees[0], 6) + " " + fmt(degrees[1], 6));
    out.info.push_back("limit with the E[S] factor (library):" + lib_s + ", rel. error " +
                       fmt(100 * worst_lib, 3) + "%");
    out.require(worst_stated <= 0.03, "two-type low-regime formula s_h v1/(E[S]-v2 E[S^2]):" + stated_s +
                                          ", rel. error " + fmt(100 * worst_stated, 3) + "% (<= 3%)");
  }
  {
    const CostDistribution dist({0.5, 1.0}, {0.5, 0.5});
    std::vector<double> logn;
    std::vector<std::vector<double>> logd(2);
    for (std::int64_t n : {1000, 10000, 100000}) {
      const ModelParams params{n, 2.0, 1.9, 1.0, 2.0};
      const auto d = solve_hetero_equilibrium(dist, params).expected_degrees(dist, n);
      logn.push_back(std::log(double(n)));
      for (int h = 0; h < 2; ++h) logd[h].push_back(std::log(d[h]));
    }
    std::string slopes;
    bool ok = true;
    for (int h = 0; h < 2; ++h) {
      const double slope = (logd[h][2] - logd[h][0]) / (logn[2] - logn[0]);
      ok = ok && std::abs(slope - 0.5) <= 0.05;
      slopes += " " + fmt(slope, 4);
    }
    out.require(ok, "High-regime log-log slopes" + slopes + " (0.5 +- 0.05; costs {0.5,1}, tau 0.6, v2 1.9)");

    const auto base = solve_hetero_equilibrium(dist, {100000, 2.0, 1.9, 1.0, 2.0}).expected_degrees(dist, 100000);
    const auto twice = solve_hetero_equilibrium(dist, {100000, 4.0, 1.9, 1.0, 2.0}).expected_degrees(dist, 100000);
    const double change = std::max(std::abs(twice[0] / base[0] - 1), std::abs(twice[1] / base[1] - 1));
    out.require(change < 0.01, "doubling v1 changes degree by " + fmt(100 * change, 3) + "% (< 1%)");
  }
  return out;
}

Outcome c10() {
  Outcome out;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int decreased = 0;
  const int pairs = 10000;
  for (int trial = 0; trial < pairs; ++trial) {
    const int m = 1 + static_cast<int>(unit(rng) * 6);
    std::vector<double> s(m), q(m);
    double total = 0;
    for (int k = 0; k < m; ++k) {
      s[k] = 0.1 + 5 * unit(rng);
      q[k] = 0.1 + unit(rng);
      total += q[k];
    }
    for (auto& v : q) v /= total;
    const int j = static_cast<int>(unit(rng) * m);
    const double delta = s[j] * (0.01 + 0.98 * unit(rng));
    const double w = 0.1 + 0.8 * unit(rng);  // share of q[j] moved down
    // split s[j] into s[j] - delta (weight w q_j) and a point above that keeps the mean
    std::vector<double> s2 = s, q2 = q;
    s2[j] = s[j] - delta;
    q2[j] = w * q[j];
    s2.push_back(s[j] + delta * w / (1 - w));
    q2.push_back((1 - w) * q[j]);
    const auto cmp = mps_tau_comparative(CostDistribution::from_sociabilities(s, q),
                                         CostDistribution::from_sociabilities(s2, q2));
    if (cmp.shift == DistributionShift::MeanPreservingSpread && cmp.tau_decreased) ++decreased;
  }
  out.require(decreased == pairs, "MPS pairs with lower tau: " + std::to_string(decreased) + "/" +
                                      std::to_string(pairs));

  int holds = 0;
  const int draws = 10000;
  for (int trial = 0; trial < draws; ++trial) {
    const int m = 2 + static_cast<int>(unit(rng) * 6);
    std::vector<double> d(m), w(m);
    double total = 0;
    for (int k = 0; k < m; ++k) {
      d[k] = 10 * (1.0 - unit(rng));
      w[k] = 1.0 - unit(rng);
      total += w[k];
    }
    for (auto& v : w) v /= total;
    if (lemma_inequality_check(d, w)) ++holds;
  }
  out.require(holds == draws, "inequality holds on " + std::to_string(holds) + "/" + std::to_string(draws));
  const double t = seconds_since(t0);
  out.require(t < 30.0, "time " + fmt(t, 3) + " s (< 30)");
  return out;
}

Outcome c11() {
  Outcome out;
  long graphs = 0, mismatches = 0;
  const std::tuple<double, double, double> settings[] = {
      {1.0, 0.3, 0.8}, {1.0, 0.35, 0.66}, {1.0, 0.3, 1.5}, {2.0, 0.5, 1.75}, {1.0, 0.9, 0.2}};
  for (int n = 2; n <= 6; ++n) {
    oracle::for_each_graph(n, [&](const oracle::SmallGraph& g) {
      ++graphs;
      const Network net = g.to_network();
      for (const auto& [v1, v2, cost] : settings) {
        std::vector<std::pair<NodeId, NodeId>> expected;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (!g.linked(i, j)) continue;
            const double loss = oracle::realized_benefit(g, i, v1, v2) -
                                oracle::realized_benefit(without(g, i, j), i, v1, v2);
            if (loss < cost) expected.emplace_back(i, j);
          }
        }
        const auto report = unilateral_stability(net, v1, v2, cost);
        std::vector<std::pair<NodeId, NodeId>> got;
        for (const auto& v : report.violating_links) got.emplace_back(v.agent, v.neighbor);
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        if (got != expected || report.is_unilaterally_stable != expected.empty()) ++mismatches;
      }
    });
  }
  out.require(mismatches == 0, "severing check vs brute force on " + std::to_string(graphs) +
                                   " graphs (n <= 6): " + std::to_string(mismatches) + " mismatches");

  const std::size_t n = 200;
  const double p = 1.0 / n;
  const double triples = n * (n - 1.0) * (n - 2.0) / 6.0;
  const double exact = triples * p * p * p * std::pow(1 - p, 3.0 * (n - 3));
  const long samples = 100000;
  double total = 0.0;
  for (long k = 0; k < samples; ++k) total += count_isolated_triangles(sample_gnp(n, p, mix_seed(11, k)));
  const double mean = total / samples;
  const double rel = std::abs(mean / exact - 1.0);
  out.require(rel <= 0.10, "isolated triangles mean " + fmt(mean, 5) + " vs " + fmt(exact, 5) +
                               ", rel. error " + fmt(100 * rel, 3) + "% (<= 10%)");

  std::mt19937_64 rng(111);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violating = 0;
  for (int k = 0; k < 1000; ++k) {
    const std::int64_t size = 10 + static_cast<std::int64_t>(unit(rng) * 290);
    const double v2 = unit(rng);
    const double v1 = v2 + 0.05 + 2 * unit(rng);
    const double c = 0.1 + unit(rng);
    const double p_star = solve_symmetric_equilibrium({size, v1, v2, c, 2.0}).p_star;
    const double cost = (v1 - v2) * unit(rng);
    const auto g = sample_gnp(static_cast<std::size_t>(size), p_star, mix_seed(112, k));
    if (!unilateral_stability(g, v1, v2, cost).is_unilaterally_stable) ++violating;
  }
  out.require(violating == 0, "networks with violations at c~ <= v1 - v2: " + std::to_string(violating) + "/1000");
  return out;
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(SRNET_TOOL) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files[fs::relative(entry.path(), dir).string()] = slurp(entry.path());
  }
  return files;
}

Outcome c12() {
  Outcome out;
  TempDir dir;
  const fs::path work = dir.path / "run";
  const std::pair<std::string, std::string> commands[] = {
      {"solve", "--v2 0.35"},
      {"sweep", "--alphas 1.8,2 --threads 3"},
      {"simulate", "--samples 20 --v2 0.6 --maintenance-cost 0.4 --threads 4 --edges-dir " +
                       (work / "edges").string()},
      {"stability", "--n 300 --v2 0.4 --maintenance-cost 0.7 --seed 3"},
      {"reproduce-fig2", "--threads 4"},
      {"reproduce-fig3", "--threads 4"},
      {"hetero-solve", "--costs 1,2,4 --probs 0.2,0.5,0.3"},
  };
  for (const auto& [cmd, flags] : commands) {
    const fs::path ini = dir.path / (cmd + ".ini");
    {
      std::ofstream f(ini);
      f << "[common]\nseed = 42\n[" << cmd << "]\nout = " << (work / (cmd + ".csv")).string() << "\n";
    }
    const std::string args = cmd + " --config " + ini.string() + " " + flags;
    std::map<std::string, std::string> runs[2];
    int codes[2];
    for (int r = 0; r < 2; ++r) {
      fs::remove_all(work);
      codes[r] = run_tool(args);
      runs[r] = snapshot(work);
    }
    const bool same = codes[0] == 0 && codes[1] == 0 && !runs[0].empty() && runs[0] == runs[1];
    out.require(same, cmd + " " + std::to_string(runs[0].size()) + " files " +
                          (same ? "identical" : "differ (exit " + std::to_string(codes[0]) + "/" +
                                                   std::to_string(codes[1]) + ")"));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::function<Outcome()> criteria[] = {c01, c02, c03, c04, c05, c06,
                                               c07, c08, c09, c10, c11, c12};
  int failed = 0;
  for (int k = 1; k <= 12; ++k) {
    if (only != 0 && k != only) continue;
    const auto t0 = Clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k - 1]();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    for (const auto& line : outcome.info) std::cout << "  info criterion " << k << ": " << line << "\n";
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << outcome.detail << " ("
              << fmt(seconds_since(t0), 3) << " s)" << std::endl;
    if (!outcome.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
