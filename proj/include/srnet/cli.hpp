#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srnet/core_model.hpp"

namespace srnet::cli {

inline constexpr std::string_view kFormatVersion = "1";

enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 2, kExitNonConvergence = 3 };

// Bad config file, unknown key, unparsable value or invalid parameters.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver that did not reach its tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kCommands[] = {
    "solve", "sweep", "simulate", "stability", "reproduce-fig2", "reproduce-fig3", "hetero-solve"};

struct RunConfig {
  std::string format_version{kFormatVersion};
  std::string command;

  ModelParams model{8000, 1.0, 0.2, 0.5, 2.0};

  // heterogeneous costs
  std::vector<double> costs{1.0, 2.0};
  std::vector<double> probs{0.5, 0.5};

  // sweeps
  double v2_min = 0.0;
  double v2_max = 1.0;
  double v2_step = 0.005;
  std::vector<double> alphas{2.0};

  std::uint64_t seed = 0;
  std::uint64_t samples = 1;
  unsigned threads = 1;
  int max_iter = 10000;  // hetero-solve best-response sweeps
  std::optional<double> maintenance_cost;
  std::string graph;      // stability: edge list to analyse instead of a sample
  std::string edges_dir;  // simulate: also write each sample's edge list here
  std::string out;

  bool operator==(const RunConfig&) const = default;
};

// Defaults for a subcommand. fig3 starts with alphas {1.6, 1.8, 2.0, 2.2}.
RunConfig default_config(std::string_view command);

// Keys accepted in config files and by --set, in echo order.
const std::vector<std::string>& config_keys();

void apply_setting(RunConfig& config, std::string_view key, std::string_view value);
std::string get_setting(const RunConfig& config, std::string_view key);

// INI document: [config] holds format_version, then one section per
// subcommand. Reading applies [common] and then the section of
// config.command on top of `config`.
void read_config(std::istream& in, RunConfig& config);
void write_config(std::ostream& out, const RunConfig& config);

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

// Runs a fully resolved config. Returns the files written, in order.
std::vector<std::string> execute(const RunConfig& config);

int run(int argc, char** argv);

}  // namespace srnet::cli
