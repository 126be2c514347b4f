#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "srnet/cli.hpp"

namespace srnet::cli {

namespace {

struct CommandInfo {
  std::string_view name;
  std::string_view help;
};

constexpr CommandInfo kCommandHelp[] = {
    {"solve", "symmetric equilibrium and planner optimum, one CSV row"},
    {"sweep", "equilibrium and planner over an alpha list and a v2 grid"},
    {"simulate", "sample equilibrium networks and report per-sample graph statistics"},
    {"stability", "links an agent would sever under a maintenance cost"},
    {"reproduce-fig2", "equilibrium and efficient degree against v2 (n=8000, c=0.5, v1=1)"},
    {"reproduce-fig3", "equilibrium degree against v2 for alpha in {1.6, 1.8, 2.0, 2.2}"},
    {"hetero-solve", "equilibrium intensities for a finite distribution of costs"},
};

std::string flag_name(const std::string& key) {
  std::string flag = "--" + key;
  std::replace(flag.begin(), flag.end(), '_', '-');
  return flag;
}

struct Invocation {
  std::string config_path;
  std::vector<std::string> sets;
  std::map<std::string, std::string> values;
};

RunConfig resolve(const CLI::App& sub, const Invocation& inv) {
  RunConfig config = default_config(sub.get_name());
  if (!inv.config_path.empty()) {
    std::ifstream in(inv.config_path);
    if (!in) throw config_error("cannot open config file '" + inv.config_path + "'");
    read_config(in, config);
  }
  for (const auto& item : inv.sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw config_error("--set expects key=value, got '" + item + "'");
    apply_setting(config, item.substr(0, eq), item.substr(eq + 1));
  }
  for (const auto& key : config_keys()) {
    if (sub.get_option(flag_name(key))->count() > 0) apply_setting(config, key, inv.values.at(key));
  }
  return config;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Random social network formation: equilibrium solvers, sweeps and simulations"};
  app.require_subcommand(1);

  Invocation inv;
  for (const auto& key : config_keys()) inv.values[key];
  for (const auto& info : kCommandHelp) {
    CLI::App* sub = app.add_subcommand(std::string(info.name), std::string(info.help));
    sub->add_option("--config", inv.config_path, "INI config file");
    sub->add_option("--set", inv.sets, "override a config key (key=value), repeatable");
    for (const auto& key : config_keys()) {
      sub->add_option(flag_name(key), inv.values[key], "config key " + key);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  const CLI::App* sub = app.get_subcommands().front();
  try {
    const RunConfig config = resolve(*sub, inv);
    for (const auto& path : execute(config)) std::cout << "wrote " << path << "\n";
    return kExitOk;
  } catch (const config_error& e) {
    std::cerr << "srnet " << sub->get_name() << ": invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const convergence_error& e) {
    std::cerr << "srnet " << sub->get_name() << ": solver did not converge: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "srnet " << sub->get_name() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace srnet::cli
