#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "srnet/cli.hpp"
#include "srnet/sampler.hpp"

namespace srnet::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw config_error("'" + std::string(key) + "' expects a finite number, got '" + s + "'");
  }
  return value;
}

template <class Int>
Int parse_int(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw config_error("'" + std::string(key) + "' expects an integer, got '" + s + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(parse_double(key, text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string format_list(const std::vector<double>& values) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ',';
    s += format_double(values[k]);
  }
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

RunConfig default_config(std::string_view command) {
  RunConfig config;
  config.command = std::string(command);
  if (command == "reproduce-fig2" || command == "reproduce-fig3") {
    config.model = {8000, 1.0, 0.0, 0.5, 2.0};
  }
  if (command == "reproduce-fig3") config.alphas = {1.6, 1.8, 2.0, 2.2};
  if (command == "simulate" || command == "stability") config.model.n = 400;
  if (command == "hetero-solve") config.model = {100000, 1.0, 0.5, 1.0, 2.0};
  return config;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "n",       "v1",      "v2",     "c",       "alpha",   "costs",   "probs",
      "v2_min",  "v2_max",  "v2_step", "alphas", "seed",    "samples", "threads",
      "max_iter", "maintenance_cost", "graph", "edges_dir", "out"};
  return keys;
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  if (key == "n") config.model.n = parse_int<std::int64_t>(key, value);
  else if (key == "v1") config.model.v1 = parse_double(key, value);
  else if (key == "v2") config.model.v2 = parse_double(key, value);
  else if (key == "c") config.model.c = parse_double(key, value);
  else if (key == "alpha") config.model.alpha = parse_double(key, value);
  else if (key == "costs") config.costs = parse_list(key, value);
  else if (key == "probs") config.probs = parse_list(key, value);
  else if (key == "v2_min") config.v2_min = parse_double(key, value);
  else if (key == "v2_max") config.v2_max = parse_double(key, value);
  else if (key == "v2_step") config.v2_step = parse_double(key, value);
  else if (key == "alphas") config.alphas = parse_list(key, value);
  else if (key == "seed") config.seed = parse_int<std::uint64_t>(key, value);
  else if (key == "samples") config.samples = parse_int<std::uint64_t>(key, value);
  else if (key == "threads") config.threads = parse_int<unsigned>(key, value);
  else if (key == "max_iter") config.max_iter = parse_int<int>(key, value);
  else if (key == "maintenance_cost") {
    if (trim(value).empty()) config.maintenance_cost.reset();
    else config.maintenance_cost = parse_double(key, value);
  } else if (key == "graph") config.graph = trim(value);
  else if (key == "edges_dir") config.edges_dir = trim(value);
  else if (key == "out") config.out = trim(value);
  else throw config_error("unknown config key '" + std::string(key) + "'");
}

std::string get_setting(const RunConfig& config, std::string_view key) {
  if (key == "n") return std::to_string(config.model.n);
  if (key == "v1") return format_double(config.model.v1);
  if (key == "v2") return format_double(config.model.v2);
  if (key == "c") return format_double(config.model.c);
  if (key == "alpha") return format_double(config.model.alpha);
  if (key == "costs") return format_list(config.costs);
  if (key == "probs") return format_list(config.probs);
  if (key == "v2_min") return format_double(config.v2_min);
  if (key == "v2_max") return format_double(config.v2_max);
  if (key == "v2_step") return format_double(config.v2_step);
  if (key == "alphas") return format_list(config.alphas);
  if (key == "seed") return std::to_string(config.seed);
  if (key == "samples") return std::to_string(config.samples);
  if (key == "threads") return std::to_string(config.threads);
  if (key == "max_iter") return std::to_string(config.max_iter);
  if (key == "maintenance_cost") {
    return config.maintenance_cost ? format_double(*config.maintenance_cost) : std::string();
  }
  if (key == "graph") return config.graph;
  if (key == "edges_dir") return config.edges_dir;
  if (key == "out") return config.out;
  throw config_error("unknown config key '" + std::string(key) + "'");
}

void read_config(std::istream& in, RunConfig& config) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw config_error(std::string("malformed config: ") + e.message() + " (line " +
                       std::to_string(e.line()) + ")");
  }
  for (const auto& [name, section] : tree) {
    if (section.empty() && !section.data().empty()) {
      throw config_error("config key '" + name + "' outside a section");
    }
    const bool known = name == "config" || name == "common" ||
                       std::find(std::begin(kCommands), std::end(kCommands), name) !=
                           std::end(kCommands);
    if (!known) throw config_error("unknown config section [" + name + "]");
  }
  if (const auto meta = tree.get_child_optional("config")) {
    for (const auto& [key, node] : *meta) {
      if (key == "format_version") {
        if (node.data() != kFormatVersion) {
          throw config_error("unsupported format_version '" + node.data() + "'");
        }
      } else if (key != "command" && key != "sampler") {
        throw config_error("unknown key '" + key + "' in [config]");
      }
    }
  }
  for (const std::string& section : {std::string("common"), config.command}) {
    if (const auto child = tree.get_child_optional(section)) {
      for (const auto& [key, node] : *child) apply_setting(config, key, node.data());
    }
  }
}

void write_config(std::ostream& out, const RunConfig& config) {
  out << "[config]\n";
  out << "format_version=" << config.format_version << "\n";
  out << "command=" << config.command << "\n";
  out << "sampler=" << kSamplerAlgorithm << "\n";
  out << "\n[" << config.command << "]\n";
  for (const auto& key : config_keys()) out << key << "=" << get_setting(config, key) << "\n";
}

}  // namespace srnet::cli
