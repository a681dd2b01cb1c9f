// Command-line experiment runner: computes age-optimal transmission policies
// for spatially distributed random-access networks, simulates them, and
// writes plot-ready CSV artifacts.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "aoi/errors.hpp"
#include "json.hpp"
#include "aoi/experiments.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw aoi::IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void fail_json(const std::string& kind, const std::string& message, int code) {
  std::cerr << "{\"error\": \"" << kind << "\", \"message\": "
            << nlohmann::json(message).dump() << ", \"exit_code\": " << code
            << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Age-of-information policy solver and simulator for spatial "
               "random-access networks"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand name

  std::string config_path;
  std::string out_dir;
  std::string policy_kind;
  std::string topology_file;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  std::size_t n_nodes = 0;
  int samples = 0;
  std::int64_t horizon = 0;
  int replications = 0;

  app.add_option("--config", config_path, "experiment config JSON file")
      ->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "master seed");
  app.add_option("--out", out_dir, "output directory");
  auto* threads_opt =
      app.add_option("--threads", threads, "worker threads for sample fan-out");
  app.add_option("--policy", policy_kind, "policy kind: ews|mm|pf|ta|aloha");
  app.add_option("--topology", topology_file, "topology JSON file");
  auto* nodes_opt = app.add_option("--nodes", n_nodes, "sampled network size");
  auto* samples_opt =
      app.add_option("--samples", samples, "topology samples per figure point");
  auto* horizon_opt =
      app.add_option("--horizon", horizon, "simulation slots per replication");
  auto* reps_opt =
      app.add_option("--replications", replications, "simulation replications");

  static const char* kCommands[] = {"solve",   "simulate", "bounds",
                                    "figure3", "figure4",  "figure5",
                                    "pareto",  "ta-convergence"};
  static const char* kDescriptions[] = {
      "solve one policy on one topology and write the report",
      "solve, then Monte Carlo simulate, and write per-node CSV",
      "evaluate the normalized-AoI sandwich bounds on one topology",
      "mean normalized AoI vs network size (CSV for the scaling figure)",
      "mean transmit probability vs radius (CSV)",
      "mean normalized AoI vs radius, with uniform-ALOHA baseline (CSV)",
      "two-node Pareto boundary sweep (CSV)",
      "deviation of the topology-agnostic policy from proportional fairness"};
  for (int i = 0; i < 8; ++i) {
    app.add_subcommand(kCommands[i], kDescriptions[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  seed_set = seed_opt->count() > 0;

  try {
    aoi::ExperimentSpec spec;
    if (!config_path.empty()) spec = aoi::spec_from_json(read_file(config_path));
    spec.command = app.get_subcommands().front()->get_name();

    // flag overrides win over the config file
    if (seed_set) {
      spec.seed = seed;
      spec.sim.seed = seed;
    }
    if (!out_dir.empty()) spec.output_dir = out_dir;
    if (!policy_kind.empty()) spec.policy_kind = policy_kind;
    if (!topology_file.empty()) {
      spec.topology_source.kind = "file";
      spec.topology_source.path = topology_file;
    }
    if (threads_opt->count() > 0) spec.threads = threads;
    if (nodes_opt->count() > 0) spec.topology_source.n = n_nodes;
    if (samples_opt->count() > 0) spec.samples = samples;
    if (horizon_opt->count() > 0) {
      if (horizon < 0) throw std::invalid_argument("--horizon must be >= 1");
      spec.sim.horizon = horizon;
    }
    if (reps_opt->count() > 0) {
      if (replications < 0) throw std::invalid_argument("--replications must be >= 1");
      spec.sim.replications = replications;
    }

    const auto artifacts = aoi::run_experiment(spec);
    for (const auto& path : artifacts) std::cout << path << '\n';
    return 0;
  } catch (const std::invalid_argument& e) {
    fail_json("usage", e.what(), kExitUsage);
    return kExitUsage;
  } catch (const aoi::ConvergenceError& e) {
    fail_json("convergence", e.what(), kExitConvergence);
    return kExitConvergence;
  } catch (const aoi::IoError& e) {
    fail_json("io", e.what(), kExitIo);
    return kExitIo;
  } catch (const std::exception& e) {
    fail_json("internal", e.what(), kExitIo);
    return kExitIo;
  }
}
