#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "aoi/simulator.hpp"
#include "aoi/solvers.hpp"
#include "aoi/topology.hpp"

namespace aoi {

inline constexpr const char* kVersion = "0.1.0";

/// FNV-1a 64-bit over raw bytes; used for artifact content hashes.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t hash_file(const std::string& path);

/// Floats in CSV artifacts use 9 significant digits so reruns hash equal.
std::string format_sig(double x);

struct TopologySource {
  std::string kind = "disk";  // "file" | "disk" | "symmetric"
  std::string path;           // kind == "file"
  std::size_t n = 50;         // sampler size
  double radius = 1.0;        // kind == "symmetric"
  double beta = 2.0;
  double theta = 1.0;
};

/// One experiment run: which command, where the topology comes from, which
/// policy to use where relevant, and the output location. The JSON config
/// uses exactly these field names.
struct ExperimentSpec {
  std::string command;  // solve | simulate | bounds | figure3 | figure4 |
                        // figure5 | pareto | ta-convergence
  TopologySource topology_source;
  std::string policy_kind = "pf";  // ews | mm | pf | ta | aloha
  SimConfig sim;
  std::string output_dir = "out";
  std::uint64_t seed = 1;
  int threads = 1;
  std::vector<std::size_t> sizes;  // figure3 / ta-convergence; empty = default
  int samples = 100;               // topology draws per figure point
  int buckets = 8;                 // radius buckets for figure4/figure5
  double aloha_p = -1.0;           // baseline probability; < 0 means 1/n
  std::vector<double> weights;     // ews weights; empty = all ones
  SolverConfig solver;

  void validate() const;
};

ExperimentSpec spec_from_json(const std::string& text);
std::string spec_to_json(const ExperimentSpec& spec);

/// Runs the experiment, writes its CSV/JSON artifacts plus a manifest with
/// content hashes into spec.output_dir, and returns the artifact paths.
/// Throws std::invalid_argument (bad spec), ConvergenceError, or IoError.
std::vector<std::string> run_experiment(const ExperimentSpec& spec);

/// Static-partition-free parallel loop over [0, count); tasks must be
/// independent and index-keyed so results are order-deterministic.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace aoi
