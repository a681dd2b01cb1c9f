#pragma once

#include <cstdint>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/rng.hpp"
#include "aoi/topology.hpp"

namespace aoi {

struct SimConfig {
  std::int64_t horizon = 10000;   // slots per replication
  int replications = 8;
  std::uint64_t seed = 1;
  bool record_paths = false;      // keep per-slot age trajectories (first replication only)

  void validate() const;
};

struct SimResult {
  std::vector<double> tau_hat;    // empirical delivery rate per node
  std::vector<double> aoi_hat;    // time-averaged age per node
  std::vector<double> ci_tau;     // 95% CI half-width across replications
  std::vector<double> ci_aoi;
  std::vector<std::vector<std::int64_t>> paths;  // paths[i][t], only if record_paths
};

// Advances one slot in place: draws transmissions and fading, applies the
// capture rule, and updates ages (reset to 1 on delivery, +1 otherwise).
// Returns the per-node success indicators for the slot.
std::vector<std::uint8_t> step_slot(const Topology& topology, const Policy& policy,
                                    std::vector<std::int64_t>& ages, SplitRng& rng);

SimResult run(const Topology& topology, const Policy& policy, const SimConfig& config);

// Uniform ALOHA baseline: every node transmits with the same probability
// (1/n unless overridden).
Policy baseline_aloha(std::size_t n, double p_common = -1.0);

}  // namespace aoi
