#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aoi/topology.hpp"

namespace aoi {

/// Per-node Bernoulli transmission probabilities, with a provenance label
/// (which solver produced it, with which weights).
struct Policy {
  std::vector<double> probs;
  std::string label;
};

/// Throws if the policy length mismatches the topology or any p_i is
/// outside [0, 1].
void validate_policy(const Policy& policy, const Topology& topology);

/// Per-node time-average expected AoI, in slots. Entries are >= 1 and may be
/// +infinity when the corresponding success probability is zero.
struct AoiVector {
  std::vector<double> values;
};

/// Capture-model success probability of node i in a slot:
///   tau_i = p_i * prod_{j != i} (1 - p_j / (1 + d_ij)).
double success_probability(const Topology& topology, const Policy& policy,
                           std::size_t i);

/// All tau_i at once. Products switch to log-space accumulation for n > 64
/// to keep many-factor products well conditioned.
std::vector<double> success_probabilities(const Topology& topology,
                                          const Policy& policy);

/// The AoI map Phi: h_i = 1/tau_i elementwise (renewal identity).
AoiVector expected_aoi(const Topology& topology, const Policy& policy);

enum class ObjectiveKind { kWeightedSum, kMinMax, kProportionalFair };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::kProportionalFair;
  std::vector<double> weights;  // weighted-sum only; must be positive

  static Objective weighted_sum(std::vector<double> alpha);
  static Objective min_max();
  static Objective proportional_fair();
};

/// sum(alpha_i h_i), max(h_i), or sum(log h_i); +infinity propagates.
double objective_value(const Objective& objective, const AoiVector& aoi);

}  // namespace aoi
