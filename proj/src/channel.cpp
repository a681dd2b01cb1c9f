#include "aoi/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aoi {

namespace {
constexpr std::size_t kLogSpaceThreshold = 64;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

void validate_policy(const Policy& policy, const Topology& topology) {
  if (policy.probs.size() != topology.size()) {
    throw std::invalid_argument("policy length does not match topology size");
  }
  for (double p : policy.probs) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
      throw std::invalid_argument("transmission probabilities must lie in [0, 1]");
    }
  }
}

double success_probability(const Topology& topology, const Policy& policy,
                           std::size_t i) {
  validate_policy(policy, topology);
  if (i >= topology.size()) {
    throw std::invalid_argument("node index out of range");
  }
  const std::size_t n = topology.size();
  double tau = policy.probs[i];
  if (tau == 0.0) return 0.0;
  if (n > kLogSpaceThreshold) {
    double log_prod = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      log_prod += std::log1p(-policy.probs[j] / (1.0 + topology.interference_ratio(i, j)));
    }
    return tau * std::exp(log_prod);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    tau *= 1.0 - policy.probs[j] / (1.0 + topology.interference_ratio(i, j));
  }
  return tau;
}

std::vector<double> success_probabilities(const Topology& topology,
                                          const Policy& policy) {
  validate_policy(policy, topology);
  const std::size_t n = topology.size();
  std::vector<double> taus(n);
  const bool log_space = n > kLogSpaceThreshold;
  for (std::size_t i = 0; i < n; ++i) {
    if (policy.probs[i] == 0.0) {
      taus[i] = 0.0;
      continue;
    }
    if (log_space) {
      double log_prod = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        log_prod += std::log1p(-policy.probs[j] / (1.0 + topology.interference_ratio(i, j)));
      }
      taus[i] = policy.probs[i] * std::exp(log_prod);
    } else {
      double tau = policy.probs[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        tau *= 1.0 - policy.probs[j] / (1.0 + topology.interference_ratio(i, j));
      }
      taus[i] = tau;
    }
  }
  return taus;
}

AoiVector expected_aoi(const Topology& topology, const Policy& policy) {
  std::vector<double> taus = success_probabilities(topology, policy);
  AoiVector aoi;
  aoi.values.resize(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    aoi.values[i] = taus[i] > 0.0 ? 1.0 / taus[i] : kInf;
  }
  return aoi;
}

Objective Objective::weighted_sum(std::vector<double> alpha) {
  if (alpha.empty()) {
    throw std::invalid_argument("weighted-sum objective needs at least one weight");
  }
  for (double a : alpha) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("weights must be positive and finite");
    }
  }
  Objective obj;
  obj.kind = ObjectiveKind::kWeightedSum;
  obj.weights = std::move(alpha);
  return obj;
}

Objective Objective::min_max() {
  Objective obj;
  obj.kind = ObjectiveKind::kMinMax;
  return obj;
}

Objective Objective::proportional_fair() {
  Objective obj;
  obj.kind = ObjectiveKind::kProportionalFair;
  return obj;
}

double objective_value(const Objective& objective, const AoiVector& aoi) {
  const auto& h = aoi.values;
  switch (objective.kind) {
    case ObjectiveKind::kWeightedSum: {
      if (objective.weights.size() != h.size()) {
        throw std::invalid_argument("weight vector length mismatch");
      }
      double sum = 0.0;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!(objective.weights[i] > 0.0)) {
          throw std::invalid_argument("weights must be positive");
        }
        sum += objective.weights[i] * h[i];
      }
      return sum;
    }
    case ObjectiveKind::kMinMax:
      return *std::max_element(h.begin(), h.end());
    case ObjectiveKind::kProportionalFair: {
      double sum = 0.0;
      for (double v : h) sum += std::log(v);
      return sum;
    }
  }
  return kInf;  // unreachable
}

}  // namespace aoi
