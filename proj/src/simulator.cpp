#include "aoi/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace aoi {

namespace {

// One slot of the slotted random-access channel. Draw order is fixed so runs
// are reproducible: one uniform per node for the transmit decision, then one
// Exp(1) fading gain per transmitter in index order.
void advance_slot(const Topology& topology, const std::vector<double>& probs,
                  std::vector<std::int64_t>& ages, SplitRng& rng,
                  std::vector<std::uint8_t>& transmitting, std::vector<double>& power,
                  std::vector<std::uint8_t>& success) {
  const std::size_t n = topology.size();
  double total_power = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    transmitting[i] = rng.bernoulli(probs[i]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (transmitting[i]) {
      power[i] = rng.next_exp() / topology.radius_pow(i);
      total_power += power[i];
    } else {
      power[i] = 0.0;
    }
  }
  const double theta = topology.theta();
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = false;
    if (transmitting[i]) {
      const double interference = total_power - power[i];
      // A transmitter with no competition is always decoded.
      ok = interference <= 0.0 || power[i] > theta * interference;
    }
    success[i] = ok ? 1 : 0;
    ages[i] = ok ? 1 : ages[i] + 1;
  }
}

}  // namespace

void SimConfig::validate() const {
  if (horizon < 1) throw std::invalid_argument("simulation horizon must be >= 1");
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
}

std::vector<std::uint8_t> step_slot(const Topology& topology, const Policy& policy,
                                    std::vector<std::int64_t>& ages, SplitRng& rng) {
  validate_policy(policy, topology);
  if (ages.size() != topology.size()) {
    throw std::invalid_argument("age vector size does not match topology");
  }
  const std::size_t n = topology.size();
  std::vector<std::uint8_t> transmitting(n), success(n);
  std::vector<double> power(n);
  advance_slot(topology, policy.probs, ages, rng, transmitting, power, success);
  return success;
}

SimResult run(const Topology& topology, const Policy& policy, const SimConfig& config) {
  config.validate();
  validate_policy(policy, topology);
  const std::size_t n = topology.size();
  const auto horizon = config.horizon;
  const int reps = config.replications;

  std::vector<double> tau_sum(n, 0.0), tau_sq(n, 0.0);
  std::vector<double> aoi_sum(n, 0.0), aoi_sq(n, 0.0);

  SimResult result;
  std::vector<std::int64_t> ages(n);
  std::vector<std::uint8_t> transmitting(n), success(n);
  std::vector<double> power(n);
  std::vector<std::int64_t> hits(n);
  std::vector<double> age_accum(n);

  for (int rep = 0; rep < reps; ++rep) {
    SplitRng rng(config.seed, static_cast<std::uint64_t>(rep));
    std::fill(ages.begin(), ages.end(), std::int64_t{1});
    std::fill(hits.begin(), hits.end(), std::int64_t{0});
    std::fill(age_accum.begin(), age_accum.end(), 0.0);

    const bool record = config.record_paths && rep == 0;
    if (record) {
      result.paths.assign(n, std::vector<std::int64_t>(1, 1));
      for (auto& path : result.paths) path.reserve(static_cast<std::size_t>(horizon) + 1);
    }

    for (std::int64_t t = 0; t < horizon; ++t) {
      advance_slot(topology, policy.probs, ages, rng, transmitting, power, success);
      for (std::size_t i = 0; i < n; ++i) {
        hits[i] += success[i];
        age_accum[i] += static_cast<double>(ages[i]);
        if (record) result.paths[i].push_back(ages[i]);
      }
    }

    const double slots = static_cast<double>(horizon);
    for (std::size_t i = 0; i < n; ++i) {
      const double tau = static_cast<double>(hits[i]) / slots;
      const double aoi = age_accum[i] / slots;
      tau_sum[i] += tau;
      tau_sq[i] += tau * tau;
      aoi_sum[i] += aoi;
      aoi_sq[i] += aoi * aoi;
    }
  }

  result.tau_hat.resize(n);
  result.aoi_hat.resize(n);
  result.ci_tau.assign(n, 0.0);
  result.ci_aoi.assign(n, 0.0);
  const double r = static_cast<double>(reps);
  for (std::size_t i = 0; i < n; ++i) {
    result.tau_hat[i] = tau_sum[i] / r;
    result.aoi_hat[i] = aoi_sum[i] / r;
    if (reps > 1) {
      const double var_tau =
          std::max(0.0, (tau_sq[i] - r * result.tau_hat[i] * result.tau_hat[i]) / (r - 1.0));
      const double var_aoi =
          std::max(0.0, (aoi_sq[i] - r * result.aoi_hat[i] * result.aoi_hat[i]) / (r - 1.0));
      result.ci_tau[i] = 1.96 * std::sqrt(var_tau / r);
      result.ci_aoi[i] = 1.96 * std::sqrt(var_aoi / r);
    }
  }
  return result;
}

Policy baseline_aloha(std::size_t n, double p_common) {
  if (n == 0) throw std::invalid_argument("baseline needs at least one node");
  double p = p_common;
  if (p < 0.0) p = 1.0 / static_cast<double>(n);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("common transmit probability must lie in [0, 1]");
  }
  Policy policy;
  policy.probs.assign(n, p);
  policy.label = "aloha";
  return policy;
}

}  // namespace aoi
