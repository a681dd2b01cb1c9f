#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace aoi {

/// Network geometry: per-node distances to the base station, normalized to
/// (0, 1], with path-loss exponent beta and SIR capture threshold theta.
/// Immutable after construction; safe to share across threads.
class Topology {
 public:
  static constexpr std::size_t kDefaultCacheThreshold = 512;

  explicit Topology(std::vector<double> distances, double beta = 2.0,
                    double theta = 1.0,
                    std::size_t cache_threshold = kDefaultCacheThreshold);

  std::size_t size() const { return distances_.size(); }
  const std::vector<double>& distances() const { return distances_; }
  double distance(std::size_t i) const { return distances_.at(i); }
  double beta() const { return beta_; }
  double theta() const { return theta_; }

  /// d_ij = r_j^beta / (r_i^beta * theta): interference ratio governing how
  /// strongly node j's transmissions suppress node i's capture. i != j.
  double interference_ratio(std::size_t i, std::size_t j) const;

  /// r_i^beta, precomputed.
  double radius_pow(std::size_t i) const { return radius_pow_[i]; }

 private:
  std::vector<double> distances_;
  std::vector<double> radius_pow_;
  double beta_;
  double theta_;
  std::vector<double> ratio_cache_;  // n*n row-major, only for small n
};

/// n radii i.i.d. with CDF P[R <= r] = r^2 (uniform over the unit disk),
/// i.e. r = sqrt(U) with U uniform on (0, 1]. Deterministic per
/// (seed, stream); experiments use one stream per topology sample.
std::vector<double> sample_disk_radii(std::size_t n, std::uint64_t seed,
                                      std::uint64_t stream = 0);
Topology sample_uniform_disk(std::size_t n, std::uint64_t seed,
                             double beta = 2.0, double theta = 1.0,
                             std::uint64_t stream = 0);

/// All nodes at the same radius; every d_ij = 1/theta.
Topology symmetric_topology(std::size_t n, double radius, double beta = 2.0,
                            double theta = 1.0);

// JSON schema: {"beta": float, "theta": float, "distances": [float, ...]}
Topology topology_from_json(const std::string& text);
std::string topology_to_json(const Topology& topology);
Topology load_topology(const std::string& path);
void save_topology(const Topology& topology, const std::string& path);

}  // namespace aoi
