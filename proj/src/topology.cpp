#include "aoi/topology.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aoi/errors.hpp"
#include "aoi/rng.hpp"
#include "json.hpp"

namespace aoi {

Topology::Topology(std::vector<double> distances, double beta, double theta,
                   std::size_t cache_threshold)
    : distances_(std::move(distances)), beta_(beta), theta_(theta) {
  if (distances_.empty()) {
    throw std::invalid_argument("topology requires at least one node");
  }
  if (!(beta_ > 0.0) || !(theta_ > 0.0)) {
    throw std::invalid_argument("beta and theta must be positive");
  }
  radius_pow_.reserve(distances_.size());
  for (double r : distances_) {
    if (!(r > 0.0) || !(r <= 1.0) || !std::isfinite(r)) {
      throw std::invalid_argument("node distances must lie in (0, 1]");
    }
    radius_pow_.push_back(std::pow(r, beta_));
  }
  const std::size_t n = distances_.size();
  if (n <= cache_threshold) {
    ratio_cache_.resize(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          ratio_cache_[i * n + j] = radius_pow_[j] / (radius_pow_[i] * theta_);
        }
      }
    }
  }
}

double Topology::interference_ratio(std::size_t i, std::size_t j) const {
  const std::size_t n = distances_.size();
  if (i >= n || j >= n) {
    throw std::invalid_argument("node index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("interference ratio requires distinct nodes");
  }
  if (!ratio_cache_.empty()) {
    return ratio_cache_[i * n + j];
  }
  return radius_pow_[j] / (radius_pow_[i] * theta_);
}

std::vector<double> sample_disk_radii(std::size_t n, std::uint64_t seed,
                                      std::uint64_t stream) {
  if (n == 0) {
    throw std::invalid_argument("cannot sample an empty topology");
  }
  SplitRng rng(seed, stream);
  std::vector<double> radii(n);
  for (double& r : radii) r = std::sqrt(rng.next_unit_open());
  return radii;
}

Topology sample_uniform_disk(std::size_t n, std::uint64_t seed, double beta,
                             double theta, std::uint64_t stream) {
  return Topology(sample_disk_radii(n, seed, stream), beta, theta);
}

Topology symmetric_topology(std::size_t n, double radius, double beta,
                            double theta) {
  if (!(radius > 0.0) || !(radius <= 1.0)) {
    throw std::invalid_argument("symmetric radius must lie in (0, 1]");
  }
  return Topology(std::vector<double>(n, radius), beta, theta);
}

Topology topology_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed topology JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("distances")) {
    throw std::invalid_argument("topology JSON needs a \"distances\" array");
  }
  std::vector<double> distances = doc.at("distances").get<std::vector<double>>();
  const double beta = doc.value("beta", 2.0);
  const double theta = doc.value("theta", 1.0);
  return Topology(std::move(distances), beta, theta);
}

std::string topology_to_json(const Topology& topology) {
  nlohmann::json doc;
  doc["beta"] = topology.beta();
  doc["theta"] = topology.theta();
  doc["distances"] = topology.distances();
  return doc.dump(2);
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open topology file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return topology_from_json(buf.str());
}

void save_topology(const Topology& topology, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write topology file: " + path);
  }
  out << topology_to_json(topology) << '\n';
}

}  // namespace aoi
