#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/solvers.hpp"
#include "aoi/topology.hpp"

namespace aoi {

/// Limit of the normalized min-max AoI upper bound as n grows.
inline constexpr double kHalfE = std::numbers::e / 2.0;

/// 1 / (2 (1 - 1/n)^(n-1)): the exact symmetric-network value of the
/// normalized min-max AoI; increases towards e/2.
double finite_n_upper_bound(std::size_t n);

/// Sandwich 1 <= lower <= mid <= upper evaluated on a concrete topology,
/// where lower = sum(h at the sum-optimal point)/n^2 and mid = max(h at the
/// min-max point)/n.
struct BoundReport {
  double lower = 0.0;
  double mid = 0.0;
  double finite_n_upper = 0.0;
  double upper = kHalfE;
  bool lower_ok = false;  // lower >= 1 - tol
  bool order_ok = false;  // lower <= mid + tol
  bool upper_ok = false;  // mid <= finite_n_upper * (1 + slack)
  bool satisfied = false;
};

/// Solves the sum-optimal (equal weights) and min-max policies and checks the
/// normalized-AoI sandwich. Requires beta = 2, theta = 1 and n >= 2; throws
/// ConvergenceError if either solve fails.
BoundReport check_bounds(const Topology& topology, const SolverConfig& config = {});

struct ConvexityWitness {
  int trial = 0;
  std::size_t node = 0;
  double lambda = 0.0;
  std::vector<double> p1;
  std::vector<double> p2;
  double lhs = 0.0;  // AoI at the mixture
  double rhs = 0.0;  // mixed AoI of the endpoints
};

struct ConvexityReport {
  int trials = 0;
  int violations = 0;
  std::vector<ConvexityWitness> witnesses;  // first few violations, for debugging
  bool passed() const { return violations == 0; }
};

/// Randomized check that the AoI map is elementwise convex in the policy:
/// draws p1, p2 componentwise uniform and lambda uniform, then requires
/// h(mix) <= lambda h(p1) + (1-lambda) h(p2) up to 1e-12 relative slack.
ConvexityReport convexity_probe(const Topology& topology, int trials,
                                std::uint64_t seed);

struct BoundaryPoint {
  std::vector<double> weights;
  Policy policy;
  AoiVector aoi;
  bool converged = false;
};

/// Maps each weight vector through the Pareto fixed point. Failed solves are
/// recorded with converged = false and the trace continues.
std::vector<BoundaryPoint> trace_pareto_boundary(
    const Topology& topology, const std::vector<std::vector<double>>& weight_grid,
    const SolverConfig& config = {});

struct ZpfMoments {
  double mu = 0.0;
  double sigma_sq = 0.0;
};

/// Per-interferer moments of the proportionally fair inverse probability:
/// mu = 1 - r^2 log(1 + 1/r^2), sigma^2 = 1 - 1/(1+r^2) - (r^2 log(1+1/r^2))^2.
/// Over a large disk network, 1/p_i is approximately Normal(n mu, n sigma^2).
ZpfMoments zpf_statistics(double r);

struct ZpfSample {
  double r_probe = 1.0;
  std::size_t n = 0;
  std::vector<double> z_values;  // 1/p for the probe node, one per topology draw
  int clamped = 0;               // draws where the probe probability hit 1
  int failures = 0;

  double mean() const;
  double variance() const;  // unbiased, 0 when fewer than 2 samples
};

/// Fixes a probe node at r_probe, draws the other n-1 radii from the unit
/// disk (one independent stream per sample), and records the probe's exact
/// proportionally fair 1/p.
ZpfSample sample_zpf(std::size_t n, double r_probe, int samples,
                     std::uint64_t seed);

struct TaConvergenceRow {
  std::size_t n = 0;
  int samples = 0;
  double median_abs_dev = 0.0;  // |p_pf - p_ta| at the probe node
  double p95_abs_dev = 0.0;
  double mean_z = 0.0;          // mean of 1/p_pf
  double var_z = 0.0;
  int clamped = 0;
  int failures = 0;
};

struct TaConvergenceReport {
  double probe_radius = 1.0;
  std::vector<TaConvergenceRow> rows;
  double slope = 0.0;  // least-squares slope of log median deviation vs log n
};

/// How fast the topology-agnostic probability approaches the exact
/// proportionally fair one as the network grows: per-size deviation
/// statistics for a probe node plus the log-log convergence slope.
TaConvergenceReport ta_convergence_experiment(const std::vector<std::size_t>& sizes,
                                              int samples, std::uint64_t seed,
                                              double probe_radius = 1.0);

}  // namespace aoi
