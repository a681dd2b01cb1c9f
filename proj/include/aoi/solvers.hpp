#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/topology.hpp"

namespace aoi {

struct SolverConfig {
  double tol_fixed_point = 1e-10;  // residual tolerance for the root system
  double tol_outer = 1e-8;         // outer-loop tolerance on policy change
  int max_sweeps = 10000;          // cap on coordinate sweeps / outer passes
  // Multiplier-update damping in (0, 1]. The weighted-sum outer map is
  // anti-monotone (raising a node's multiplier lowers its age), so the
  // undamped iteration tends to two-cycle; the half-step average converges.
  double damping = 0.5;
  double mm_step = 0.1;            // dual-ascent step for min-max

  void validate() const;
};

/// Converged policy plus diagnostics. `residual` is the max |f_i| over
/// unclamped coordinates combined with the KKT slack max(0, -f_i(1)) on
/// clamped ones; `trace` records the residual (or AoI spread, for min-max)
/// after each pass.
struct SolverReport {
  Policy policy;
  AoiVector aoi;
  std::vector<double> multipliers;
  double residual = 0.0;
  int sweeps = 0;
  bool converged = false;
  std::vector<double> trace;
};

/// {"policy": [...], "aoi": [...], "multipliers": [...],
///  "residual": float, "sweeps": int, "converged": bool}
std::string report_to_json(const SolverReport& report);

/// Evaluates f_i(p_i) = w_i/p_i - sum_{j != i} w_j/(1 + d_ji - p_i), the
/// weighted Pareto fixed-point function for node i at the given policy.
double pareto_residual_function(const Topology& topology,
                                const std::vector<double>& weights,
                                std::size_t i, double p_i);

/// Root of f_i alone (the system is separable, so this is node i's exact
/// Pareto-point probability). O(n) per bisection step; used by the
/// large-sample asymptotic experiments where only a probe node matters.
double pareto_coordinate(const Topology& topology,
                         const std::vector<double>& weights, std::size_t i);

/// Maps positive weights to the Pareto-boundary policy: per coordinate the
/// unique root of f_i on (0, 1], clamped to 1 when f_i(1) >= 0, iterated in
/// Gauss-Seidel sweeps until the joint residual falls below tolerance.
SolverReport pareto_point(const Topology& topology,
                          const std::vector<double>& weights,
                          const SolverConfig& config = {});

/// Minimizes sum(alpha_i h_i): outer fixed point on the multipliers
/// lambda = alpha .* h, normalized so max(lambda) = 1.
SolverReport solve_ews(const Topology& topology,
                       const std::vector<double>& alpha,
                       const SolverConfig& config = {});

/// Minimizes max(h_i) by dual ascent; at convergence the AoI is equal
/// across nodes and the multipliers sum to log of that common value.
SolverReport solve_mm(const Topology& topology, const SolverConfig& config = {});

/// Proportionally fair AoI: the Pareto point at all-ones weights. Fully
/// separable, hence implementable without multiplier exchange.
SolverReport solve_pf(const Topology& topology, const SolverConfig& config = {});

/// Topology-agnostic transmission probability for a node that knows only its
/// own radius and the network size (valid for beta = 2, theta = 1):
///   min{1, 1 / ((n-1) (1 - r^2 log(1 + 1/r^2)))}.
double solve_ta(std::size_t n, double own_radius);

/// solve_ta applied to every node; rejects topologies with beta != 2 or
/// theta != 1, where the closed form does not apply.
Policy ta_policy(const Topology& topology);

}  // namespace aoi
