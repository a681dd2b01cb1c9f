#include "aoi/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace aoi {

namespace {

constexpr int kBisectionIterations = 64;

void check_weights(const std::vector<double>& weights, std::size_t n,
                   const char* what) {
  if (weights.size() != n) {
    throw std::invalid_argument(std::string(what) + " length does not match topology");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
  }
}

// Inner state for the fixed-point system: per node i the row of constants
// a_ij = 1 + d_ji (j != i), against which f_i(p) = w_i/p - sum_j w_j/(a_ij - p).
struct ParetoSystem {
  explicit ParetoSystem(const Topology& topology) : n(topology.size()), rows(n * n, 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) rows[i * n + j] = 1.0 + topology.interference_ratio(j, i);
      }
    }
  }

  double f(const std::vector<double>& w, std::size_t i, double p) const {
    const double* a = rows.data() + i * n;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum += w[j] / (a[j] - p);
    }
    return w[i] / p - sum;
  }

  // Unique root of f_i on (0, 1], or 1 when f_i(1) >= 0 (clamped).
  // f_i is strictly decreasing there and diverges to +inf at 0+, so plain
  // bisection with an implicit positive endpoint at 0 is safe.
  double root(const std::vector<double>& w, std::size_t i) const {
    if (f(w, i, 1.0) >= 0.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < kBisectionIterations; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // interval at floating-point limit
      const double fm = f(w, i, mid);
      if (fm == 0.0) return mid;
      (fm > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  std::size_t n;
  std::vector<double> rows;
};

// Max |f_i| over unclamped coordinates, max(0, -f_i(1)) on clamped ones.
double joint_residual(const ParetoSystem& sys, const std::vector<double>& w,
                      const std::vector<double>& p) {
  double res = 0.0;
  for (std::size_t i = 0; i < sys.n; ++i) {
    const double fi = sys.f(w, i, p[i]);
    res = std::max(res, p[i] >= 1.0 ? std::max(0.0, -fi) : std::abs(fi));
  }
  return res;
}

SolverReport pareto_point_on(const ParetoSystem& sys, const Topology& topology,
                             const std::vector<double>& weights,
                             const SolverConfig& config, std::string label) {
  SolverReport report;
  report.policy.label = std::move(label);
  report.policy.probs.assign(sys.n, 1.0 / static_cast<double>(sys.n));
  report.multipliers = weights;

  if (sys.n == 1) {
    report.policy.probs = {1.0};
    report.aoi = expected_aoi(topology, report.policy);
    report.converged = true;
    return report;
  }

  auto& p = report.policy.probs;
  while (report.sweeps < config.max_sweeps) {
    for (std::size_t i = 0; i < sys.n; ++i) p[i] = sys.root(weights, i);
    ++report.sweeps;
    report.residual = joint_residual(sys, weights, p);
    report.trace.push_back(report.residual);
    if (report.residual <= config.tol_fixed_point) {
      report.converged = true;
      break;
    }
  }
  report.aoi = expected_aoi(topology, report.policy);
  return report;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

SolverReport degenerate_single_node(const Topology& topology, std::string label) {
  SolverReport report;
  report.policy.probs = {1.0};
  report.policy.label = std::move(label);
  report.aoi = expected_aoi(topology, report.policy);
  report.multipliers = {1.0};
  report.converged = true;
  return report;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tol_fixed_point > 0.0) || !(tol_outer > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (!(damping > 0.0) || !(damping <= 1.0)) {
    throw std::invalid_argument("damping must lie in (0, 1]");
  }
  if (!(mm_step > 0.0)) {
    throw std::invalid_argument("mm_step must be positive");
  }
  if (max_sweeps < 1) {
    throw std::invalid_argument("max_sweeps must be at least 1");
  }
}

std::string report_to_json(const SolverReport& report) {
  nlohmann::json doc;
  doc["policy"] = report.policy.probs;
  doc["aoi"] = report.aoi.values;
  doc["multipliers"] = report.multipliers;
  doc["residual"] = report.residual;
  doc["sweeps"] = report.sweeps;
  doc["converged"] = report.converged;
  return doc.dump(2);
}

double pareto_residual_function(const Topology& topology,
                                const std::vector<double>& weights,
                                std::size_t i, double p_i) {
  check_weights(weights, topology.size(), "weights");
  if (i >= topology.size()) throw std::invalid_argument("node index out of range");
  if (!(p_i > 0.0) || !(p_i <= 1.0)) {
    throw std::invalid_argument("p_i must lie in (0, 1]");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < topology.size(); ++j) {
    if (j != i) sum += weights[j] / (1.0 + topology.interference_ratio(j, i) - p_i);
  }
  return weights[i] / p_i - sum;
}

double pareto_coordinate(const Topology& topology,
                         const std::vector<double>& weights, std::size_t i) {
  const std::size_t n = topology.size();
  check_weights(weights, n, "weights");
  if (i >= n) throw std::invalid_argument("node index out of range");
  if (n == 1) return 1.0;

  std::vector<double> a(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i) a[j] = 1.0 + topology.interference_ratio(j, i);
  }
  const auto f = [&](double p) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum += weights[j] / (a[j] - p);
    }
    return weights[i] / p - sum;
  };

  if (f(1.0) >= 0.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    (fm > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SolverReport pareto_point(const Topology& topology,
                          const std::vector<double>& weights,
                          const SolverConfig& config) {
  config.validate();
  check_weights(weights, topology.size(), "weights");
  ParetoSystem sys(topology);
  return pareto_point_on(sys, topology, weights, config, "pareto");
}

SolverReport solve_ews(const Topology& topology, const std::vector<double>& alpha,
                       const SolverConfig& config) {
  config.validate();
  check_weights(alpha, topology.size(), "alpha");
  if (topology.size() == 1) return degenerate_single_node(topology, "ews");

  const std::size_t n = topology.size();
  ParetoSystem sys(topology);
  SolverConfig inner = config;

  std::vector<double> lambda = alpha;
  const auto normalize = [](std::vector<double>& v) {
    const double m = *std::max_element(v.begin(), v.end());
    for (double& x : v) x /= m;
  };
  normalize(lambda);

  SolverReport report;
  std::vector<double> prev_p;
  std::vector<double> outer_trace;
  int sweeps = 0;
  for (int outer = 0; outer < config.max_sweeps; ++outer) {
    report = pareto_point_on(sys, topology, lambda, inner, "ews");
    sweeps += report.sweeps;
    if (!report.converged || !all_finite(report.aoi.values)) {
      report.converged = false;
      break;
    }
    // self-consistent multipliers: lambda_i = alpha_i * h_i, rescaled
    std::vector<double> target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = alpha[i] * report.aoi.values[i];
    normalize(target);
    const double eq_residual = joint_residual(sys, target, report.policy.probs);
    outer_trace.push_back(eq_residual);
    const bool policy_settled =
        !prev_p.empty() && max_abs_diff(prev_p, report.policy.probs) < config.tol_outer;
    prev_p = report.policy.probs;
    if (policy_settled && eq_residual <= config.tol_fixed_point) {
      report.multipliers = target;
      report.residual = eq_residual;
      report.sweeps = sweeps;
      report.trace = std::move(outer_trace);
      report.converged = true;
      return report;
    }
    for (std::size_t i = 0; i < n; ++i) {
      lambda[i] = (1.0 - config.damping) * lambda[i] + config.damping * target[i];
    }
    normalize(lambda);
  }
  report.sweeps = sweeps;
  report.trace = std::move(outer_trace);
  report.converged = false;
  return report;
}

SolverReport solve_mm(const Topology& topology, const SolverConfig& config) {
  config.validate();
  if (topology.size() == 1) return degenerate_single_node(topology, "mm");

  const std::size_t n = topology.size();
  ParetoSystem sys(topology);
  std::vector<double> lambda(n, 1.0 / static_cast<double>(n));

  SolverReport report;
  int sweeps = 0;
  std::vector<double> spread_trace;
  for (int outer = 0; outer < config.max_sweeps; ++outer) {
    report = pareto_point_on(sys, topology, lambda, config, "mm");
    sweeps += report.sweeps;
    if (!report.converged || !all_finite(report.aoi.values)) {
      report.converged = false;
      break;
    }
    const auto& h = report.aoi.values;
    const auto [min_it, max_it] = std::minmax_element(h.begin(), h.end());
    const double mean_h = std::accumulate(h.begin(), h.end(), 0.0) / n;
    const double spread = *max_it - *min_it;
    spread_trace.push_back(spread / mean_h);

    double mean_log_h = 0.0;
    for (double v : h) mean_log_h += std::log(v);
    mean_log_h /= static_cast<double>(n);

    // multipliers characterized up to the rescale sum(lambda) = log h^MM
    const double lambda_sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    if (spread < config.tol_outer * mean_h) {
      for (double& l : lambda) l *= mean_log_h / lambda_sum;
      report.multipliers = lambda;
      report.residual = joint_residual(sys, lambda, report.policy.probs);
      report.sweeps = sweeps;
      report.trace = std::move(spread_trace);
      report.converged = true;
      return report;
    }
    // multiplicative-weights ascent on the log-AoI deviations
    for (std::size_t i = 0; i < n; ++i) {
      lambda[i] *= std::exp(config.mm_step * (std::log(h[i]) - mean_log_h));
    }
    const double new_sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    for (double& l : lambda) l *= mean_log_h / new_sum;
  }
  report.sweeps = sweeps;
  report.trace = std::move(spread_trace);
  report.converged = false;
  return report;
}

SolverReport solve_pf(const Topology& topology, const SolverConfig& config) {
  config.validate();
  if (topology.size() == 1) return degenerate_single_node(topology, "pf");
  ParetoSystem sys(topology);
  SolverReport report = pareto_point_on(
      sys, topology, std::vector<double>(topology.size(), 1.0), config, "pf");
  return report;
}

double solve_ta(std::size_t n, double own_radius) {
  if (n < 2) {
    throw std::invalid_argument("topology-agnostic policy needs at least 2 nodes");
  }
  if (!(own_radius > 0.0) || !(own_radius <= 1.0)) {
    throw std::invalid_argument("own radius must lie in (0, 1]");
  }
  const double r2 = own_radius * own_radius;
  const double mu = 1.0 - r2 * std::log1p(1.0 / r2);
  return std::min(1.0, 1.0 / (static_cast<double>(n - 1) * mu));
}

Policy ta_policy(const Topology& topology) {
  if (topology.beta() != 2.0 || topology.theta() != 1.0) {
    throw std::invalid_argument(
        "topology-agnostic policy is only derived for beta = 2, theta = 1");
  }
  Policy policy;
  policy.label = "ta";
  policy.probs.reserve(topology.size());
  for (double r : topology.distances()) {
    policy.probs.push_back(solve_ta(topology.size(), r));
  }
  return policy;
}

}  // namespace aoi
