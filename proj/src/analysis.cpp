#include "aoi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aoi/errors.hpp"
#include "aoi/rng.hpp"

namespace aoi {

namespace {

constexpr double kBoundTol = 1e-9;
constexpr double kBoundSlack = 0.01;  // finite-n bound is exact only for symmetric networks
constexpr double kConvexityRelTol = 1e-12;
constexpr std::size_t kMaxStoredWitnesses = 8;

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double variance_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

double sorted_median(const std::vector<double>& sorted) {
  const std::size_t m = sorted.size();
  if (m == 0) return 0.0;
  if (m % 2 == 1) return sorted[m / 2];
  return 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
}

double sorted_quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  // nearest-rank definition
  const auto m = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * m));
  if (rank == 0) rank = 1;
  if (rank > sorted.size()) rank = sorted.size();
  return sorted[rank - 1];
}

// Radii for one probe experiment: node 0 pinned, the rest drawn from the
// unit disk on a stream of its own so samples are independent tasks.
std::vector<double> probe_radii(std::size_t n, double r_probe, std::uint64_t seed,
                                std::uint64_t stream) {
  std::vector<double> radii = sample_disk_radii(n - 1, seed, stream);
  radii.insert(radii.begin(), r_probe);
  return radii;
}

void check_probe_args(std::size_t n, double r_probe, int samples) {
  if (n < 2) throw std::invalid_argument("probe experiments need at least two nodes");
  if (!(r_probe > 0.0) || !(r_probe <= 1.0) || !std::isfinite(r_probe)) {
    throw std::invalid_argument("probe radius must lie in (0, 1]");
  }
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
}

}  // namespace

double finite_n_upper_bound(std::size_t n) {
  if (n < 2) throw std::invalid_argument("bound requires at least two nodes");
  const double nn = static_cast<double>(n);
  return 0.5 / std::pow(1.0 - 1.0 / nn, nn - 1.0);
}

BoundReport check_bounds(const Topology& topology, const SolverConfig& config) {
  if (topology.beta() != 2.0 || topology.theta() != 1.0) {
    throw std::invalid_argument("bound check assumes beta = 2 and theta = 1");
  }
  const std::size_t n = topology.size();
  if (n < 2) throw std::invalid_argument("bound check needs at least two nodes");

  const SolverReport sum_opt =
      solve_ews(topology, std::vector<double>(n, 1.0), config);
  if (!sum_opt.converged) {
    throw ConvergenceError("sum-optimal solve did not converge during bound check");
  }
  const SolverReport min_max = solve_mm(topology, config);
  if (!min_max.converged) {
    throw ConvergenceError("min-max solve did not converge during bound check");
  }

  const double nn = static_cast<double>(n);
  BoundReport report;
  report.lower =
      std::accumulate(sum_opt.aoi.values.begin(), sum_opt.aoi.values.end(), 0.0) /
      (nn * nn);
  report.mid =
      *std::max_element(min_max.aoi.values.begin(), min_max.aoi.values.end()) / nn;
  report.finite_n_upper = finite_n_upper_bound(n);
  report.upper = kHalfE;
  report.lower_ok = report.lower >= 1.0 - kBoundTol;
  report.order_ok = report.lower <= report.mid + kBoundTol;
  report.upper_ok = report.mid <= report.finite_n_upper * (1.0 + kBoundSlack);
  report.satisfied = report.lower_ok && report.order_ok && report.upper_ok;
  return report;
}

ConvexityReport convexity_probe(const Topology& topology, int trials,
                                std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::size_t n = topology.size();
  SplitRng rng(seed, 0);

  ConvexityReport report;
  report.trials = trials;

  Policy p1, p2, mix;
  p1.probs.resize(n);
  p2.probs.resize(n);
  mix.probs.resize(n);

  for (int t = 0; t < trials; ++t) {
    for (double& x : p1.probs) x = rng.next_unit();
    for (double& x : p2.probs) x = rng.next_unit();
    const double lam = rng.next_unit();
    for (std::size_t i = 0; i < n; ++i) {
      mix.probs[i] = lam * p1.probs[i] + (1.0 - lam) * p2.probs[i];
    }

    const AoiVector h1 = expected_aoi(topology, p1);
    const AoiVector h2 = expected_aoi(topology, p2);
    const AoiVector hm = expected_aoi(topology, mix);

    for (std::size_t i = 0; i < n; ++i) {
      // lam can be exactly 0; avoid 0 * inf when an endpoint age is infinite.
      const double rhs =
          lam == 0.0 ? h2.values[i]
                     : lam * h1.values[i] + (1.0 - lam) * h2.values[i];
      const double lhs = hm.values[i];
      if (std::isfinite(rhs) && lhs > rhs * (1.0 + kConvexityRelTol)) {
        ++report.violations;
        if (report.witnesses.size() < kMaxStoredWitnesses) {
          report.witnesses.push_back(
              {t, i, lam, p1.probs, p2.probs, lhs, rhs});
        }
      }
    }
  }
  return report;
}

std::vector<BoundaryPoint> trace_pareto_boundary(
    const Topology& topology, const std::vector<std::vector<double>>& weight_grid,
    const SolverConfig& config) {
  std::vector<BoundaryPoint> points;
  points.reserve(weight_grid.size());
  for (const auto& weights : weight_grid) {
    const SolverReport rep = pareto_point(topology, weights, config);
    points.push_back({weights, rep.policy, rep.aoi, rep.converged});
  }
  return points;
}

ZpfMoments zpf_statistics(double r) {
  if (!(r > 0.0) || !(r <= 1.0) || !std::isfinite(r)) {
    throw std::invalid_argument("radius must lie in (0, 1]");
  }
  const double r2 = r * r;
  const double tail = r2 * std::log1p(1.0 / r2);
  ZpfMoments m;
  m.mu = 1.0 - tail;
  m.sigma_sq = 1.0 - 1.0 / (1.0 + r2) - tail * tail;
  return m;
}

double ZpfSample::mean() const { return mean_of(z_values); }
double ZpfSample::variance() const { return variance_of(z_values); }

ZpfSample sample_zpf(std::size_t n, double r_probe, int samples,
                     std::uint64_t seed) {
  check_probe_args(n, r_probe, samples);
  const std::vector<double> ones(n, 1.0);

  ZpfSample out;
  out.r_probe = r_probe;
  out.n = n;
  out.z_values.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    try {
      const Topology topo(probe_radii(n, r_probe, seed, static_cast<std::uint64_t>(s)));
      const double p = pareto_coordinate(topo, ones, 0);
      if (p >= 1.0) ++out.clamped;
      out.z_values.push_back(1.0 / p);
    } catch (const std::exception&) {
      ++out.failures;
    }
  }
  return out;
}

TaConvergenceReport ta_convergence_experiment(const std::vector<std::size_t>& sizes,
                                              int samples, std::uint64_t seed,
                                              double probe_radius) {
  if (sizes.size() < 2) {
    throw std::invalid_argument("need at least two network sizes for a slope");
  }
  for (std::size_t n : sizes) {
    if (n < 10) throw std::invalid_argument("each network size must be >= 10");
  }
  check_probe_args(sizes.front(), probe_radius, samples);

  TaConvergenceReport report;
  report.probe_radius = probe_radius;
  report.rows.reserve(sizes.size());

  for (std::size_t si = 0; si < sizes.size(); ++si) {
    const std::size_t n = sizes[si];
    const double p_ta = solve_ta(n, probe_radius);
    const std::vector<double> ones(n, 1.0);

    TaConvergenceRow row;
    row.n = n;
    std::vector<double> devs, zs;
    devs.reserve(static_cast<std::size_t>(samples));
    zs.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
      const std::uint64_t stream =
          static_cast<std::uint64_t>(si) * static_cast<std::uint64_t>(samples) +
          static_cast<std::uint64_t>(s);
      try {
        const Topology topo(probe_radii(n, probe_radius, seed, stream));
        const double p_pf = pareto_coordinate(topo, ones, 0);
        if (p_pf >= 1.0) ++row.clamped;
        devs.push_back(std::abs(p_pf - p_ta));
        zs.push_back(1.0 / p_pf);
      } catch (const std::exception&) {
        ++row.failures;
      }
    }
    row.samples = static_cast<int>(devs.size());
    std::sort(devs.begin(), devs.end());
    row.median_abs_dev = sorted_median(devs);
    row.p95_abs_dev = sorted_quantile(devs, 0.95);
    row.mean_z = mean_of(zs);
    row.var_z = variance_of(zs);
    report.rows.push_back(std::move(row));
  }

  // least-squares slope of log(median deviation) against log(n)
  std::vector<double> xs, ys;
  for (const auto& row : report.rows) {
    if (row.median_abs_dev > 0.0) {
      xs.push_back(std::log(static_cast<double>(row.n)));
      ys.push_back(std::log(row.median_abs_dev));
    }
  }
  if (xs.size() >= 2) {
    const double xbar = mean_of(xs), ybar = mean_of(ys);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sxy += (xs[k] - xbar) * (ys[k] - ybar);
      sxx += (xs[k] - xbar) * (xs[k] - xbar);
    }
    report.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  }
  return report;
}

}  // namespace aoi
