#include "aoi/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aoi/analysis.hpp"
#include "aoi/channel.hpp"
#include "aoi/errors.hpp"
#include "json.hpp"

namespace aoi {

namespace {

using nlohmann::json;

const std::set<std::string> kCommands = {"solve",   "simulate", "bounds",
                                         "figure3", "figure4",  "figure5",
                                         "pareto",  "ta-convergence"};
const std::set<std::string> kPolicyKinds = {"ews", "mm", "pf", "ta", "aloha"};

void ensure_keys(const json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw std::invalid_argument("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

struct Artifact {
  std::string name;
  std::uint64_t hash;
};

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Writes bytes into output_dir/name and records the artifact hash.
void write_artifact(const std::string& output_dir, const std::string& name,
                    const std::string& content, std::vector<Artifact>& artifacts) {
  const std::string path = output_dir + "/" + name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path);
  artifacts.push_back({name, fnv1a64(content)});
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

SolverReport analytic_report(const Topology& topology, Policy policy) {
  SolverReport rep;
  rep.policy = std::move(policy);
  rep.aoi = expected_aoi(topology, rep.policy);
  rep.converged = true;
  return rep;
}

SolverReport solve_for_kind(const std::string& kind, const Topology& topology,
                            const ExperimentSpec& spec) {
  SolverReport rep;
  if (kind == "ews") {
    const auto alpha = spec.weights.empty()
                           ? std::vector<double>(topology.size(), 1.0)
                           : spec.weights;
    rep = solve_ews(topology, alpha, spec.solver);
  } else if (kind == "mm") {
    rep = solve_mm(topology, spec.solver);
  } else if (kind == "pf") {
    rep = solve_pf(topology, spec.solver);
  } else if (kind == "ta") {
    return analytic_report(topology, ta_policy(topology));
  } else if (kind == "aloha") {
    return analytic_report(topology, baseline_aloha(topology.size(), spec.aloha_p));
  } else {
    throw std::invalid_argument("unknown policy kind: " + kind);
  }
  if (!rep.converged) {
    throw ConvergenceError(kind + " solver did not converge (residual " +
                           std::to_string(rep.residual) + " after " +
                           std::to_string(rep.sweeps) + " sweeps)");
  }
  return rep;
}

Topology resolve_topology(const ExperimentSpec& spec) {
  const TopologySource& src = spec.topology_source;
  if (src.kind == "file") return load_topology(src.path);
  if (src.kind == "disk") {
    return sample_uniform_disk(src.n, spec.seed, src.beta, src.theta);
  }
  if (src.kind == "symmetric") {
    return symmetric_topology(src.n, src.radius, src.beta, src.theta);
  }
  throw std::invalid_argument("unknown topology source kind: " + src.kind);
}

std::string topology_artifact(const Topology& topology) {
  return topology_to_json(topology) + "\n";
}

// ---- command bodies ------------------------------------------------------

void run_solve(const ExperimentSpec& spec, std::vector<Artifact>& artifacts) {
  const Topology topology = resolve_topology(spec);
  const SolverReport report = solve_for_kind(spec.policy_kind, topology, spec);
  write_artifact(spec.output_dir, "topology.json", topology_artifact(topology),
                 artifacts);
  write_artifact(spec.output_dir, "report.json", report_to_json(report) + "\n",
                 artifacts);
}

void run_simulate(const ExperimentSpec& spec, std::vector<Artifact>& artifacts) {
  const Topology topology = resolve_topology(spec);
  const SolverReport report = solve_for_kind(spec.policy_kind, topology, spec);

  SimConfig cfg = spec.sim;
  cfg.seed = spec.seed;
  const SimResult sim = run(topology, report.policy, cfg);
  const std::vector<double> tau = success_probabilities(topology, report.policy);
  const AoiVector aoi = expected_aoi(topology, report.policy);

  std::string csv =
      "node_id,r,p,tau_analytic,tau_hat,aoi_analytic,aoi_hat,ci_tau,ci_aoi\n";
  for (std::size_t i = 0; i < topology.size(); ++i) {
    csv += csv_row({std::to_string(i), format_sig(topology.distance(i)),
                    format_sig(report.policy.probs[i]), format_sig(tau[i]),
                    format_sig(sim.tau_hat[i]), format_sig(aoi.values[i]),
                    format_sig(sim.aoi_hat[i]), format_sig(sim.ci_tau[i]),
                    format_sig(sim.ci_aoi[i])});
  }

  write_artifact(spec.output_dir, "topology.json", topology_artifact(topology),
                 artifacts);
  write_artifact(spec.output_dir, "report.json", report_to_json(report) + "\n",
                 artifacts);
  write_artifact(spec.output_dir, "sim.csv", csv, artifacts);
}

void run_bounds(const ExperimentSpec& spec, std::vector<Artifact>& artifacts) {
  const Topology topology = resolve_topology(spec);
  const BoundReport report = check_bounds(topology, spec.solver);

  json doc;
  doc["lower"] = report.lower;
  doc["mid"] = report.mid;
  doc["finite_n_upper"] = report.finite_n_upper;
  doc["upper"] = report.upper;
  doc["lower_ok"] = report.lower_ok;
  doc["order_ok"] = report.order_ok;
  doc["upper_ok"] = report.upper_ok;
  doc["satisfied"] = report.satisfied;

  write_artifact(spec.output_dir, "topology.json", topology_artifact(topology),
                 artifacts);
  write_artifact(spec.output_dir, "bounds.json", doc.dump(2) + "\n", artifacts);
}

void run_figure3(const ExperimentSpec& spec, std::vector<Artifact>& artifacts) {
  if (spec.topology_source.kind != "disk") {
    throw std::invalid_argument("figure3 averages over disk samples; "
                                "topology_source.kind must be \"disk\"");
  }
  std::vector<std::size_t> sizes = spec.sizes;
  if (sizes.empty()) sizes = {10, 25, 50, 100};
  for (std::size_t n : sizes) {
    if (n < 2) throw std::invalid_argument("figure3 sizes must be >= 2");
  }
  const auto n_sizes = sizes.size();
  const std::size_t max_n = *std::max_element(sizes.begin(), sizes.end());
  const auto samples = static_cast<std::size_t>(spec.samples);

  // per sample, per size: network-average normalized AoI for ews/mm/pf/ta
  std::vector<std::vector<std::array<double, 4>>> cell(
      samples, std::vector<std::array<double, 4>>(n_sizes));

  parallel_for(samples, spec.threads, [&](std::size_t s) {
    const std::vector<double> all_radii =
        sample_disk_radii(max_n, spec.seed, static_cast<std::uint64_t>(s));
    for (std::size_t k = 0; k < n_sizes; ++k) {
      const std::size_t n = sizes[k];
      const Topology topo(
          std::vector<double>(all_radii.begin(), all_radii.begin() + n),
          spec.topology_source.beta, spec.topology_source.theta);
      const char* kinds[4] = {"ews", "mm", "pf", "ta"};
      for (int q = 0; q < 4; ++q) {
        const SolverReport rep = solve_for_kind(kinds[q], topo, spec);
        const double sum_h = std::accumulate(rep.aoi.values.begin(),
                                             rep.aoi.values.end(), 0.0);
        cell[s][k][q] = sum_h / (static_cast<double>(n) * static_cast<double>(n));
      }
    }
  });

  std::string csv = "n,ews,mm,pf,ta,ub_finite_n,ub_limit\n";
  for (std::size_t k = 0; k < n_sizes; ++k) {
    std::array<double, 4> mean = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t s = 0; s < samples; ++s) {
      for (int q = 0; q < 4; ++q) mean[q] += cell[s][k][q];
    }
    for (int q = 0; q < 4; ++q) mean[q] /= static_cast<double>(samples);
    csv += csv_row({std::to_string(sizes[k]), format_sig(mean[0]),
                    format_sig(mean[1]), format_sig(mean[2]), format_sig(mean[3]),
                    format_sig(finite_n_upper_bound(sizes[k])),
                    format_sig(kHalfE)});
  }
  write_artifact(spec.output_dir, "fig3.csv", csv, artifacts);
}

// Shared scaffolding for figure4 (mean transmit probability per radius
// bucket) and figure5 (mean normalized AoI per radius bucket, with the
// uniform-ALOHA baseline added).
void run_radius_profile(const ExperimentSpec& spec, bool aoi_metric,
                        std::vector<Artifact>& artifacts) {
  if (spec.topology_source.kind != "disk") {
    throw std::invalid_argument("figure4/figure5 average over disk samples; "
                                "topology_source.kind must be \"disk\"");
  }
  const std::size_t n = spec.topology_source.n;
  const auto buckets = static_cast<std::size_t>(spec.buckets);
  const auto samples = static_cast<std::size_t>(spec.samples);
  const std::size_t n_policies = aoi_metric ? 5 : 4;
  const char* kinds[5] = {"ews", "mm", "pf", "ta", "aloha"};

  struct Accum {
    std::vector<double> sums;           // buckets x policies
    std::vector<std::int64_t> counts;   // per bucket
  };
  std::vector<Accum> acc(samples);

  parallel_for(samples, spec.threads, [&](std::size_t s) {
    const Topology topo = sample_uniform_disk(n, spec.seed,
                                              spec.topology_source.beta,
                                              spec.topology_source.theta,
                                              static_cast<std::uint64_t>(s));
    Accum& a = acc[s];
    a.sums.assign(buckets * n_policies, 0.0);
    a.counts.assign(buckets, 0);
    for (std::size_t q = 0; q < n_policies; ++q) {
      const SolverReport rep = solve_for_kind(kinds[q], topo, spec);
      for (std::size_t i = 0; i < n; ++i) {
        const double r = topo.distance(i);
        auto b = static_cast<std::size_t>(r * static_cast<double>(buckets));
        if (b >= buckets) b = buckets - 1;
        const double value = aoi_metric
                                 ? rep.aoi.values[i] / static_cast<double>(n)
                                 : rep.policy.probs[i];
        a.sums[b * n_policies + q] += value;
        if (q == 0) ++a.counts[b];
      }
    }
  });

  std::string csv = aoi_metric ? "r_lo,r_hi,count,ews,mm,pf,ta,aloha\n"
                               : "r_lo,r_hi,count,ews,mm,pf,ta\n";
  for (std::size_t b = 0; b < buckets; ++b) {
    std::int64_t count = 0;
    std::vector<double> sums(n_policies, 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
      count += acc[s].counts[b];
      for (std::size_t q = 0; q < n_policies; ++q) {
        sums[q] += acc[s].sums[b * n_policies + q];
      }
    }
    std::vector<std::string> cells = {
        format_sig(static_cast<double>(b) / static_cast<double>(buckets)),
        format_sig(static_cast<double>(b + 1) / static_cast<double>(buckets)),
        std::to_string(count)};
    for (std::size_t q = 0; q < n_policies; ++q) {
      cells.push_back(format_sig(count > 0 ? sums[q] / static_cast<double>(count)
                                           : 0.0));
    }
    csv += csv_row(cells);
  }
  write_artifact(spec.output_dir, aoi_metric ? "fig5.csv" : "fig4.csv", csv,
                 artifacts);
}

void run_pareto(const ExperimentSpec& spec, std::vector<Artifact>& artifacts) {
  const Topology topology = resolve_topology(spec);
  if (topology.size() != 2) {
    throw std::invalid_argument("pareto sweep expects a two-node topology");
  }
  // weight ratios log-spaced over [1e-3, 1e3]
  std::vector<std::vector<double>> grid;
  const int points = 61;
  for (int k = 0; k < points; ++k) {
    const double expo = -3.0 + 6.0 * static_cast<double>(k) /
                                   static_cast<double>(points - 1);
    grid.push_back({std::pow(10.0, expo), 1.0});
  }
  const auto trace = trace_pareto_boundary(topology, grid, spec.solver);

  std::string csv = "lambda1,lambda2,p1,p2,h1,h2,converged\n";
  for (const auto& pt : trace) {
    csv += csv_row({format_sig(pt.weights[0]), format_sig(pt.weights[1]),
                    format_sig(pt.policy.probs[0]), format_sig(pt.policy.probs[1]),
                    format_sig(pt.aoi.values[0]), format_sig(pt.aoi.values[1]),
                    pt.converged ? "1" : "0"});
  }
  write_artifact(spec.output_dir, "pareto.csv", csv, artifacts);
}

void run_ta_convergence(const ExperimentSpec& spec,
                        std::vector<Artifact>& artifacts) {
  std::vector<std::size_t> sizes = spec.sizes;
  if (sizes.empty()) sizes = {25, 50, 100, 200, 400};
  const double probe_radius = spec.topology_source.radius;
  const TaConvergenceReport report =
      ta_convergence_experiment(sizes, spec.samples, spec.seed, probe_radius);

  std::string csv =
      "n,samples,median_abs_dev,p95_abs_dev,mean_z,var_z,clamped,failures\n";
  json rows = json::array();
  for (const auto& row : report.rows) {
    csv += csv_row({std::to_string(row.n), std::to_string(row.samples),
                    format_sig(row.median_abs_dev), format_sig(row.p95_abs_dev),
                    format_sig(row.mean_z), format_sig(row.var_z),
                    std::to_string(row.clamped), std::to_string(row.failures)});
    rows.push_back({{"n", row.n},
                    {"samples", row.samples},
                    {"median_abs_dev", row.median_abs_dev},
                    {"p95_abs_dev", row.p95_abs_dev},
                    {"mean_z", row.mean_z},
                    {"var_z", row.var_z},
                    {"clamped", row.clamped},
                    {"failures", row.failures}});
  }
  json doc;
  doc["probe_radius"] = report.probe_radius;
  doc["slope"] = report.slope;
  doc["rows"] = rows;

  write_artifact(spec.output_dir, "ta_convergence.csv", csv, artifacts);
  write_artifact(spec.output_dir, "ta_convergence.json", doc.dump(2) + "\n",
                 artifacts);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for hashing: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

std::string format_sig(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

void ExperimentSpec::validate() const {
  if (!kCommands.count(command)) {
    throw std::invalid_argument("unknown command: \"" + command + "\"");
  }
  const std::string& kind = topology_source.kind;
  if (kind != "file" && kind != "disk" && kind != "symmetric") {
    throw std::invalid_argument("topology_source.kind must be file, disk, or symmetric");
  }
  if (kind == "file" && topology_source.path.empty()) {
    throw std::invalid_argument("topology_source.path required for kind \"file\"");
  }
  if (kind != "file" && topology_source.n == 0) {
    throw std::invalid_argument("topology_source.n must be >= 1");
  }
  if (!kPolicyKinds.count(policy_kind)) {
    throw std::invalid_argument("unknown policy kind: \"" + policy_kind + "\"");
  }
  if ((command == "figure3" || command == "figure4" || command == "figure5") &&
      kind != "disk") {
    throw std::invalid_argument(command + " averages over sampled disk topologies; "
                                "topology_source.kind must be \"disk\"");
  }
  if (output_dir.empty()) throw std::invalid_argument("output_dir must be set");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (buckets < 1) throw std::invalid_argument("buckets must be >= 1");
  if (aloha_p >= 0.0 && aloha_p > 1.0) {
    throw std::invalid_argument("aloha_p must lie in [0, 1]");
  }
  sim.validate();
  solver.validate();
}

ExperimentSpec spec_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed config JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

  ExperimentSpec spec;
  try {
    ensure_keys(doc,
                {"command", "topology_source", "policy_kind", "sim", "output_dir",
                 "seed", "threads", "sizes", "samples", "buckets", "aloha_p",
                 "weights", "solver"},
                "config");
    spec.command = doc.value("command", std::string{});
    if (doc.contains("topology_source")) {
      const json& src = doc.at("topology_source");
      ensure_keys(src, {"kind", "path", "n", "radius", "beta", "theta"},
                  "topology_source");
      spec.topology_source.kind = src.value("kind", spec.topology_source.kind);
      spec.topology_source.path = src.value("path", spec.topology_source.path);
      spec.topology_source.n = src.value("n", spec.topology_source.n);
      spec.topology_source.radius = src.value("radius", spec.topology_source.radius);
      spec.topology_source.beta = src.value("beta", spec.topology_source.beta);
      spec.topology_source.theta = src.value("theta", spec.topology_source.theta);
    }
    spec.policy_kind = doc.value("policy_kind", spec.policy_kind);
    if (doc.contains("sim")) {
      const json& sim = doc.at("sim");
      ensure_keys(sim, {"horizon", "replications", "record_paths"}, "sim");
      spec.sim.horizon = sim.value("horizon", spec.sim.horizon);
      spec.sim.replications = sim.value("replications", spec.sim.replications);
      spec.sim.record_paths = sim.value("record_paths", spec.sim.record_paths);
    }
    spec.output_dir = doc.value("output_dir", spec.output_dir);
    spec.seed = doc.value("seed", spec.seed);
    spec.threads = doc.value("threads", spec.threads);
    if (doc.contains("sizes")) {
      spec.sizes = doc.at("sizes").get<std::vector<std::size_t>>();
    }
    spec.samples = doc.value("samples", spec.samples);
    spec.buckets = doc.value("buckets", spec.buckets);
    spec.aloha_p = doc.value("aloha_p", spec.aloha_p);
    if (doc.contains("weights")) {
      spec.weights = doc.at("weights").get<std::vector<double>>();
    }
    if (doc.contains("solver")) {
      const json& solver = doc.at("solver");
      ensure_keys(solver,
                  {"tol_fixed_point", "tol_outer", "max_sweeps", "damping",
                   "mm_step"},
                  "solver");
      spec.solver.tol_fixed_point =
          solver.value("tol_fixed_point", spec.solver.tol_fixed_point);
      spec.solver.tol_outer = solver.value("tol_outer", spec.solver.tol_outer);
      spec.solver.max_sweeps = solver.value("max_sweeps", spec.solver.max_sweeps);
      spec.solver.damping = solver.value("damping", spec.solver.damping);
      spec.solver.mm_step = solver.value("mm_step", spec.solver.mm_step);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  spec.sim.seed = spec.seed;
  return spec;
}

std::string spec_to_json(const ExperimentSpec& spec) {
  json doc;
  doc["command"] = spec.command;
  doc["topology_source"] = {{"kind", spec.topology_source.kind},
                            {"path", spec.topology_source.path},
                            {"n", spec.topology_source.n},
                            {"radius", spec.topology_source.radius},
                            {"beta", spec.topology_source.beta},
                            {"theta", spec.topology_source.theta}};
  doc["policy_kind"] = spec.policy_kind;
  doc["sim"] = {{"horizon", spec.sim.horizon},
                {"replications", spec.sim.replications},
                {"record_paths", spec.sim.record_paths}};
  doc["output_dir"] = spec.output_dir;
  doc["seed"] = spec.seed;
  doc["threads"] = spec.threads;
  doc["sizes"] = spec.sizes;
  doc["samples"] = spec.samples;
  doc["buckets"] = spec.buckets;
  doc["aloha_p"] = spec.aloha_p;
  doc["weights"] = spec.weights;
  doc["solver"] = {{"tol_fixed_point", spec.solver.tol_fixed_point},
                   {"tol_outer", spec.solver.tol_outer},
                   {"max_sweeps", spec.solver.max_sweeps},
                   {"damping", spec.solver.damping},
                   {"mm_step", spec.solver.mm_step}};
  return doc.dump(2);
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const auto body = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<std::string> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();

  std::error_code ec;
  std::filesystem::create_directories(spec.output_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + spec.output_dir);

  std::vector<Artifact> artifacts;
  if (spec.command == "solve") {
    run_solve(spec, artifacts);
  } else if (spec.command == "simulate") {
    run_simulate(spec, artifacts);
  } else if (spec.command == "bounds") {
    run_bounds(spec, artifacts);
  } else if (spec.command == "figure3") {
    run_figure3(spec, artifacts);
  } else if (spec.command == "figure4") {
    run_radius_profile(spec, /*aoi_metric=*/false, artifacts);
  } else if (spec.command == "figure5") {
    run_radius_profile(spec, /*aoi_metric=*/true, artifacts);
  } else if (spec.command == "pareto") {
    run_pareto(spec, artifacts);
  } else {
    run_ta_convergence(spec, artifacts);
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  json manifest;
  manifest["command"] = spec.command;
  manifest["seed"] = spec.seed;
  manifest["version"] = kVersion;
  manifest["wall_time_s"] = wall;
  manifest["spec"] = json::parse(spec_to_json(spec));
  json listed = json::array();
  for (const auto& a : artifacts) {
    listed.push_back({{"file", a.name}, {"fnv1a64", hash_hex(a.hash)}});
  }
  manifest["artifacts"] = listed;

  const std::string manifest_path = spec.output_dir + "/manifest.json";
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + manifest_path);
  out << manifest.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + manifest_path);

  std::vector<std::string> paths;
  paths.reserve(artifacts.size() + 1);
  for (const auto& a : artifacts) paths.push_back(spec.output_dir + "/" + a.name);
  paths.push_back(manifest_path);
  return paths;
}

}  // namespace aoi
