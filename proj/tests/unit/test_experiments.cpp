#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aoi/errors.hpp"
#include "aoi/experiments.hpp"
#include "aoi/topology.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using aoi::ExperimentSpec;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("aoi_test_" + name);
  fs::remove_all(dir);
  return dir;
}

ExperimentSpec tiny_spec(const std::string& command, const std::string& name) {
  ExperimentSpec spec;
  spec.command = command;
  spec.topology_source.kind = "symmetric";
  spec.topology_source.n = 6;
  spec.topology_source.radius = 0.8;
  spec.output_dir = fresh_dir(name).string();
  spec.seed = 11;
  return spec;
}

}  // namespace

TEST_CASE("fnv1a64 known vectors") {
  CHECK(aoi::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(aoi::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(aoi::fnv1a64("hello") == 0xa430d84680aabd0bULL);
}

TEST_CASE("csv float formatting is 9 significant digits") {
  CHECK(aoi::format_sig(0.2) == "0.2");
  CHECK(aoi::format_sig(1.0 / 3.0) == "0.333333333");
  CHECK(aoi::format_sig(1.2905873958565983) == "1.2905874");
  CHECK(aoi::format_sig(0.0) == "0");
  CHECK(aoi::format_sig(12345678912.0) == "1.23456789e+10");
}

TEST_CASE("spec json parsing applies defaults and round trips") {
  const auto spec = aoi::spec_from_json(R"({"command": "solve"})");
  CHECK(spec.command == "solve");
  CHECK(spec.topology_source.kind == "disk");
  CHECK(spec.topology_source.n == 50);
  CHECK(spec.policy_kind == "pf");
  CHECK(spec.seed == 1);
  CHECK(spec.threads == 1);
  CHECK(spec.samples == 100);
  CHECK(spec.buckets == 8);
  CHECK(spec.sim.horizon == 10000);
  CHECK(spec.sim.seed == spec.seed);  // sim inherits the top-level seed

  ExperimentSpec full;
  full.command = "figure4";
  full.topology_source.kind = "disk";
  full.topology_source.n = 17;
  full.policy_kind = "mm";
  full.seed = 99;
  full.threads = 3;
  full.sizes = {10, 20};
  full.samples = 12;
  full.buckets = 4;
  full.aloha_p = 0.05;
  full.weights = {1.0, 2.0};
  full.sim.horizon = 321;
  full.sim.seed = 99;
  const auto reparsed = aoi::spec_from_json(aoi::spec_to_json(full));
  CHECK(reparsed.command == full.command);
  CHECK(reparsed.topology_source.n == 17);
  CHECK(reparsed.policy_kind == "mm");
  CHECK(reparsed.seed == 99);
  CHECK(reparsed.threads == 3);
  CHECK(reparsed.sizes == full.sizes);
  CHECK(reparsed.samples == 12);
  CHECK(reparsed.buckets == 4);
  CHECK(reparsed.aloha_p == 0.05);
  CHECK(reparsed.weights == full.weights);
  CHECK(reparsed.sim.horizon == 321);
  CHECK(reparsed.sim.seed == 99);
}

TEST_CASE("spec json rejects junk") {
  CHECK_THROWS_AS(aoi::spec_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(aoi::spec_from_json(R"({"command": "solve", "tpology": {}})"),
                  std::invalid_argument);  // misspelled key
  CHECK_THROWS_AS(aoi::spec_from_json(R"({"command": "solve", "seed": "abc"})"),
                  std::invalid_argument);  // wrong type
  CHECK_THROWS_AS(
      aoi::spec_from_json(R"({"command": "solve", "sim": {"seed": 4}})"),
      std::invalid_argument);  // seed lives at the top level only
}

TEST_CASE("spec validation") {
  ExperimentSpec spec = tiny_spec("solve", "validate");
  CHECK_NOTHROW(spec.validate());
  spec.command = "unknown";
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec("solve", "validate");
  spec.policy_kind = "magic";
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec("solve", "validate");
  spec.topology_source.kind = "loop";
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec("solve", "validate");
  spec.threads = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec("solve", "validate");
  spec.samples = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec("solve", "validate");
  spec.buckets = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec("figure3", "validate");
  spec.topology_source.kind = "symmetric";
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // figures need a disk
}

TEST_CASE("solve command writes a report and a manifest with true hashes") {
  ExperimentSpec spec = tiny_spec("solve", "solve");
  spec.topology_source.n = 10;
  spec.topology_source.radius = 1.0;
  const auto artifacts = aoi::run_experiment(spec);
  REQUIRE(artifacts.size() == 3);  // topology.json, report.json, manifest.json

  const auto report = nlohmann::json::parse(slurp(artifacts[1]));
  REQUIRE(report.at("policy").size() == 10);
  for (const auto& p : report.at("policy")) {
    CHECK(p.get<double>() == doctest::Approx(0.2).epsilon(1e-9));
  }
  CHECK(report.at("converged").get<bool>());

  const auto manifest = nlohmann::json::parse(slurp(artifacts.back()));
  CHECK(manifest.at("command") == "solve");
  CHECK(manifest.at("version") == aoi::kVersion);
  CHECK(manifest.at("seed") == 11);
  REQUIRE(manifest.at("artifacts").size() == 2);
  for (const auto& entry : manifest.at("artifacts")) {
    const fs::path path = fs::path(spec.output_dir) / entry.at("file").get<std::string>();
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(aoi::hash_file(path.string())));
    CHECK(entry.at("fnv1a64").get<std::string>() == buf);
  }
}

TEST_CASE("simulate command produces a stable csv") {
  ExperimentSpec spec = tiny_spec("simulate", "simulate");
  spec.sim.horizon = 500;
  spec.sim.replications = 2;
  spec.sim.seed = spec.seed;
  const auto artifacts = aoi::run_experiment(spec);

  std::string csv_path;
  for (const auto& a : artifacts) {
    if (a.find("sim.csv") != std::string::npos) csv_path = a;
  }
  REQUIRE_FALSE(csv_path.empty());
  const std::string first = slurp(csv_path);
  std::istringstream lines(first);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "node_id,r,p,tau_analytic,tau_hat,aoi_analytic,aoi_hat,ci_tau,ci_aoi");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 6);

  // reruns must be byte-identical
  fs::remove_all(spec.output_dir);
  aoi::run_experiment(spec);
  CHECK(slurp(csv_path) == first);
}

TEST_CASE("bounds command reports the sandwich") {
  ExperimentSpec spec = tiny_spec("bounds", "bounds");
  spec.topology_source.kind = "disk";
  spec.topology_source.n = 12;
  const auto artifacts = aoi::run_experiment(spec);
  std::string path;
  for (const auto& a : artifacts) {
    if (a.find("bounds.json") != std::string::npos) path = a;
  }
  REQUIRE_FALSE(path.empty());
  const auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.size() == 8);
  CHECK(doc.at("satisfied").get<bool>());
  CHECK(doc.at("lower").get<double>() >= 1.0 - 1e-9);
  CHECK(doc.at("mid").get<double>() <= doc.at("finite_n_upper").get<double>() * 1.01);
}

TEST_CASE("figure3 command emits one row per network size") {
  ExperimentSpec spec = tiny_spec("figure3", "fig3");
  spec.topology_source.kind = "disk";
  spec.sizes = {5, 10};
  spec.samples = 4;
  const auto artifacts = aoi::run_experiment(spec);
  std::string path;
  for (const auto& a : artifacts) {
    if (a.find("fig3.csv") != std::string::npos) path = a;
  }
  REQUIRE_FALSE(path.empty());
  std::istringstream lines(slurp(path));
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,ews,mm,pf,ta,ub_finite_n,ub_limit");
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) rows.push_back(line);
  }
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].substr(0, 2) == "5,");
  CHECK(rows[1].substr(0, 3) == "10,");
}

TEST_CASE("radius profiles bucket every sampled node") {
  for (const std::string cmd : {"figure4", "figure5"}) {
    ExperimentSpec spec = tiny_spec(cmd, cmd);
    spec.topology_source.kind = "disk";
    spec.topology_source.n = 15;
    spec.samples = 6;
    spec.buckets = 5;
    if (cmd == "figure5") {
      spec.sim.horizon = 300;
      spec.sim.replications = 1;
      spec.sim.seed = spec.seed;
    }
    const auto artifacts = aoi::run_experiment(spec);
    std::string path;
    for (const auto& a : artifacts) {
      if (a.find(cmd == "figure4" ? "fig4.csv" : "fig5.csv") != std::string::npos) {
        path = a;
      }
    }
    REQUIRE_FALSE(path.empty());
    std::istringstream lines(slurp(path));
    std::string header;
    std::getline(lines, header);
    if (cmd == "figure4") {
      CHECK(header == "r_lo,r_hi,count,ews,mm,pf,ta");
    } else {
      CHECK(header == "r_lo,r_hi,count,ews,mm,pf,ta,aloha");
    }
    int total = 0;
    int rows = 0;
    for (std::string line; std::getline(lines, line);) {
      if (line.empty()) continue;
      ++rows;
      // count column is the third field
      std::istringstream cells(line);
      std::string cell;
      std::getline(cells, cell, ',');
      std::getline(cells, cell, ',');
      std::getline(cells, cell, ',');
      total += std::stoi(cell);
    }
    CHECK(rows == 5);
    CHECK(total == 15 * 6);
  }
}

TEST_CASE("pareto command traces the two-node frontier") {
  ExperimentSpec spec = tiny_spec("pareto", "pareto");
  spec.topology_source.kind = "symmetric";
  spec.topology_source.n = 2;
  const auto artifacts = aoi::run_experiment(spec);
  std::string path;
  for (const auto& a : artifacts) {
    if (a.find("pareto.csv") != std::string::npos) path = a;
  }
  REQUIRE_FALSE(path.empty());
  std::istringstream lines(slurp(path));
  std::string header;
  std::getline(lines, header);
  CHECK(header == "lambda1,lambda2,p1,p2,h1,h2,converged");
  std::vector<double> h1s;
  for (std::string line; std::getline(lines, line);) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    for (int k = 0; k < 5; ++k) std::getline(cells, cell, ',');
    h1s.push_back(std::stod(cell));
  }
  REQUIRE(h1s.size() == 61);
  for (std::size_t k = 1; k < h1s.size(); ++k) {
    CHECK(h1s[k] <= h1s[k - 1] + 1e-9);  // more weight on node 1 lowers h1
  }

  spec.topology_source.n = 3;
  CHECK_THROWS_AS(aoi::run_experiment(spec), std::invalid_argument);
}

TEST_CASE("ta-convergence command writes rows and a slope") {
  ExperimentSpec spec = tiny_spec("ta-convergence", "tac");
  spec.topology_source.kind = "disk";
  spec.topology_source.radius = 1.0;  // doubles as the probe radius
  spec.sizes = {10, 20};
  spec.samples = 30;
  const auto artifacts = aoi::run_experiment(spec);
  std::string json_path;
  for (const auto& a : artifacts) {
    if (a.find("ta_convergence.json") != std::string::npos) json_path = a;
  }
  REQUIRE_FALSE(json_path.empty());
  const auto doc = nlohmann::json::parse(slurp(json_path));
  CHECK(doc.at("rows").size() == 2);
  CHECK(doc.at("slope").get<double>() < 0.0);
  CHECK(doc.at("probe_radius").get<double>() == 1.0);
}

TEST_CASE("missing topology files surface as io errors") {
  ExperimentSpec spec = tiny_spec("solve", "missing");
  spec.topology_source.kind = "file";
  spec.topology_source.path = "/nonexistent/topology.json";
  CHECK_THROWS_AS(aoi::run_experiment(spec), aoi::IoError);
}

TEST_CASE("parallel for covers the range exactly once and rethrows") {
  std::vector<std::atomic<int>> hits(1000);
  aoi::parallel_for(1000, 4, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);

  CHECK_THROWS_AS(
      aoi::parallel_for(100, 3,
                        [](std::size_t i) {
                          if (i == 57) throw std::runtime_error("boom");
                        }),
      std::runtime_error);

  // serial path
  int count = 0;
  aoi::parallel_for(10, 1, [&](std::size_t) { ++count; });
  CHECK(count == 10);
}

TEST_CASE("thread count does not change figure3 bytes") {
  ExperimentSpec spec = tiny_spec("figure3", "fig3_threads1");
  spec.topology_source.kind = "disk";
  spec.sizes = {5, 8};
  spec.samples = 6;
  spec.threads = 1;
  const auto serial = aoi::run_experiment(spec);
  std::string serial_csv;
  for (const auto& a : serial) {
    if (a.find("fig3.csv") != std::string::npos) serial_csv = slurp(a);
  }

  spec.output_dir = fresh_dir("fig3_threads3").string();
  spec.threads = 3;
  const auto parallel = aoi::run_experiment(spec);
  std::string parallel_csv;
  for (const auto& a : parallel) {
    if (a.find("fig3.csv") != std::string::npos) parallel_csv = slurp(a);
  }
  CHECK_FALSE(serial_csv.empty());
  CHECK(serial_csv == parallel_csv);
}
