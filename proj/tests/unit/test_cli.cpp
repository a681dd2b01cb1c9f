// End-to-end checks of the command line binary. The test runner exports
// AOI_CLI_BIN with the built executable's path.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "aoi/experiments.hpp"
#include "aoi/topology.hpp"
#include "doctest.h"
#include "json.hpp"

#ifdef _WIN32
#error "the cli tests assume a posix shell"
#endif
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string cli_bin() {
  const char* bin = std::getenv("AOI_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "AOI_CLI_BIN must point at the built binary");
  return bin;
}

int run_cli(const std::string& args) {
  const std::string cmd = cli_bin() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("aoi_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("") == 2);
  CHECK(run_cli("--definitely-not-a-flag") == 2);
  CHECK(run_cli("solve --no-such-option 3") == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("solve --help") == 0);
}

TEST_CASE("solve on a topology file writes the fair policy") {
  const fs::path dir = fresh_dir("solve");
  const fs::path topo = dir / "topology.json";
  aoi::save_topology(aoi::symmetric_topology(10, 1.0), topo.string());
  const fs::path out = dir / "out";

  CHECK(run_cli("solve --topology " + topo.string() + " --policy pf --out " +
                out.string()) == 0);
  const auto report = nlohmann::json::parse(slurp(out / "report.json"));
  REQUIRE(report.at("policy").size() == 10);
  for (const auto& p : report.at("policy")) {
    CHECK(p.get<double>() == doctest::Approx(0.2).epsilon(1e-9));
  }
  CHECK(fs::exists(out / "manifest.json"));
}

TEST_CASE("a zero-slot horizon is rejected as usage") {
  const fs::path dir = fresh_dir("zero_horizon");
  CHECK(run_cli("simulate --nodes 4 --horizon 0 --out " +
                (dir / "out").string()) == 2);
}

TEST_CASE("a missing topology file is an io error") {
  const fs::path dir = fresh_dir("missing");
  CHECK(run_cli("solve --topology " + (dir / "nope.json").string() + " --out " +
                (dir / "out").string()) == 4);
}

TEST_CASE("malformed configs are usage errors") {
  const fs::path dir = fresh_dir("badcfg");
  const fs::path cfg = dir / "config.json";
  std::ofstream(cfg) << "{ this is not json";
  CHECK(run_cli("solve --config " + cfg.string()) == 2);

  std::ofstream(cfg, std::ios::trunc) << R"({"command": "solve", "bogus_key": 1})";
  CHECK(run_cli("solve --config " + cfg.string()) == 2);
}

TEST_CASE("solver that cannot converge exits with 3") {
  const fs::path dir = fresh_dir("noconv");
  const fs::path cfg = dir / "config.json";
  nlohmann::json doc = {
      {"command", "solve"},
      {"topology_source", {{"kind", "disk"}, {"n", 8}}},
      {"policy_kind", "ews"},
      {"output_dir", (dir / "out").string()},
      {"solver", {{"max_sweeps", 1}}},
  };
  std::ofstream(cfg) << doc.dump(2);
  CHECK(run_cli("solve --config " + cfg.string()) == 3);
}

TEST_CASE("figure outputs are reproducible across processes") {
  const fs::path dir = fresh_dir("fig3_repro");
  nlohmann::json doc = {
      {"command", "figure3"},
      {"topology_source", {{"kind", "disk"}}},
      {"sizes", {5, 8}},
      {"samples", 4},
      {"seed", 7},
  };
  const fs::path cfg = dir / "config.json";
  std::ofstream(cfg) << doc.dump(2);

  const fs::path out_a = dir / "a";
  const fs::path out_b = dir / "b";
  CHECK(run_cli("figure3 --config " + cfg.string() + " --out " + out_a.string()) == 0);
  CHECK(run_cli("figure3 --config " + cfg.string() + " --out " + out_b.string()) == 0);
  CHECK(aoi::hash_file((out_a / "fig3.csv").string()) ==
        aoi::hash_file((out_b / "fig3.csv").string()));
}

TEST_CASE("artifact paths land on stdout") {
  const fs::path dir = fresh_dir("stdout");
  const fs::path out = dir / "out";
  const std::string cmd = cli_bin() + " bounds --nodes 8 --out " + out.string() +
                          " > " + (dir / "stdout.txt").string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 0);
  const std::string printed = slurp(dir / "stdout.txt");
  CHECK(printed.find("bounds.json") != std::string::npos);
  CHECK(printed.find("manifest.json") != std::string::npos);
}
