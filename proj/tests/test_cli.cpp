#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

// End-to-end tests driving the installed binary. The path comes from CMake.
#ifndef GAUDINLAB_CLI
#error "GAUDINLAB_CLI must point at the gaudinlab executable"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() /
          ("gaudinlab-cli-" + std::to_string(::getpid()) + "-" +
           std::to_string(next()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  static int next() {
    static int c = 0;
    return c++;
  }
  fs::path file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p;
  }
  fs::path path(const std::string& name) const { return dir / name; }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const Workspace& ws, const std::string& args) {
  fs::path log = ws.dir / ("log-" + std::to_string(Workspace::next()) + ".txt");
  std::string cmd = std::string(GAUDINLAB_CLI) + " " + args + " > " +
                    log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = slurp(log);
  return r;
}

const char* kTwoSiteConfig = R"({
  "algebra": {"type": "A", "rank": 1, "form": "normalized"},
  "weights": [[1], [1]],
  "z": ["1", "2"],
  "mode": "periodic"
})";

}  // namespace

TEST_CASE("rep build prints the dimension and caches the module") {
  Workspace ws;
  std::string common =
      "rep build A 1 --weight 2 --cache-dir " + ws.path("cache").string();
  auto cold = run_cli(ws, common);
  CHECK(cold.exit_code == 0);
  CHECK(cold.output.find("dim 3") != std::string::npos);
  CHECK(cold.output.find("[cache hit]") == std::string::npos);
  CHECK(fs::exists(ws.path("cache") / "A1" / "killing" / "2.json"));
  auto warm = run_cli(ws, common);
  CHECK(warm.exit_code == 0);
  CHECK(warm.output.find("[cache hit]") != std::string::npos);
}

TEST_CASE("rep build rejects bad input") {
  Workspace ws;
  CHECK(run_cli(ws, "rep build A 2 --weight 1").exit_code == 2);   // rank mismatch
  CHECK(run_cli(ws, "rep build X 1 --weight 1").exit_code == 2);   // unknown type
  CHECK(run_cli(ws, "rep build A 1 --weight -1").exit_code == 2);  // not dominant
}

TEST_CASE("gaudin run: pass, artifacts, and byte-identical rerun") {
  Workspace ws;
  fs::path cfg = ws.file("cfg.json", kTwoSiteConfig);
  fs::path out = ws.path("verdict.json");
  std::string args = "gaudin run " + cfg.string() + " --out " + out.string() +
                     " --cache-dir " + ws.path("cache").string();
  auto first = run_cli(ws, args);
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("PASS") != std::string::npos);
  REQUIRE(fs::exists(out));
  std::string verdict1 = slurp(out);
  auto vj = nlohmann::json::parse(verdict1);
  CHECK(vj.at("pass").get<bool>());
  CHECK(vj.at("perfectly_integrable").get<bool>());
  CHECK(vj.at("dims").at("M").get<int>() == 2);
  CHECK(vj.at("seed").get<std::uint64_t>() == 0);

  fs::path manifest = ws.path("verdict.json.manifest.json");
  REQUIRE(fs::exists(manifest));
  auto mj = nlohmann::json::parse(slurp(manifest));
  CHECK(mj.at("config_digest").get<std::string>() ==
        vj.at("config_digest").get<std::string>());
  // both sites carry the same weight, so one build then one hit
  CHECK(mj.at("cache_misses").size() == 1);
  CHECK(mj.at("cache_hits").size() == 1);

  auto second = run_cli(ws, args);
  CHECK(second.exit_code == 0);
  CHECK(slurp(out) == verdict1);  // determinism: byte-identical artifact
  auto mj2 = nlohmann::json::parse(slurp(manifest));
  CHECK(mj2.at("cache_hits").size() == 2);  // warm cache on rerun
}

TEST_CASE("gaudin run --json prints the verdict document") {
  Workspace ws;
  fs::path cfg = ws.file("cfg.json", kTwoSiteConfig);
  auto r = run_cli(ws, "gaudin run " + cfg.string() + " --json --out " +
                           ws.path("v.json").string() + " --cache-dir " +
                           ws.path("cache").string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("pass").get<bool>());
}

TEST_CASE("gaudin run: coincident points are a config error") {
  Workspace ws;
  fs::path cfg = ws.file("bad.json", R"({
    "algebra": {"type": "A", "rank": 1, "form": "killing"},
    "weights": [[1], [1]],
    "z": ["1", "1"],
    "mode": "periodic"
  })");
  auto r = run_cli(ws, "gaudin run " + cfg.string() + " --out " +
                           ws.path("v.json").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("z") != std::string::npos);
}

TEST_CASE("gaudin run: regular mode rejects a singular twist with a witness") {
  Workspace ws;
  fs::path cfg = ws.file("sing.json", R"({
    "algebra": {"type": "A", "rank": 1, "form": "killing"},
    "weights": [[1], [1]],
    "z": ["1", "2"],
    "mu": {"h": ["0"]},
    "mode": "regular"
  })");
  auto r = run_cli(ws, "gaudin run " + cfg.string() + " --out " +
                           ws.path("v.json").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("mu.h") != std::string::npos);
  CHECK(r.output.find("alpha_1") != std::string::npos);
}

TEST_CASE("gaudin run: dimension cap exits with the resource code") {
  Workspace ws;
  fs::path cfg = ws.file("cfg.json", kTwoSiteConfig);
  auto r = run_cli(ws, "gaudin run " + cfg.string() + " --dim-cap 1 --out " +
                           ws.path("v.json").string() + " --cache-dir " +
                           ws.path("cache").string());
  CHECK(r.exit_code == 3);
}

TEST_CASE("counterexample subcommand") {
  Workspace ws;
  auto plain = run_cli(ws, "counterexample");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output.find("PASS") != std::string::npos);
  auto json = run_cli(ws, "counterexample --json");
  CHECK(json.exit_code == 0);
  auto j = nlohmann::json::parse(json.output);
  CHECK(j.at("pass").get<bool>());
  auto explain = run_cli(ws, "counterexample --explain");
  CHECK(explain.exit_code == 0);
  CHECK(explain.output.find("determinant") != std::string::npos);
}

TEST_CASE("gaudin sweep over an evaluation point") {
  Workspace ws;
  fs::path cfg = ws.file("cfg.json", kTwoSiteConfig);
  fs::path out = ws.path("sweep.csv");
  auto r = run_cli(ws, "gaudin sweep " + cfg.string() +
                           " --vary z2 --grid 3,4,5,6 --out " + out.string() +
                           " --cache-dir " + ws.path("cache").string());
  CHECK(r.exit_code == 0);
  std::string csv = slurp(out);
  CHECK(csv.rfind("index,vary,value,", 0) == 0);
  std::size_t pass_rows = 0, lines = 0;
  std::stringstream ss(csv);
  std::string line;
  while (std::getline(ss, line)) {
    ++lines;
    // data rows for passing verdicts end with ",pass," (empty note column)
    if (line.size() >= 6 && line.compare(line.size() - 6, 6, ",pass,") == 0)
      ++pass_rows;
  }
  CHECK(lines == 5);  // header + 4 grid rows
  CHECK(pass_rows == 4);
}

TEST_CASE("gaudin sweep skips grid collisions") {
  Workspace ws;
  fs::path cfg = ws.file("cfg.json", kTwoSiteConfig);
  auto r = run_cli(ws, "gaudin sweep " + cfg.string() +
                           " --vary z2 --grid 1,0,3 --cache-dir " +
                           ws.path("cache").string());
  CHECK(r.exit_code == 0);  // only skipped rows, no failures
  CHECK(r.output.find("skipped") != std::string::npos);
  std::size_t skipped = 0;
  std::stringstream ss(r.output);
  std::string line;
  while (std::getline(ss, line))
    if (line.find("skipped") != std::string::npos) ++skipped;
  CHECK(skipped == 2);  // z2 = z1 collision and z2 = 0
}

TEST_CASE("gaudin sweep without --vary is a config error") {
  Workspace ws;
  fs::path cfg = ws.file("cfg.json", kTwoSiteConfig);
  CHECK(run_cli(ws, "gaudin sweep " + cfg.string()).exit_code == 2);
  CHECK(run_cli(ws, "gaudin sweep " + cfg.string() + " --vary z9 --grid 1")
            .exit_code == 2);
}

TEST_CASE("missing config file is a config error") {
  Workspace ws;
  CHECK(run_cli(ws, "gaudin run " + ws.path("nope.json").string()).exit_code == 2);
}
