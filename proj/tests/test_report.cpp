#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "gaudinlab/report.hpp"
#include "helpers.hpp"

using namespace gaudinlab;
using gaudinlab::testing::make_algebra;

namespace {

GaudinConfig two_site_sl2() {
  return GaudinConfig::from_json_text(R"({
    "algebra": {"type": "A", "rank": 1, "form": "normalized"},
    "weights": [[1], [1]],
    "z": ["1", "2"],
    "mode": "periodic"
  })");
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gaudinlab-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int counter() {
    static int c = 0;
    return c++;
  }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fnv-1a digest is the reference function") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(digest_hex("").size() == 16);
  CHECK(digest_hex("x") != digest_hex("y"));
}

TEST_CASE("cache path layout") {
  CHECK(cache_entry_path("cache", 'A', 2, FormNormalization::kKilling, {1, 0}) ==
        "cache/A2/killing/1-0.json");
  CHECK(cache_entry_path("/tmp/c", 'G', 2, FormNormalization::kNormalized,
                         {0, 1}) == "/tmp/c/G2/normalized/0-1.json");
}

TEST_CASE("cache dir resolution order") {
  CHECK(resolve_cache_dir("explicit") == "explicit");
  ::setenv("GAUDINLAB_CACHE", "/tmp/from-env", 1);
  CHECK(resolve_cache_dir("") == "/tmp/from-env");
  ::unsetenv("GAUDINLAB_CACHE");
  CHECK(resolve_cache_dir("") == "cache");
}

TEST_CASE("cache soundness: hit equals cold build byte for byte") {
  TempDir tmp;
  GaudinConfig cfg = two_site_sl2();
  auto alg = make_algebra('A', 1);
  bool hit = true;
  auto cold = load_or_build_module(alg, cfg, {1}, tmp.path.string(), &hit);
  CHECK_FALSE(hit);
  std::string on_disk =
      slurp(cache_entry_path(tmp.path.string(), 'A', 1, cfg.form, {1}));
  CHECK(on_disk == cold->to_json());
  auto warm = load_or_build_module(alg, cfg, {1}, tmp.path.string(), &hit);
  CHECK(hit);
  CHECK(warm->to_json() == cold->to_json());
  CHECK(digest_hex(warm->to_json()) == digest_hex(on_disk));
}

TEST_CASE("corrupt cache entries are rebuilt") {
  TempDir tmp;
  GaudinConfig cfg = two_site_sl2();
  auto alg = make_algebra('A', 1);
  std::string path = cache_entry_path(tmp.path.string(), 'A', 1, cfg.form, {1});
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  {
    std::ofstream out(path);
    out << "{corrupt";
  }
  bool hit = true;
  auto mod = load_or_build_module(alg, cfg, {1}, tmp.path.string(), &hit);
  CHECK_FALSE(hit);
  CHECK(mod->dim() == 2);
  CHECK(slurp(path) == mod->to_json());
}

TEST_CASE("two-site sl2 verdict: perfectly integrable") {
  VerdictOptions opt;
  Verdict v = perfect_integrability_verdict(two_site_sl2(), opt);
  CHECK(v.pass);
  CHECK(v.perfectly_integrable);
  CHECK(v.dim_V == 4);
  CHECK(v.dim_M == 2);
  CHECK(v.dim_algebra == 2);
  CHECK(v.invariant);
  CHECK(v.residue_consistent);
  CHECK(v.cyclic.found);
  CHECK(v.frobenius.certified);
  CHECK(v.eigen.all_dimension_one);
  CHECK(v.json_text.find("\"config_digest\"") != std::string::npos);
}

TEST_CASE("verdicts are byte-identical across reruns") {
  VerdictOptions opt;
  opt.seed = 17;
  Verdict a = perfect_integrability_verdict(two_site_sl2(), opt);
  Verdict b = perfect_integrability_verdict(two_site_sl2(), opt);
  CHECK(a.json_text == b.json_text);
  opt.seed = 18;
  Verdict c = perfect_integrability_verdict(two_site_sl2(), opt);
  CHECK(c.pass);  // different seed, same structural verdict
}

TEST_CASE("single site with zero weight is trivially perfect") {
  GaudinConfig cfg = GaudinConfig::from_json_text(R"({
    "algebra": {"type": "A", "rank": 1, "form": "killing"},
    "weights": [[0]],
    "z": ["1"],
    "mode": "periodic"
  })");
  Verdict v = perfect_integrability_verdict(cfg, VerdictOptions{});
  CHECK(v.pass);
  CHECK(v.dim_M == 1);
  CHECK(v.dim_algebra == 1);
}

TEST_CASE("three-site regular twist verdict fills the whole space") {
  GaudinConfig cfg = GaudinConfig::from_json_text(R"({
    "algebra": {"type": "A", "rank": 1, "form": "killing"},
    "weights": [[1], [1], [1]],
    "z": ["1", "2", "3"],
    "mu": {"h": ["1"]},
    "mode": "regular"
  })");
  Verdict v = perfect_integrability_verdict(cfg, VerdictOptions{});
  CHECK(v.pass);
  CHECK(v.dim_M == 8);
  CHECK(v.dim_algebra == 8);
  CHECK(v.frobenius.certified);
}

TEST_CASE("manifest serialization") {
  RunManifest m;
  m.config_path = "cfg.json";
  m.config_digest = "deadbeef";
  m.seed = 9;
  m.cache_hits = {"cache/A1/killing/1.json"};
  m.timings_ms = {{"total", 1.5}};
  m.outputs = {"verdict.json"};
  std::string j = m.to_json();
  CHECK(j.find("\"tool_version\"") != std::string::npos);
  CHECK(j.find("deadbeef") != std::string::npos);
  CHECK(j.find("cache/A1/killing/1.json") != std::string::npos);
}

TEST_CASE("counterexample report passes its three assertions") {
  CounterexampleReport rep = run_counterexample(0);
  CHECK(rep.pass);
  CHECK(rep.cyclic_found);
  CHECK(rep.frobenius_negative);
  CHECK(rep.frobenius_refused);
  CHECK(rep.algebra_dim == 3);
  CHECK(rep.eigenspace_dim == 2);
  CHECK(rep.generalized_dim == 3);
  CHECK(run_counterexample(0).json_text == rep.json_text);
}

TEST_CASE("extra generators flow through the pipeline") {
  GaudinConfig cfg = two_site_sl2();
  cfg.extra_generators = {{{"h_1", 0}, {"h_1", 0}}};
  Verdict v = perfect_integrability_verdict(cfg, VerdictOptions{});
  CHECK(v.pass);  // the quadratic h-current adds nothing new on sl2
  bool saw_extra = false;
  for (const auto& label : v.algebra.generator_labels)
    if (label.rfind("extra1", 0) == 0) saw_extra = true;
  CHECK(saw_extra);
}
