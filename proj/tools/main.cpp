#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaudinlab/report.hpp"

using namespace gaudinlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitResourceCap = 3;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RepBuildArgs {
  std::string type;
  std::size_t rank = 1;
  std::vector<long> weight;
  std::string form = "killing";
  std::string cache_dir;
  std::size_t dim_cap = HighestWeightModule::kDefaultDimCap;
};

int cmd_rep_build(const RepBuildArgs& a) {
  if (a.type.size() != 1) throw ConfigError("type", "expected a single letter");
  GaudinConfig cfg;
  cfg.type = a.type[0];
  cfg.rank = a.rank;
  cfg.form = parse_form(a.form);
  cfg.dim_cap = a.dim_cap;
  if (a.weight.size() != a.rank)
    throw ConfigError("weight", "expected " + std::to_string(a.rank) + " coordinates");
  for (long x : a.weight)
    if (x < 0) throw ConfigError("weight", "must be dominant integral");

  auto alg =
      std::make_shared<const ChevalleyAlgebra>(build_root_system(cfg.type, cfg.rank));
  std::string dir = resolve_cache_dir(a.cache_dir);
  bool hit = false;
  auto mod = load_or_build_module(alg, cfg, a.weight, dir, &hit);
  std::string path = cache_entry_path(dir, cfg.type, cfg.rank, cfg.form, a.weight);

  std::cout << alg->roots().name() << " highest weight (";
  for (std::size_t i = 0; i < a.weight.size(); ++i)
    std::cout << (i ? "," : "") << a.weight[i];
  std::cout << "): dim " << mod->dim() << (hit ? " [cache hit]" : "") << "\n";
  std::cout << "weight multiplicities:\n";
  for (const auto& block : mod->blocks()) {
    std::cout << "  depth";
    for (long c : block.content) std::cout << " " << c;
    std::cout << ": " << block.pivot.size() << "\n";
  }
  std::cout << "cache entry: " << path << "\n";
  return kExitPass;
}

struct GaudinArgs {
  std::string config_file;
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
  std::string cache_dir;
  std::size_t dim_cap = 0;  // 0 = keep config value
  double tolerance = 1e-9;
  bool include_cartan = false, exclude_cartan = false;
  std::string extra_generators_file;
  std::string vary;
  std::string grid;
};

GaudinConfig load_config(const GaudinArgs& a) {
  GaudinConfig cfg = GaudinConfig::from_json_text(read_file(a.config_file));
  if (a.dim_cap) cfg.dim_cap = a.dim_cap;
  if (a.include_cartan) cfg.include_cartan = true;
  if (a.exclude_cartan) cfg.include_cartan = false;
  if (!a.extra_generators_file.empty()) {
    auto j = nlohmann::json::parse(read_file(a.extra_generators_file));
    for (const auto& mono : j) {
      std::vector<std::pair<std::string, long>> m;
      for (const auto& factor : mono)
        m.emplace_back(factor.at(0).get<std::string>(), factor.at(1).get<long>());
      cfg.extra_generators.push_back(std::move(m));
    }
  }
  return cfg;
}

int cmd_gaudin_run(const GaudinArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  GaudinConfig cfg = load_config(a);

  RunManifest manifest;
  manifest.config_path = a.config_file;
  manifest.config_digest = digest_hex(cfg.canonical_text());
  manifest.seed = a.seed;

  VerdictOptions opt;
  opt.seed = a.seed;
  opt.tolerance = a.tolerance;
  opt.cache_dir = resolve_cache_dir(a.cache_dir);

  // pre-warm the module cache so the manifest can record hits
  auto t_cache = std::chrono::steady_clock::now();
  {
    auto alg = std::make_shared<const ChevalleyAlgebra>(
        build_root_system(cfg.type, cfg.rank));
    cfg.validate(*alg);
    for (const auto& lambda : cfg.weights) {
      bool hit = false;
      load_or_build_module(alg, cfg, lambda, opt.cache_dir, &hit);
      std::string p =
          cache_entry_path(opt.cache_dir, cfg.type, cfg.rank, cfg.form, lambda);
      (hit ? manifest.cache_hits : manifest.cache_misses).push_back(p);
    }
  }
  manifest.timings_ms.emplace_back("modules", ms_since(t_cache));

  auto t_verdict = std::chrono::steady_clock::now();
  Verdict verdict = perfect_integrability_verdict(cfg, opt);
  manifest.timings_ms.emplace_back("verdict", ms_since(t_verdict));
  manifest.timings_ms.emplace_back("total", ms_since(t0));

  std::string out_path = a.out.empty() ? "verdict.json" : a.out;
  {
    std::ofstream out(out_path);
    if (!out) throw ConfigError("--out", "cannot write " + out_path);
    out << verdict.json_text;
  }
  manifest.outputs.push_back(out_path);
  std::string manifest_path = out_path + ".manifest.json";
  {
    std::ofstream out(manifest_path);
    out << manifest.to_json();
  }

  if (a.json) {
    std::cout << verdict.json_text;
  } else {
    std::cout << (verdict.pass ? "PASS" : "FAIL") << ": "
              << (verdict.perfectly_integrable ? "perfectly integrable"
                                               : "not perfectly integrable")
              << " (dim V = " << verdict.dim_V << ", dim M = " << verdict.dim_M
              << ", dim algebra = " << verdict.dim_algebra << ")\n"
              << "verdict: " << out_path << "\n";
  }
  return verdict.pass ? kExitPass : kExitCheckFailed;
}

int cmd_gaudin_sweep(const GaudinArgs& a) {
  GaudinConfig base = load_config(a);
  if (a.vary.empty()) throw ConfigError("--vary", "required for sweep");

  // --vary zK or --vary mu.hK (1-based K)
  std::size_t z_idx = 0, mu_idx = 0;
  bool vary_z = false, vary_mu = false;
  if (a.vary.rfind("z", 0) == 0) {
    vary_z = true;
    z_idx = std::stoul(a.vary.substr(1));
    if (z_idx == 0 || z_idx > base.z.size())
      throw ConfigError("--vary", "z index out of range");
  } else if (a.vary.rfind("mu.h", 0) == 0) {
    vary_mu = true;
    mu_idx = std::stoul(a.vary.substr(4));
    if (mu_idx == 0 || mu_idx > base.rank)
      throw ConfigError("--vary", "mu.h index out of range");
  } else {
    throw ConfigError("--vary", "expected zK or mu.hK");
  }

  std::vector<Rat> grid;
  {
    std::stringstream ss(a.grid);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      grid.push_back(parse_rat(tok));
    }
  }

  std::ostringstream csv;
  csv << "index,vary,value,dim_V,dim_M,dim_algebra,commutative,cyclic,frobenius,"
         "eigen_all_dimension_one,pass,note\n";
  bool all_pass = true;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    GaudinConfig cfg = base;
    if (vary_z)
      cfg.z[z_idx - 1] = grid[gi];
    else {
      if (cfg.mu_h.empty()) cfg.mu_h.assign(cfg.rank, Rat(0));
      cfg.mu_h[mu_idx - 1] = grid[gi];
    }
    std::string prefix = std::to_string(gi) + "," + a.vary + "," + rat_str(grid[gi]);
    bool collision = false;
    if (vary_mu) {
      // mu grids never collide; z grids can
    } else {
      if (!cfg.allow_zero_z && sgn(grid[gi]) == 0) collision = true;
      for (std::size_t k = 0; k < cfg.z.size(); ++k)
        if (k != z_idx - 1 && cfg.z[k] == grid[gi]) collision = true;
    }
    if (collision) {
      csv << prefix << ",,,,,,,," << "skipped: z collision or zero\n";
      continue;
    }
    try {
      VerdictOptions opt;
      opt.seed = a.seed;
      opt.tolerance = a.tolerance;
      opt.cache_dir = resolve_cache_dir(a.cache_dir);
      Verdict v = perfect_integrability_verdict(cfg, opt);
      csv << prefix << "," << v.dim_V << "," << v.dim_M << "," << v.dim_algebra
          << "," << (v.algebra.commutative ? "yes" : "no") << ","
          << (v.cyclic.found ? "yes" : "no") << ","
          << (v.frobenius.certified ? "yes" : "no") << ","
          << (v.eigen.all_dimension_one ? "yes" : "no") << ","
          << (v.pass ? "pass" : "fail") << ",\n";
      if (!v.pass) all_pass = false;
    } catch (const ConfigError& e) {
      csv << prefix << ",,,,,,,," << "skipped: " << e.what() << "\n";
    }
  }

  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(a.out);
    if (!out) throw ConfigError("--out", "cannot write " + a.out);
    out << csv.str();
    std::cout << "sweep: " << a.out << "\n";
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_counterexample(std::uint64_t seed, bool json, bool explain) {
  CounterexampleReport rep = run_counterexample(seed);
  if (json) {
    std::cout << rep.json_text;
  } else {
    std::cout << "3-dim fixture Q[x1,x2]/(x1^2, x2^2, x1*x2), regular "
                 "representation\n"
              << "cyclic: " << (rep.cyclic_found ? "yes" : "no") << "\n"
              << "Frobenius: " << (rep.frobenius_negative ? "no (certified)" : "?")
              << "\n"
              << "trivial-character eigenspace dim: " << rep.eigenspace_dim
              << " (generalized " << rep.generalized_dim << ")\n"
              << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  if (explain) {
    std::cout << "algebra basis: 1, x1, x2 with x1^2 = x2^2 = x1*x2 = 0\n"
              << "any functional L = (a, b, c) on the basis gives the Gram\n"
              << "  [[a, b, c], [b, 0, 0], [c, 0, 0]]\n"
              << "whose determinant expands to 0 identically, so no functional\n"
              << "makes the pairing nondegenerate: not a Frobenius algebra.\n"
              << "The vector (1,0,0) is cyclic, yet the joint eigenspace of\n"
              << "the trivial character is spanned by x1 and x2: dimension 2.\n";
  }
  return rep.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic Gaudin model laboratory"};
  app.require_subcommand(1);

  RepBuildArgs rep_args;
  auto* rep = app.add_subcommand("rep", "Representation utilities");
  rep->require_subcommand(1);
  auto* rep_build = rep->add_subcommand("build", "Build or load a cached module");
  rep_build->add_option("type", rep_args.type, "Type letter A..G")->required();
  rep_build->add_option("rank", rep_args.rank, "Rank")->required();
  rep_build->add_option("--weight", rep_args.weight,
                        "Fundamental-weight coordinates")
      ->required()
      ->expected(-1);
  rep_build->add_option("--form", rep_args.form, "killing | normalized");
  rep_build->add_option("--cache-dir", rep_args.cache_dir, "Cache directory");
  rep_build->add_option("--dim-cap", rep_args.dim_cap, "Dimension cap");

  GaudinArgs run_args, sweep_args;
  auto* gaudin = app.add_subcommand("gaudin", "Gaudin model pipelines");
  gaudin->require_subcommand(1);
  auto add_common = [](CLI::App* cmd, GaudinArgs& a) {
    cmd->add_option("config", a.config_file, "JSON config file")->required();
    cmd->add_option("--seed", a.seed, "PRNG seed");
    cmd->add_option("--out", a.out, "Output path");
    cmd->add_flag("--json", a.json, "Print machine-readable verdict");
    cmd->add_option("--cache-dir", a.cache_dir, "Cache directory");
    cmd->add_option("--dim-cap", a.dim_cap, "Module dimension cap");
    cmd->add_option("--tolerance", a.tolerance, "Float-path tolerance");
    cmd->add_flag("--include-cartan", a.include_cartan,
                  "Force diagonal Cartan generators on");
    cmd->add_flag("--no-include-cartan", a.exclude_cartan,
                  "Force diagonal Cartan generators off");
    cmd->add_option("--extra-generators", a.extra_generators_file,
                    "JSON file with extra current monomials");
  };
  auto* run = gaudin->add_subcommand("run", "Full perfect-integrability verdict");
  add_common(run, run_args);
  auto* sweep = gaudin->add_subcommand("sweep", "Verdicts over a parameter grid");
  add_common(sweep, sweep_args);
  sweep->add_option("--vary", sweep_args.vary, "Parameter to vary: zK or mu.hK");
  sweep->add_option("--grid", sweep_args.grid, "Comma-separated rational values");

  std::uint64_t ce_seed = 0;
  bool ce_json = false, ce_explain = false;
  auto* counter =
      app.add_subcommand("counterexample", "Cyclic-but-not-Frobenius fixture");
  counter->add_option("--seed", ce_seed, "PRNG seed");
  counter->add_flag("--json", ce_json, "Machine-readable verdict");
  counter->add_flag("--explain", ce_explain, "Print the algebra and its Gram");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rep_build->parsed()) return cmd_rep_build(rep_args);
    if (run->parsed()) return cmd_gaudin_run(run_args);
    if (sweep->parsed()) return cmd_gaudin_sweep(sweep_args);
    if (counter->parsed()) return cmd_counterexample(ce_seed, ce_json, ce_explain);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfigError;
}
