#include "gaudinlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gaudinlab {

using nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

std::string resolve_cache_dir(const std::string& cli_override) {
  if (!cli_override.empty()) return cli_override;
  if (const char* env = std::getenv("GAUDINLAB_CACHE"); env && *env) return env;
  return "cache";
}

std::string cache_entry_path(const std::string& dir, char type, std::size_t rank,
                             FormNormalization form, const std::vector<long>& lambda) {
  std::ostringstream name;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) name << '-';
    name << lambda[i];
  }
  std::filesystem::path p(dir);
  p /= std::string(1, type) + std::to_string(rank);
  p /= form_name(form);
  p /= name.str() + ".json";
  return p.string();
}

std::shared_ptr<const HighestWeightModule> load_or_build_module(
    std::shared_ptr<const ChevalleyAlgebra> alg, const GaudinConfig& cfg,
    const std::vector<long>& lambda, const std::string& cache_dir, bool* cache_hit) {
  if (cache_hit) *cache_hit = false;
  std::string path;
  if (!cache_dir.empty()) {
    path = cache_entry_path(cache_dir, cfg.type, cfg.rank, cfg.form, lambda);
    if (std::ifstream in(path); in) {
      std::stringstream buf;
      buf << in.rdbuf();
      std::shared_ptr<HighestWeightModule> mod;
      try {
        mod = std::make_shared<HighestWeightModule>(
            HighestWeightModule::from_json(buf.str(), alg));
      } catch (const std::exception&) {
        // stale or corrupt entry: rebuild below
      }
      if (mod) {
        // the cap applies to cached modules too, not just fresh builds
        if (mod->dim() > cfg.dim_cap)
          throw ResourceError("module dimension " + std::to_string(mod->dim()) +
                              " exceeds cap " + std::to_string(cfg.dim_cap));
        if (cache_hit) *cache_hit = true;
        return mod;
      }
    }
  }
  auto mod = std::make_shared<HighestWeightModule>(
      HighestWeightModule::build(alg, lambda, cfg.dim_cap));
  if (!path.empty()) {
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::ofstream out(path);
    out << mod->to_json();
  }
  return mod;
}

namespace {

// Coordinates of G restricted to the column span of C, or nullopt when the
// span is not G-invariant. One rref of [C | G C] per call.
std::optional<QMatrix> restrict_to_span(const QMatrix& C, const QMatrix& G) {
  const std::size_t n = C.rows(), m = C.cols();
  QMatrix gc = G * C;
  QMatrix aug(n, 2 * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      aug(i, j) = C(i, j);
      aug(i, m + j) = gc(i, j);
    }
  RrefResult r = rref(aug);
  if (r.rank != m) return std::nullopt;  // either C dependent or GC escapes
  for (std::size_t p : r.pivots)
    if (p >= m) return std::nullopt;
  QMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = r.reduced(i, m + j);
  return out;
}

ordered_json vector_json(const QVector& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

ordered_json eigen_json(const EigenReport& e) {
  ordered_json j;
  j["method"] = e.method;
  j["all_dimension_one"] = e.all_dimension_one;
  j["num_blocks"] = e.num_blocks();
  ordered_json blocks = ordered_json::array();
  for (const EigenBlock& b : e.blocks) {
    ordered_json bj;
    bj["generalized_dim"] = b.generalized_dim;
    bj["kernel_dim"] = b.kernel_dim;
    bj["degree"] = b.degree;
    if (b.character) bj["character"] = vector_json(*b.character);
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

ordered_json cyclic_json(const CyclicSearch& c) {
  ordered_json j;
  j["found"] = c.found;
  if (c.found) j["vector"] = vector_json(c.vector);
  j["trials"] = c.trials_used;
  j["max_rank"] = c.max_rank;
  return j;
}

}  // namespace

Verdict perfect_integrability_verdict(const GaudinConfig& cfg,
                                      const VerdictOptions& opt) {
  Verdict v;
  v.config_digest = digest_hex(cfg.canonical_text());

  auto alg = std::make_shared<const ChevalleyAlgebra>(
      build_root_system(cfg.type, cfg.rank));
  cfg.validate(*alg);

  std::vector<std::shared_ptr<const HighestWeightModule>> mods;
  for (const auto& lambda : cfg.weights)
    mods.push_back(load_or_build_module(alg, cfg, lambda, opt.cache_dir, nullptr));
  TensorModule tensor(std::move(mods));
  v.dim_V = tensor.dim();

  QMatrix form = alg->form_gram(cfg.form);
  DualBases duals = dual_bases(*alg, form);
  QVector mu = cfg.mu_vector(*alg);
  ChainSpace chain = chain_space(tensor, cfg.mode, mu);
  const QMatrix& C = chain.basis;
  v.dim_M = C.cols();

  RationalOperatorFunction S = realize_quadratic(tensor, cfg.z, mu, form, duals);

  std::vector<QMatrix> gens;
  std::vector<std::string> labels;
  auto add_series = [&](const RationalOperatorFunction& f, const std::string& tag) {
    if (!f.constant.is_zero()) {
      gens.push_back(f.constant);
      labels.push_back(tag + ".const");
    }
    for (std::size_t a = 0; a < cfg.z.size(); ++a)
      for (const auto& [key, m] : f.coeffs) {
        if (key.first != a || m.is_zero()) continue;
        gens.push_back(m);
        labels.push_back(tag + ".pole" + std::to_string(a + 1) + ".order" +
                         std::to_string(key.second));
      }
  };
  add_series(S, "S1");
  if (cfg.include_cartan)
    for (std::size_t i = 0; i < cfg.rank; ++i) {
      gens.push_back(tensor.diagonal_action(alg->h_index(i)));
      labels.push_back("cartan.h" + std::to_string(i + 1));
    }
  for (std::size_t e = 0; e < cfg.extra_generators.size(); ++e) {
    std::vector<std::pair<QVector, long>> monomial;
    for (const auto& [label, s] : cfg.extra_generators[e]) {
      QVector x(alg->dim());
      x[alg->index_of_label(label)] = 1;
      monomial.emplace_back(std::move(x), s);
    }
    add_series(realize_current_monomial(tensor, cfg.z, mu, form, monomial),
               "extra" + std::to_string(e + 1));
  }

  // restrict every generator to the chain space
  std::vector<QMatrix> restricted;
  v.invariant = true;
  for (const QMatrix& g : gens) {
    auto r = restrict_to_span(C, g);
    if (!r) {
      v.invariant = false;
      break;
    }
    restricted.push_back(std::move(*r));
  }

  std::vector<QMatrix> hams = gaudin_hamiltonians(tensor, cfg.z, mu, duals);
  v.residue_consistent = true;
  for (std::size_t a = 0; a < hams.size(); ++a)
    if (S.coeff_or_zero(a, 1) != Rat(2) * hams[a]) v.residue_consistent = false;

  ordered_json j;
  j["config_digest"] = v.config_digest;
  j["generators"] = labels;

  if (!v.invariant) {
    v.pass = false;
    j["invariant"] = false;
    j["error"] = "a generator does not preserve the chain space";
    j["seed"] = opt.seed;
    j["form_normalization"] = form_name(cfg.form);
    v.json_text = j.dump(2) + "\n";
    return v;
  }

  v.algebra = close_algebra(restricted, labels);
  v.dim_algebra = v.algebra.dim();
  v.cyclic = find_cyclic_vector(v.algebra, opt.trials, opt.seed);

  QMatrix gram_M(v.dim_M, v.dim_M);
  {
    const QMatrix& G = tensor.gram();
    QMatrix gc = G * C;
    for (std::size_t i = 0; i < v.dim_M; ++i)
      for (std::size_t k = 0; k < v.dim_M; ++k) {
        Rat s;
        for (std::size_t r = 0; r < C.rows(); ++r) {
          if (sgn(C(r, i)) == 0) continue;
          s += C(r, i) * gc(r, k);
        }
        gram_M(i, k) = s;
      }
  }
  v.frobenius = certify_frobenius_via_form(v.algebra, gram_M, opt.trials, opt.seed);
  v.probe = frobenius_gram_probe(v.algebra, opt.trials, opt.seed + 1);
  v.eigen = joint_eigen_analysis(v.algebra);

  // cross-implications; violations would mean an internal contradiction
  bool consistency = true;
  if (v.frobenius.certified) {
    if (!v.cyclic.found) consistency = false;
    if (v.dim_algebra != v.dim_M) consistency = false;
    if (!v.probe.frobenius) consistency = false;
  }
  if (v.eigen.all_dimension_one && v.dim_algebra != v.dim_M) consistency = false;
  std::size_t gen_sum = 0;
  for (const EigenBlock& b : v.eigen.blocks) gen_sum += b.generalized_dim;
  if (gen_sum != v.dim_M) consistency = false;

  // the via-form path is the preferred certification; a positive probe is an
  // equally exact certificate when the form is unusable (mu outside h)
  bool frobenius_established = v.frobenius.certified || v.probe.frobenius;
  v.perfectly_integrable = v.algebra.commutative && v.cyclic.found &&
                           frobenius_established && v.eigen.all_dimension_one &&
                           v.dim_algebra == v.dim_M;
  v.pass = v.perfectly_integrable && v.invariant && v.residue_consistent &&
           consistency;

  j["dims"] = {{"V", v.dim_V}, {"M", v.dim_M}, {"algebra", v.dim_algebra}};
  if (v.algebra.commutative) {
    j["commutative"] = true;
  } else {
    j["commutative"] = {{"witness", {labels[v.algebra.witness->first],
                                     labels[v.algebra.witness->second]}}};
  }
  j["cyclic"] = cyclic_json(v.cyclic);
  {
    ordered_json fj;
    fj["method"] = "restricted-form";
    fj["certified"] = v.frobenius.certified;
    if (v.frobenius.certified) {
      ordered_json cert;
      cert["cyclic_vector"] = vector_json(v.frobenius.cyclic_vec);
      cert["induced_det"] = rat_str(v.frobenius.induced_det);
      fj["certificate"] = std::move(cert);
    } else {
      fj["refusal"] = v.frobenius.failed_hypothesis;
    }
    fj["probe"] = {{"method", v.probe.method},
                   {"frobenius", v.probe.frobenius},
                   {"certified_negative", v.probe.certified_negative},
                   {"trials", v.probe.trials_used}};
    fj["established"] = frobenius_established;
    j["frobenius"] = std::move(fj);
  }
  j["eigen"] = eigen_json(v.eigen);
  j["seed"] = opt.seed;
  j["form_normalization"] = form_name(cfg.form);
  j["mode"] = mode_name(cfg.mode);
  j["chain_condition"] = chain.condition;
  j["invariant"] = v.invariant;
  j["residue_convention"] = "H_a = (1/2) Res";
  j["residue_consistent"] = v.residue_consistent;
  j["consistency"] = consistency;
  j["perfectly_integrable"] = v.perfectly_integrable;
  j["pass"] = v.pass;

  if (opt.run_float_check) {
    EigenReport num =
        joint_eigen_analysis_float(v.algebra, opt.tolerance, opt.seed + 2);
    ordered_json nj;
    nj["method"] = num.method;
    nj["tolerance"] = opt.tolerance;
    nj["all_dimension_one"] = num.all_dimension_one;
    nj["agrees_with_exact"] = num.all_dimension_one == v.eigen.all_dimension_one;
    j["numeric"] = std::move(nj);
  }

  v.json_text = j.dump(2) + "\n";
  return v;
}

std::string RunManifest::to_json() const {
  ordered_json j;
  j["config_path"] = config_path;
  j["config_digest"] = config_digest;
  j["tool_version"] = kToolVersion;
  j["cache_hits"] = cache_hits;
  j["cache_misses"] = cache_misses;
  j["seed"] = seed;
  ordered_json t;
  for (const auto& [stage, ms] : timings_ms) t[stage] = ms;
  j["timings_ms"] = std::move(t);
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

CounterexampleReport run_counterexample(std::uint64_t seed) {
  CounterexampleReport rep;
  auto gens = counterexample_generators();
  CommutativeAlgebraImage alg = close_algebra(gens, {"x1", "x2"});
  rep.algebra_dim = alg.dim();
  CyclicSearch cyc = find_cyclic_vector(alg, 16, seed);
  rep.cyclic_found = cyc.found;
  ProbeVerdict probe = frobenius_gram_probe(alg, 16, seed);
  rep.frobenius_negative = probe.certified_negative;
  FrobeniusCertificate cert =
      certify_frobenius_via_form(alg, QMatrix::identity(alg.ambient), 16, seed);
  rep.frobenius_refused = !cert.certified;
  EigenReport eigen = joint_eigen_analysis(alg);
  if (eigen.blocks.size() == 1) {
    rep.eigenspace_dim = eigen.blocks.front().kernel_dim;
    rep.generalized_dim = eigen.blocks.front().generalized_dim;
  }
  rep.pass = rep.cyclic_found && rep.frobenius_negative && rep.frobenius_refused &&
             rep.eigenspace_dim == 2 && rep.generalized_dim == 3 &&
             rep.algebra_dim == 3;

  ordered_json j;
  j["fixture"] = "regular representation of Q[x1,x2]/(x1^2, x2^2, x1*x2)";
  j["algebra_dim"] = rep.algebra_dim;
  j["cyclic"] = cyclic_json(cyc);
  j["frobenius"] = {{"method", probe.method},
                    {"certified_negative", rep.frobenius_negative},
                    {"via_form_refusal", cert.failed_hypothesis}};
  j["eigen"] = eigen_json(eigen);
  j["trivial_eigenspace_dim"] = rep.eigenspace_dim;
  j["generalized_dim"] = rep.generalized_dim;
  j["pass"] = rep.pass;
  rep.json_text = j.dump(2) + "\n";
  return rep;
}

}  // namespace gaudinlab
