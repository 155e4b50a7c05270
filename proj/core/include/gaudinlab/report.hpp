#ifndef GAUDINLAB_REPORT_HPP
#define GAUDINLAB_REPORT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gaudinlab/commutant.hpp"
#include "gaudinlab/gaudin.hpp"

namespace gaudinlab {

inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& s);
std::string digest_hex(const std::string& s);

/// Cache directory resolution: explicit override, then GAUDINLAB_CACHE,
/// then "cache" under the current directory.
std::string resolve_cache_dir(const std::string& cli_override);

/// cache/{type}{rank}/{form}/{lambda-dashed}.json
std::string cache_entry_path(const std::string& dir, char type, std::size_t rank,
                             FormNormalization form, const std::vector<long>& lambda);

/// Loads the module from the cache or builds and stores it. Pass an empty
/// cache_dir to skip caching entirely.
std::shared_ptr<const HighestWeightModule> load_or_build_module(
    std::shared_ptr<const ChevalleyAlgebra> alg, const GaudinConfig& cfg,
    const std::vector<long>& lambda, const std::string& cache_dir, bool* cache_hit);

struct VerdictOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 64;
  double tolerance = 1e-9;
  bool run_float_check = true;
  std::string cache_dir;  // empty = no cache
};

struct Verdict {
  bool pass = false;                 // every enabled check held
  bool perfectly_integrable = false; // cyclic + Frobenius + dim-one + maximal
  bool invariant = false;            // generators preserve the chain space
  std::size_t dim_V = 0, dim_M = 0, dim_algebra = 0;
  std::string config_digest;
  CommutativeAlgebraImage algebra;   // restricted to the chain space
  CyclicSearch cyclic;
  FrobeniusCertificate frobenius;
  ProbeVerdict probe;
  EigenReport eigen;
  bool residue_consistent = false;   // H_a = (1/2) Res of the realized series
  std::string json_text;             // full verdict document
};

Verdict perfect_integrability_verdict(const GaudinConfig& cfg,
                                      const VerdictOptions& opt);

struct RunManifest {
  std::string config_path;
  std::string config_digest;
  std::vector<std::string> cache_hits;
  std::vector<std::string> cache_misses;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> outputs;

  std::string to_json() const;
};

struct CounterexampleReport {
  bool cyclic_found = false;
  bool frobenius_refused = false;   // via-form path fails
  bool frobenius_negative = false;  // symbolic determinant identically zero
  std::size_t algebra_dim = 0;
  std::size_t eigenspace_dim = 0;
  std::size_t generalized_dim = 0;
  bool pass = false;  // cyclic, not Frobenius, eigenspace dim 2
  std::string json_text;
};

/// Runs the 3-dim cyclic-but-not-Frobenius fixture end to end.
CounterexampleReport run_counterexample(std::uint64_t seed);

}  // namespace gaudinlab

#endif
