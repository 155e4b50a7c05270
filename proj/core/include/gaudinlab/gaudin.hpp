#ifndef GAUDINLAB_GAUDIN_HPP
#define GAUDINLAB_GAUDIN_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gaudinlab/highest_weight.hpp"

namespace gaudinlab {

/// Invalid run configuration; `field` is the offending config path
/// (CLI exit code 2).
struct ConfigError : std::runtime_error {
  ConfigError(std::string field_path, const std::string& msg)
      : std::runtime_error(field_path + ": " + msg), field(std::move(field_path)) {}
  std::string field;
};

enum class BoundaryMode { kPeriodic, kRegularQuasiPeriodic, kGeneral };

std::string mode_name(BoundaryMode m);
BoundaryMode parse_mode(const std::string& s);

// One experiment: algebra, weights, evaluation points, twist, mode.
// mu is given in Chevalley-basis coordinates of g and doubles as the
// functional <mu, .> under the configured invariant form.
struct GaudinConfig {
  char type = 'A';
  std::size_t rank = 1;
  FormNormalization form = FormNormalization::kKilling;
  std::vector<std::vector<long>> weights;
  std::vector<Rat> z;
  std::vector<Rat> mu_h;                // h-coordinates, size rank (or empty)
  std::map<std::size_t, Rat> mu_f;      // f-coordinates by positive-root index
  BoundaryMode mode = BoundaryMode::kPeriodic;
  bool include_cartan_default() const { return mode != BoundaryMode::kGeneral; }
  bool include_cartan = true;
  bool allow_zero_z = false;            // outside paper assumptions
  std::size_t dim_cap = HighestWeightModule::kDefaultDimCap;
  // extra Bethe-algebra generators: current monomials [(basis label, s >= 0)]
  std::vector<std::vector<std::pair<std::string, long>>> extra_generators;

  static GaudinConfig from_json_text(const std::string& text);
  std::string canonical_text() const;  // deterministic digest input

  QVector mu_vector(const ChevalleyAlgebra& alg) const;
  void validate(const ChevalleyAlgebra& alg) const;  // throws ConfigError
};

// Tensor product of highest-weight modules over one algebra, with site
// embeddings and the tensor Shapovalov form.
class TensorModule {
 public:
  explicit TensorModule(std::vector<std::shared_ptr<const HighestWeightModule>> factors);

  std::size_t num_sites() const { return factors_.size(); }
  std::size_t dim() const { return dim_; }
  const HighestWeightModule& factor(std::size_t a) const { return *factors_[a]; }
  const ChevalleyAlgebra& algebra() const { return factors_.front()->algebra(); }

  /// x acting on site a (identity elsewhere); x is a factor(a)-sized matrix.
  QMatrix site_action(std::size_t a, const QMatrix& x) const;
  /// x at site a times y at site b, a != b.
  QMatrix pair_action(std::size_t a, const QMatrix& x, std::size_t b,
                      const QMatrix& y) const;
  /// Sum over sites of the Chevalley basis element acting at each site.
  QMatrix diagonal_action(std::size_t basis_idx) const;
  QMatrix diagonal_action_of(const QVector& x) const;

  const QMatrix& gram() const { return gram_; }  // tensor Shapovalov

 private:
  std::vector<std::shared_ptr<const HighestWeightModule>> factors_;
  std::vector<std::size_t> stride_;
  std::size_t dim_ = 0;
  QMatrix gram_;
};

/// z^s times the action of Chevalley basis element X on a single module.
/// z must be nonzero when s < 0.
QMatrix evaluation_action(const HighestWeightModule& mod, const Rat& z,
                          std::size_t basis_idx, long s);

/// sum_a z_a^s (X)_a + delta_{s,-1} <mu, X> Id.
QMatrix combined_map(const TensorModule& tensor, const std::vector<Rat>& z,
                     const QVector& mu, const QMatrix& form_gram, const QVector& x,
                     long s);

/// Omega_{ab} = sum_c (X_c)_a (X^c)_b; for a == b the site Casimir.
QMatrix omega_pair(const TensorModule& tensor, const DualBases& duals, std::size_t a,
                   std::size_t b);

// Matrix-valued rational function of u in partial-fraction form:
// constant + sum coeffs[(a, j)] / (u - z_a)^j.
struct RationalOperatorFunction {
  std::vector<Rat> poles;
  QMatrix constant;
  std::map<std::pair<std::size_t, int>, QMatrix> coeffs;

  QMatrix evaluate(const Rat& u) const;  // u off the poles
  QMatrix coeff_or_zero(std::size_t pole, int order) const;
  RationalOperatorFunction derivative() const;
  void add_inplace(const RationalOperatorFunction& other);
  void scale_inplace(const Rat& c);
  /// Noncommutative product with partial-fraction re-expansion.
  static RationalOperatorFunction product(const RationalOperatorFunction& f,
                                          const RationalOperatorFunction& g);
};

/// Realization of one evaluated current: <mu, x> Id + sum_a (x)_a / (u - z_a).
RationalOperatorFunction realize_current(const TensorModule& tensor,
                                         const std::vector<Rat>& z, const QVector& mu,
                                         const QMatrix& form_gram, const QVector& x);

/// (-1)^k prod_i (1/s_i!) d^{s_i}/du^{s_i} of evaluated currents.
RationalOperatorFunction realize_current_monomial(
    const TensorModule& tensor, const std::vector<Rat>& z, const QVector& mu,
    const QMatrix& form_gram, const std::vector<std::pair<QVector, long>>& monomial);

/// Realized quadratic element: sum over dual-basis pairs of the evaluated
/// current product. Residue at z_a is 2 H_a; double poles are site Casimirs.
RationalOperatorFunction realize_quadratic(const TensorModule& tensor,
                                           const std::vector<Rat>& z, const QVector& mu,
                                           const QMatrix& form_gram,
                                           const DualBases& duals);

/// H_a = sum_{b != a} Omega_ab / (z_a - z_b) + (mu)_a.
std::vector<QMatrix> gaudin_hamiltonians(const TensorModule& tensor,
                                         const std::vector<Rat>& z, const QVector& mu,
                                         const DualBases& duals);

struct ChainSpace {
  QMatrix basis;          // dim x m, columns span M
  std::string condition;  // "singular" | "full" | "centralizer"
};

/// Basis of z_mu(g) intersected with n_+, as algebra coordinate vectors.
std::vector<QVector> twist_centralizer_nplus(const ChevalleyAlgebra& alg,
                                             const QVector& mu);

ChainSpace chain_space(const TensorModule& tensor, BoundaryMode mode, const QVector& mu);

struct RegularityVerdict {
  bool regular = false;
  std::vector<std::size_t> vanishing;  // positive-root indices with alpha(mu) = 0
};

/// mu must be supported on h; regular iff alpha(mu) != 0 for all positive roots.
RegularityVerdict check_mu_regular(const ChevalleyAlgebra& alg, const QVector& mu);

}  // namespace gaudinlab

#endif
