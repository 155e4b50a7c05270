#ifndef GAUDINLAB_HIGHEST_WEIGHT_HPP
#define GAUDINLAB_HIGHEST_WEIGHT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaudinlab/chevalley.hpp"

namespace gaudinlab {

/// Thrown when a construction exceeds a configured cap (CLI exit code 3).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A monomial f_{w[0]} f_{w[1]} ... f_{w[k-1]} v_lambda, letters are 0-based
// simple-root indices. Normal order = lexicographic enumeration per weight.
using Word = std::vector<std::uint8_t>;

// Number of times each simple root has been subtracted from lambda.
using Content = std::vector<long>;

struct VermaBlock {
  Content content;
  std::vector<Word> words;
};

/// Weight-graded Verma spanning set down to the given depth.
/// lambda is in fundamental-weight coordinates and must be dominant.
std::vector<VermaBlock> verma_weight_basis(const ChevalleyAlgebra& alg,
                                           const std::vector<long>& lambda,
                                           long depth_cap);

/// Shapovalov Gram block of the Verma spanning set at the given weight.
QMatrix shapovalov_gram(const ChevalleyAlgebra& alg, const std::vector<long>& lambda,
                        const Content& content);

/// Depth of the lowest weight of V_lambda: height of lambda - w0(lambda).
long irrep_depth(const ChevalleyAlgebra& alg, const std::vector<long>& lambda);

class HighestWeightModule {
 public:
  struct WeightBlock {
    Content content;
    std::vector<Word> words;        // Verma spanning set at this weight
    std::vector<std::size_t> pivot; // indices of words surviving the quotient
    QMatrix gram;                   // Shapovalov block on the pivot words
    std::size_t offset = 0;         // position in the global basis
  };

  static constexpr std::size_t kDefaultDimCap = 400;
  static constexpr int kFormatVersion = 1;

  /// Verma quotient by the radical of the Shapovalov form.
  static HighestWeightModule build(std::shared_ptr<const ChevalleyAlgebra> alg,
                                   std::vector<long> lambda,
                                   std::size_t dim_cap = kDefaultDimCap);

  const ChevalleyAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const ChevalleyAlgebra> algebra_ptr() const { return alg_; }
  const std::vector<long>& highest_weight() const { return lambda_; }
  std::size_t dim() const { return dim_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }

  /// Action of Chevalley basis element (algebra basis index) on V_lambda.
  const QMatrix& action(std::size_t basis_idx) const { return action_[basis_idx]; }
  /// Action of an arbitrary algebra element given by coordinates.
  QMatrix action_of(const QVector& x) const;

  /// Block-diagonal Shapovalov Gram on the full module basis.
  const QMatrix& shapovalov() const { return gram_; }

  std::string to_json() const;
  static HighestWeightModule from_json(const std::string& text,
                                       std::shared_ptr<const ChevalleyAlgebra> alg);

 private:
  HighestWeightModule() = default;

  std::shared_ptr<const ChevalleyAlgebra> alg_;
  std::vector<long> lambda_;
  std::size_t dim_ = 0;
  std::vector<WeightBlock> blocks_;
  std::vector<QMatrix> action_;  // per algebra basis element
  QMatrix gram_;

  void finalize_from_blocks();  // offsets, gram_, derived action matrices
};

/// Sum over dual bases X_a X^a for the invariant form with the given Gram;
/// scalar on every irreducible module.
QMatrix casimir_matrix(const HighestWeightModule& mod, const QMatrix& form_gram);

}  // namespace gaudinlab

#endif
