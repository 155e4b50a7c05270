#ifndef GAUDINLAB_CHEVALLEY_HPP
#define GAUDINLAB_CHEVALLEY_HPP

#include <string>
#include <vector>

#include "gaudinlab/linalg.hpp"
#include "gaudinlab/matrix.hpp"
#include "gaudinlab/root_system.hpp"

namespace gaudinlab {

enum class FormNormalization { kKilling, kNormalized };

FormNormalization parse_form(const std::string& s);
std::string form_name(FormNormalization f);

// Chevalley basis of the simple Lie algebra attached to a root system.
// Basis order: e_alpha for positive roots (root-system order), then f_alpha,
// then h_1..h_r. All structure constants are integers; signs follow the
// extraspecial-pair convention with the (height, coordinates) root order.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_positive() const { return rs_.num_positive(); }

  std::size_t e_index(std::size_t a) const { return a; }
  std::size_t f_index(std::size_t a) const { return rs_.num_positive() + a; }
  std::size_t h_index(std::size_t i) const { return 2 * rs_.num_positive() + i; }

  /// "e_a" / "f_a" (1-based positive-root index) or "h_i" (1-based).
  std::string basis_label(std::size_t idx) const;
  std::size_t index_of_label(const std::string& label) const;

  /// N_{alpha,beta} for roots with alpha + beta a nonzero root; 0 otherwise.
  Rat n_constant(const RootVec& alpha, const RootVec& beta) const;

  /// Coroot of positive root a in the h_i basis (integer coordinates).
  const std::vector<long>& coroot(std::size_t a) const { return coroots_[a]; }

  /// [basis_i, basis_j] as a dense coordinate vector.
  const QVector& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  QVector bracket(const QVector& x, const QVector& y) const;

  /// Adjoint action matrix of basis element i.
  const QMatrix& ad(std::size_t i) const { return ad_[i]; }

  const QMatrix& killing_gram() const { return killing_; }
  /// Killing form or its rescaling with (theta, theta) = 2, theta the
  /// highest root. Both symmetric, invariant, nondegenerate.
  QMatrix form_gram(FormNormalization f) const;

  /// The extraspecial pair (xi, eta) of non-simple positive root c, as
  /// positive-root indices. Defines e_c = [e_xi, e_eta] / N(xi, eta).
  std::pair<std::size_t, std::size_t> defining_pair(std::size_t c) const {
    return defining_[c];
  }

 private:
  RootSystem rs_;
  std::size_t dim_;
  std::vector<std::vector<long>> coroots_;
  std::vector<std::pair<std::size_t, std::size_t>> defining_;
  std::vector<long> npos_;  // N for special pairs, indexed a * P + b
  std::vector<QVector> table_;
  std::vector<QMatrix> ad_;
  QMatrix killing_;

  long npos(std::size_t a, std::size_t b) const;
};

struct DualBases {
  std::vector<QVector> primal;  // the Chevalley basis itself
  std::vector<QVector> dual;    // <primal_a, dual_b> = delta_ab
};

/// Dual bases of g with respect to the given invariant-form Gram matrix.
DualBases dual_bases(const ChevalleyAlgebra& alg, const QMatrix& gram);

// Linear map realizing the Cartan anti-involution: e_i <-> f_i, h_i fixed,
// extended to all root vectors; satisfies w([x,y]) = [w(y), w(x)].
struct CartanInvolutionMap {
  QMatrix matrix;  // dim x dim
  QVector apply(const QVector& x) const { return mat_vec(matrix, x); }
};

CartanInvolutionMap cartan_antiinvolution(const ChevalleyAlgebra& alg);

}  // namespace gaudinlab

#endif
