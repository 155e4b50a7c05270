#ifndef GAUDINLAB_COMMUTANT_HPP
#define GAUDINLAB_COMMUTANT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaudinlab/linalg.hpp"
#include "gaudinlab/matrix.hpp"

namespace gaudinlab {

// Deterministic PRNG (xorshift64*); identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next();
  /// Uniform-ish small integer in {-3, ..., 3}.
  long small_int();
  double real01();

 private:
  std::uint64_t state_;
};

// Unital algebra generated by commuting operators on Q^n.
struct CommutativeAlgebraImage {
  std::size_t ambient = 0;
  std::vector<QMatrix> basis;  // linearly independent, basis[0] = identity
  std::vector<std::string> generator_labels;
  bool commutative = true;
  // generator indices with a nonzero commutator, when not commutative
  std::optional<std::pair<std::size_t, std::size_t>> witness;

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of an ambient operator in the basis (empty if outside).
  std::optional<QVector> coords_of(const QMatrix& m) const;
};

/// Span-saturation closure of the unital algebra generated by the inputs.
/// Deterministic basis for a deterministic input order. Non-commuting
/// generators are flagged with a witness pair, not rejected.
CommutativeAlgebraImage close_algebra(const std::vector<QMatrix>& generators,
                                      std::vector<std::string> labels = {});

struct CyclicSearch {
  bool found = false;
  QVector vector;             // rank-verified cyclic vector when found
  std::size_t trials_used = 0;
  std::size_t max_rank = 0;   // best orbit rank seen
  std::uint64_t seed = 0;
};

/// Searches for v with span{b v : b in basis} = Q^n. Trial 0 is the all-ones
/// vector; later trials draw entries from {-3..3}. Every hit is re-verified
/// by an exact rank computation.
CyclicSearch find_cyclic_vector(const CommutativeAlgebraImage& alg,
                                std::size_t trials, std::uint64_t seed);

struct FrobeniusCertificate {
  bool certified = false;
  std::string failed_hypothesis;  // empty when certified
  QVector cyclic_vec;
  QMatrix induced_gram;           // (a, b) -> (a v | b v)
  Rat induced_det;
};

/// Frobenius certification from a symmetric invariant nondegenerate form on
/// the module: checks form nondegeneracy, self-adjointness of every basis
/// element, a cyclic vector, and nondegeneracy of the induced Gram on the
/// algebra. Throws std::invalid_argument on an asymmetric gram.
FrobeniusCertificate certify_frobenius_via_form(const CommutativeAlgebraImage& alg,
                                                const QMatrix& gram,
                                                std::size_t trials,
                                                std::uint64_t seed);

struct ProbeVerdict {
  bool frobenius = false;
  bool certified_negative = false;  // symbolic determinant vanished identically
  std::string method;               // "symbolic" | "probe"
  std::size_t trials_used = 0;
  QVector witness_functional;       // lambda with det != 0, when frobenius
};

/// Tests whether some functional lambda makes the Gram lambda(b_i b_j)
/// nondegenerate. For dim <= 6 the determinant is expanded symbolically in
/// the lambda coordinates (certified both ways); beyond that random probes
/// give certified positives and "probably not" negatives.
ProbeVerdict frobenius_gram_probe(const CommutativeAlgebraImage& alg,
                                  std::size_t trials, std::uint64_t seed);

struct EigenBlock {
  std::size_t generalized_dim = 0;  // Q-dimension of the invariant block
  std::size_t kernel_dim = 0;       // Q-dimension of the joint eigenvectors
  std::size_t degree = 0;           // Q-dimension of the characters on the block
  // character values per basis element, when the block has a single rational
  // character (degree 1)
  std::optional<QVector> character;
};

struct EigenReport {
  std::string method;  // "exact-rational" | "float-fallback"
  std::vector<EigenBlock> blocks;
  bool all_dimension_one = false;
  double tolerance = 0.0;  // float path only

  std::size_t num_blocks() const { return blocks.size(); }
};

/// Exact joint eigen-analysis. Splits the space into invariant blocks by
/// coprime factors of characteristic polynomials (squarefree split plus
/// exact-verified rational roots), then certifies per block: degree = rank of
/// the trace form of the restricted algebra (its radical is the trace-form
/// kernel over Q), kernel_dim = joint kernel of the radical. Every complex
/// joint eigenspace is one-dimensional iff kernel_dim = degree on each block.
EigenReport joint_eigen_analysis(const CommutativeAlgebraImage& alg);

/// Floating-point cross-check: diagonalizes a seeded random real combination
/// and clusters eigenvalues within the tolerance. Never authoritative.
EigenReport joint_eigen_analysis_float(const CommutativeAlgebraImage& alg,
                                       double tolerance, std::uint64_t seed);

/// Regular representation of Q[x1, x2]/(x1^2, x2^2, x1 x2) on {1, x1, x2}:
/// the standard 3-dim cyclic-but-not-Frobenius fixture.
std::vector<QMatrix> counterexample_generators();

}  // namespace gaudinlab

#endif
