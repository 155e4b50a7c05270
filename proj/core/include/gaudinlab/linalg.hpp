#ifndef GAUDINLAB_LINALG_HPP
#define GAUDINLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "gaudinlab/matrix.hpp"
#include "gaudinlab/polynomial.hpp"

namespace gaudinlab {

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; pivot = first nonzero entry per column.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Basis of {v : m v = 0}; size = cols - rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Unique solution of a x = b for invertible square a.
QVector solve(const QMatrix& a, const QVector& b);

QMatrix inverse(const QMatrix& a);

Rat determinant(const QMatrix& a);

/// Monic characteristic polynomial via the Faddeev-LeVerrier recurrence.
Poly char_poly(const QMatrix& m);

// Incremental reduced-echelon span tracker for vectors of a fixed length.
// Used for algebra closure and independence bookkeeping.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the current rows; if a nonzero residue remains it is
  /// normalized and inserted. Returns true when v enlarged the span.
  bool insert(QVector v);

  /// Residue of v after reduction (zero vector iff v is in the span).
  QVector reduce(QVector v) const;

  bool contains(const QVector& v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;          // reduced echelon rows
  std::vector<std::size_t> lead_;      // leading column per row
};

/// Columns of `sub` as a basis of a subspace of Q^n; returns the coordinates
/// of v in that basis, or nullopt if v lies outside the subspace.
std::optional<QVector> coords_in_columns(const QMatrix& sub, const QVector& v);

}  // namespace gaudinlab

#endif
