#ifndef GAUDINLAB_MATRIX_HPP
#define GAUDINLAB_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gaudinlab/rational.hpp"

namespace gaudinlab {

using QVector = std::vector<Rat>;

// Dense row-major matrix of exact rationals. Query operations are pure;
// mutation happens only through operator()(i, j) during assembly.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Rat& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rat& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const;
  QMatrix transposed() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);  // zero entries skipped
QMatrix operator*(const Rat& c, const QMatrix& a);

/// ab - ba
QMatrix commutator(const QMatrix& a, const QMatrix& b);

QVector mat_vec(const QMatrix& a, const QVector& v);
Rat trace(const QMatrix& a);

/// Serializes as {"rows": r, "cols": c, "entries": ["p/q", ...]} (row-major).
std::string matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const std::string& text);

}  // namespace gaudinlab

#endif
