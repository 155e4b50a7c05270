#include "gaudinlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaudinlab {

RrefResult rref(const QMatrix& m) {
  RrefResult out;
  out.reduced = m;
  QMatrix& a = out.reduced;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = nr;
    for (std::size_t i = row; i < nr; ++i)
      if (sgn(a(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    if (piv != row)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(row, j), a(piv, j));
    Rat inv = Rat(1) / a(row, col);
    for (std::size_t j = col; j < nc; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = col; j < nc; ++j) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    QVector v(nc);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector solve(const QMatrix& a, const QVector& b) {
  if (!a.square() || a.rows() != b.size())
    throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.rows();
  QMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RrefResult r = rref(aug);
  if (r.rank != n || r.pivots.back() == n)
    throw std::invalid_argument("solve: singular system");
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r.reduced(i, n);
  return x;
}

QMatrix inverse(const QMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank != n || r.pivots[n - 1] != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Rat determinant(const QMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix m = a;
  const std::size_t n = m.rows();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (sgn(m(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(col, j), m(piv, j));
      det = -det;
    }
    det *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      Rat f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

Poly char_poly(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  Poly coeffs(n + 1);
  coeffs[n] = 1;
  if (n == 0) return coeffs;
  QMatrix mk = m;
  coeffs[n - 1] = -trace(mk);
  for (std::size_t k = 2; k <= n; ++k) {
    QMatrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
    mk = m * shifted;
    coeffs[n - k] = -trace(mk) / Rat(static_cast<long>(k));
  }
  return coeffs;
}

bool SpanBasis::insert(QVector v) {
  QVector res = reduce(std::move(v));
  std::size_t lead = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (sgn(res[j]) != 0) {
      lead = j;
      break;
    }
  if (lead == dim_) return false;
  Rat inv = Rat(1) / res[lead];
  for (Rat& x : res) x *= inv;
  // back-substitute into existing rows, keep reduced form
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][lead];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= f * res[j];
  }
  std::size_t pos = 0;
  while (pos < lead_.size() && lead_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(res));
  lead_.insert(lead_.begin() + pos, lead);
  return true;
}

QVector SpanBasis::reduce(QVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = v[lead_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool SpanBasis::contains(const QVector& v) const {
  QVector res = reduce(v);
  for (const Rat& x : res)
    if (sgn(x) != 0) return false;
  return true;
}

std::optional<QVector> coords_in_columns(const QMatrix& sub, const QVector& v) {
  const std::size_t n = sub.rows(), k = sub.cols();
  if (v.size() != n) throw std::invalid_argument("coords_in_columns: length mismatch");
  QMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = sub(i, j);
    aug(i, k) = v[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == k) return std::nullopt;  // inconsistent
  if (r.rank != k) throw std::invalid_argument("coords_in_columns: columns dependent");
  QVector c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = r.reduced(i, k);
  return c;
}

}  // namespace gaudinlab
