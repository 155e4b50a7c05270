#include "gaudinlab/matrix.hpp"

#include <stdexcept>

#include "json.hpp"

namespace gaudinlab {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const Rat& e : entries_)
    if (sgn(e) != 0) return false;
  return true;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

static void check_same_shape(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  check_same_shape(a, b);
  QMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  check_same_shape(a, b);
  QMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        c(i, j) += aik * bkj;
      }
    }
  return c;
}

QMatrix operator*(const Rat& c, const QMatrix& a) {
  QMatrix r(a.rows(), a.cols());
  if (sgn(c) == 0) return r;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QVector mat_vec(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("mat_vec shape mismatch");
  QVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0 || sgn(v[j]) == 0) continue;
      r[i] += a(i, j) * v[j];
    }
  return r;
}

Rat trace(const QMatrix& a) {
  if (!a.square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

std::string matrix_to_json(const QMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(rat_str(m(i, k)));
  j["entries"] = std::move(entries);
  return j.dump();
}

QMatrix matrix_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  QMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& entries = j.at("entries");
  if (entries.size() != m.rows() * m.cols())
    throw std::invalid_argument("matrix JSON entry count mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      m(i, k) = parse_rat(entries[idx++].get<std::string>());
  return m;
}

}  // namespace gaudinlab
