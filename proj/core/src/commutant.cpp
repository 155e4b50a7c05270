#include "gaudinlab/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

#include "gaudinlab/polynomial.hpp"

namespace gaudinlab {

std::uint64_t Rng::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545f4914f6cdd1dull;
}

long Rng::small_int() { return static_cast<long>(next() % 7) - 3; }

double Rng::real01() {
  return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
}

namespace {

QVector vectorize(const QMatrix& m) {
  QVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

QMatrix basis_columns(const std::vector<QMatrix>& basis) {
  const std::size_t n2 = basis.front().rows() * basis.front().cols();
  QMatrix cols(n2, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    QVector v = vectorize(basis[k]);
    for (std::size_t i = 0; i < n2; ++i) cols(i, k) = v[i];
  }
  return cols;
}

}  // namespace

std::optional<QVector> CommutativeAlgebraImage::coords_of(const QMatrix& m) const {
  if (basis.empty()) return std::nullopt;
  return coords_in_columns(basis_columns(basis), vectorize(m));
}

CommutativeAlgebraImage close_algebra(const std::vector<QMatrix>& generators,
                                      std::vector<std::string> labels) {
  CommutativeAlgebraImage out;
  if (!generators.empty()) {
    out.ambient = generators.front().rows();
    for (const QMatrix& g : generators)
      if (!g.square() || g.rows() != out.ambient)
        throw std::invalid_argument("close_algebra: shape mismatch");
  } else {
    out.ambient = 1;
  }
  out.generator_labels = std::move(labels);

  for (std::size_t i = 0; i < generators.size() && out.commutative; ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commutator(generators[i], generators[j]).is_zero()) {
        out.commutative = false;
        out.witness = {i, j};
        break;
      }

  const std::size_t n = out.ambient;
  SpanBasis span(n * n);
  out.basis.push_back(QMatrix::identity(n));
  span.insert(vectorize(out.basis.front()));
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (const QMatrix& g : generators) {
      QMatrix p = out.basis[i] * g;
      if (span.insert(vectorize(p))) out.basis.push_back(std::move(p));
    }
  return out;
}

CyclicSearch find_cyclic_vector(const CommutativeAlgebraImage& alg,
                                std::size_t trials, std::uint64_t seed) {
  CyclicSearch res;
  res.seed = seed;
  const std::size_t n = alg.ambient, d = alg.dim();
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    QVector v(n);
    if (t == 0)
      std::fill(v.begin(), v.end(), Rat(1));
    else
      for (Rat& x : v) x = Rat(rng.small_int());
    QMatrix orbit(n, d);
    for (std::size_t k = 0; k < d; ++k) {
      QVector w = mat_vec(alg.basis[k], v);
      for (std::size_t i = 0; i < n; ++i) orbit(i, k) = w[i];
    }
    std::size_t r = rank(orbit);
    res.max_rank = std::max(res.max_rank, r);
    res.trials_used = t + 1;
    if (r == n) {
      res.found = true;
      res.vector = std::move(v);
      return res;
    }
    if (d < n) break;  // dimension obstruction, no vector can work
  }
  return res;
}

FrobeniusCertificate certify_frobenius_via_form(const CommutativeAlgebraImage& alg,
                                                const QMatrix& gram,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  if (gram != gram.transposed())
    throw std::invalid_argument("certify_frobenius_via_form: asymmetric gram");
  FrobeniusCertificate cert;
  const std::size_t n = alg.ambient, d = alg.dim();
  if (gram.rows() != n) throw std::invalid_argument("gram size mismatch");
  if (rank(gram) != n) {
    cert.failed_hypothesis = "form is degenerate on the module";
    return cert;
  }
  for (const QMatrix& b : alg.basis)
    if (b.transposed() * gram != gram * b) {
      cert.failed_hypothesis = "an algebra element is not self-adjoint for the form";
      return cert;
    }
  CyclicSearch cyc = find_cyclic_vector(alg, trials, seed);
  if (!cyc.found) {
    cert.failed_hypothesis = "no cyclic vector found";
    return cert;
  }
  std::vector<QVector> images(d);
  QMatrix img(n, d);
  for (std::size_t k = 0; k < d; ++k) {
    images[k] = mat_vec(alg.basis[k], cyc.vector);
    for (std::size_t i = 0; i < n; ++i) img(i, k) = images[k][i];
  }
  if (rank(img) != d) {
    cert.failed_hypothesis = "orbit map a -> a v is not injective";
    return cert;
  }
  QMatrix induced(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    QVector gw = mat_vec(gram, images[j]);
    for (std::size_t i = 0; i < d; ++i) {
      Rat s;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(images[i][k]) == 0) continue;
        s += images[i][k] * gw[k];
      }
      induced(i, j) = s;
    }
  }
  cert.induced_det = determinant(induced);
  if (sgn(cert.induced_det) == 0) {
    cert.failed_hypothesis = "induced form on the algebra is degenerate";
    return cert;
  }
  cert.certified = true;
  cert.cyclic_vec = cyc.vector;
  cert.induced_gram = std::move(induced);
  return cert;
}

namespace {

// Multivariate polynomials over Q, exponent vectors of a fixed length.
using Mono = std::vector<int>;
using MPoly = std::map<Mono, Rat>;

void mpoly_add_term(MPoly& p, const Mono& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      mpoly_add_term(r, m, ca * cb);
    }
  return r;
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m, std::vector<std::size_t> rows,
                std::size_t col, std::size_t nvars) {
  if (rows.empty()) {
    MPoly one;
    one.emplace(Mono(nvars, 0), Rat(1));
    return one;
  }
  MPoly det;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const MPoly& entry = m[rows[k]][col];
    if (entry.empty()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t l = 0; l < rows.size(); ++l)
      if (l != k) rest.push_back(rows[l]);
    MPoly minor = mpoly_det(m, std::move(rest), col + 1, nvars);
    MPoly term = mpoly_mul(entry, minor);
    for (const auto& [mono, c] : term)
      mpoly_add_term(det, mono, k % 2 == 0 ? c : -c);
  }
  return det;
}

// Structure-constant tensors: c[k](i, j) = coefficient of basis[k] in
// basis[i] basis[j].
std::vector<QMatrix> structure_constants(const CommutativeAlgebraImage& alg) {
  const std::size_t d = alg.dim();
  QMatrix cols = basis_columns(alg.basis);
  std::vector<QMatrix> c(d, QMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = coords_in_columns(cols, vectorize(alg.basis[i] * alg.basis[j]));
      if (!coords)
        throw std::logic_error("algebra basis is not multiplicatively closed");
      for (std::size_t k = 0; k < d; ++k) c[k](i, j) = (*coords)[k];
    }
  return c;
}

}  // namespace

ProbeVerdict frobenius_gram_probe(const CommutativeAlgebraImage& alg,
                                  std::size_t trials, std::uint64_t seed) {
  ProbeVerdict v;
  const std::size_t d = alg.dim();
  std::vector<QMatrix> c = structure_constants(alg);

  auto det_at = [&](const QVector& lambda) {
    QMatrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(lambda[k]) == 0) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) += lambda[k] * c[k](i, j);
    }
    return determinant(m);
  };

  Rng rng(seed);
  auto probe_witness = [&]() {
    for (std::size_t t = 0; t < trials; ++t) {
      QVector lambda(d);
      if (t == 0)
        std::fill(lambda.begin(), lambda.end(), Rat(1));
      else
        for (Rat& x : lambda) x = Rat(rng.small_int());
      v.trials_used = t + 1;
      if (sgn(det_at(lambda)) != 0) {
        v.witness_functional = std::move(lambda);
        return true;
      }
    }
    return false;
  };

  if (d <= 6) {
    v.method = "symbolic";
    std::vector<std::vector<MPoly>> entries(d, std::vector<MPoly>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(c[k](i, j)) == 0) continue;
          Mono m(d, 0);
          m[static_cast<std::size_t>(k)] = 1;
          mpoly_add_term(entries[i][j], m, c[k](i, j));
        }
    std::vector<std::size_t> rows(d);
    for (std::size_t i = 0; i < d; ++i) rows[i] = i;
    MPoly det = mpoly_det(entries, rows, 0, d);
    if (det.empty()) {
      v.certified_negative = true;
      return v;
    }
    v.frobenius = true;
    probe_witness();  // a concrete functional is nice to report but optional
    return v;
  }

  v.method = "probe";
  v.frobenius = probe_witness();
  return v;
}

namespace {

// a restricted to the invariant subspace spanned by the columns of b.
QMatrix restrict_to(const QMatrix& b, const QMatrix& a) {
  const std::size_t k = b.cols();
  QMatrix ab = a * b;
  QMatrix out(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    QVector col(ab.rows());
    for (std::size_t i = 0; i < ab.rows(); ++i) col[i] = ab(i, j);
    auto coords = coords_in_columns(b, col);
    if (!coords) throw std::logic_error("subspace is not invariant");
    for (std::size_t i = 0; i < k; ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

// Rational roots of a squarefree polynomial, found numerically from the
// companion matrix, reconstructed by continued fractions and verified
// exactly. Misses are harmless: an unsplit factor only coarsens blocks.
std::vector<Rat> verified_rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  int deg = poly_degree(p);
  if (deg < 1) return roots;
  if (deg == 1) {
    roots.push_back(-p[0] / p[1]);
    return roots;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  double lead = p[static_cast<std::size_t>(deg)].get_d();
  for (int i = 0; i < deg; ++i)
    comp(i, deg - 1) = -p[static_cast<std::size_t>(i)].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  for (int i = 0; i < deg; ++i) {
    std::complex<double> ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-8) continue;
    // continued-fraction reconstruction with bounded denominator
    double x = ev.real();
    long long p0 = 1, q0 = 0, p1 = static_cast<long long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 40 && std::abs(frac) > 1e-12; ++it) {
      double inv = 1.0 / frac;
      long long a = static_cast<long long>(std::floor(inv));
      long long p2 = a * p1 + p0, q2 = a * q1 + q0;
      if (q2 > 1000000 || q2 <= 0) break;
      p0 = p1; q0 = q1; p1 = p2; q1 = q2;
      frac = inv - std::floor(inv);
    }
    Rat cand(static_cast<long>(p1), static_cast<long>(q1));
    cand.canonicalize();
    if (sgn(poly_eval(p, cand)) != 0) continue;
    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
      roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QMatrix matrix_power(QMatrix m, int e) {
  QMatrix r = QMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

std::vector<QMatrix> split_block_by(const QMatrix& block, const QMatrix& op) {
  QMatrix a = restrict_to(block, op);
  Poly cp = char_poly(a);
  // coprime factor list: rational linear factors plus the leftover per
  // squarefree layer
  struct Factor {
    Poly p;
    int mult;
  };
  std::vector<Factor> factors;
  for (const auto& [f, mult] : squarefree_split(cp)) {
    Poly rest = f;
    for (const Rat& r : verified_rational_roots(f)) {
      Poly lin{Rat(-r), Rat(1)};
      factors.push_back({lin, mult});
      rest = poly_divmod(rest, lin).first;
    }
    if (poly_degree(rest) >= 1) factors.push_back({poly_monic(rest), mult});
  }
  if (factors.size() <= 1) return {block};
  std::vector<QMatrix> parts;
  for (const Factor& f : factors) {
    QMatrix power = matrix_power(poly_eval_matrix(f.p, a), f.mult);
    auto kern = kernel_basis(power);
    QMatrix part(block.rows(), kern.size());
    for (std::size_t c = 0; c < kern.size(); ++c)
      for (std::size_t i = 0; i < block.rows(); ++i) {
        Rat s;
        for (std::size_t j = 0; j < block.cols(); ++j) {
          if (sgn(kern[c][j]) == 0) continue;
          s += block(i, j) * kern[c][j];
        }
        part(i, c) = s;
      }
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

EigenReport joint_eigen_analysis(const CommutativeAlgebraImage& alg) {
  EigenReport rep;
  rep.method = "exact-rational";
  const std::size_t n = alg.ambient;

  std::vector<QMatrix> blocks{QMatrix::identity(n)};
  for (std::size_t k = 1; k < alg.dim(); ++k) {
    std::vector<QMatrix> next;
    for (const QMatrix& b : blocks)
      for (QMatrix& part : split_block_by(b, alg.basis[k]))
        next.push_back(std::move(part));
    blocks = std::move(next);
  }

  rep.all_dimension_one = true;
  for (const QMatrix& b : blocks) {
    EigenBlock eb;
    const std::size_t k = b.cols();
    eb.generalized_dim = k;

    std::vector<QMatrix> restricted;
    SpanBasis span(k * k);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      QMatrix r = restrict_to(b, alg.basis[i]);
      if (span.insert(vectorize(r))) restricted.push_back(std::move(r));
    }
    const std::size_t m = restricted.size();
    QMatrix tform(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        tform(i, j) = trace(restricted[i] * restricted[j]);
        tform(j, i) = tform(i, j);
      }
    eb.degree = rank(tform);

    auto rad = kernel_basis(tform);  // radical of the restricted algebra
    if (rad.empty()) {
      eb.kernel_dim = k;
    } else {
      QMatrix stacked(rad.size() * k, k);
      for (std::size_t rr = 0; rr < rad.size(); ++rr) {
        QMatrix elem(k, k);
        for (std::size_t i = 0; i < m; ++i) {
          if (sgn(rad[rr][i]) == 0) continue;
          elem = elem + rad[rr][i] * restricted[i];
        }
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) stacked(rr * k + i, j) = elem(i, j);
      }
      eb.kernel_dim = k - rank(stacked);
    }

    if (eb.degree == 1) {
      QVector chi(alg.dim());
      for (std::size_t i = 0; i < alg.dim(); ++i)
        chi[i] = trace(restrict_to(b, alg.basis[i])) / Rat(static_cast<long>(k));
      eb.character = std::move(chi);
    }
    if (eb.kernel_dim != eb.degree) rep.all_dimension_one = false;
    rep.blocks.push_back(std::move(eb));
  }
  return rep;
}

EigenReport joint_eigen_analysis_float(const CommutativeAlgebraImage& alg,
                                       double tolerance, std::uint64_t seed) {
  EigenReport rep;
  rep.method = "float-fallback";
  rep.tolerance = tolerance;
  const std::size_t n = alg.ambient;
  Rng rng(seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 1; k < alg.dim(); ++k) {
    double w = rng.real01() * 2.0 - 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) += w * alg.basis[k](i, j).get_d();
  }
  if (alg.dim() == 1) {
    EigenBlock eb;
    eb.generalized_dim = n;
    eb.kernel_dim = n;
    eb.degree = 1;
    rep.blocks.push_back(eb);
    rep.all_dimension_one = n == 1;
    return rep;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a.cast<std::complex<double>>());
  std::vector<std::complex<double>> evs(es.eigenvalues().data(),
                                        es.eigenvalues().data() + n);
  std::sort(evs.begin(), evs.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  rep.all_dimension_one = true;
  for (std::size_t i = 0; i < evs.size();) {
    std::size_t j = i + 1;
    while (j < evs.size() && std::abs(evs[j] - evs[i]) < tolerance) ++j;
    EigenBlock eb;
    eb.generalized_dim = j - i;
    eb.degree = 1;
    Eigen::MatrixXcd shifted = a.cast<std::complex<double>>();
    for (std::size_t d = 0; d < n; ++d) shifted(d, d) -= evs[i];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
    svd.setThreshold(tolerance);
    eb.kernel_dim = n - static_cast<std::size_t>(svd.rank());
    if (eb.kernel_dim != 1) rep.all_dimension_one = false;
    rep.blocks.push_back(eb);
    i = j;
  }
  return rep;
}

std::vector<QMatrix> counterexample_generators() {
  QMatrix x1(3, 3), x2(3, 3);
  x1(1, 0) = 1;  // x1 * 1 = x1, x1 * x1 = x1 * x2 = 0
  x2(2, 0) = 1;
  return {x1, x2};
}

}  // namespace gaudinlab
