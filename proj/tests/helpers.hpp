#ifndef GAUDINLAB_TESTS_HELPERS_HPP
#define GAUDINLAB_TESTS_HELPERS_HPP

#include <memory>
#include <vector>

#include "gaudinlab/chevalley.hpp"
#include "gaudinlab/highest_weight.hpp"

namespace gaudinlab::testing {

// Independent dimension oracle: Weyl formula
// dim = prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
inline Rat weyl_dimension(const RootSystem& rs, const std::vector<long>& lambda) {
  Rat dim(1);
  std::vector<Rat> half_len(rs.rank());  // (alpha_j, alpha_j) / 2
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    RootVec ej(rs.rank(), 0);
    ej[j] = 1;
    half_len[j] = rs.bilinear(ej, ej) / 2;
  }
  for (const RootVec& alpha : rs.positive_roots()) {
    Rat num, den;
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      num += Rat(lambda[j] + 1) * Rat(alpha[j]) * half_len[j];
      den += Rat(alpha[j]) * half_len[j];
    }
    dim *= num / den;
  }
  return dim;
}

inline bool jacobi_holds(const ChevalleyAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        QVector xi(n), xj(n), xk(n);
        xi[i] = 1;
        xj[j] = 1;
        xk[k] = 1;
        QVector a = alg.bracket(alg.bracket_basis(i, j), xk);
        QVector b = alg.bracket(alg.bracket_basis(j, k), xi);
        QVector c = alg.bracket(alg.bracket_basis(k, i), xj);
        for (std::size_t t = 0; t < n; ++t)
          if (sgn(a[t] + b[t] + c[t]) != 0) return false;
      }
  return true;
}

inline bool serre_holds(const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.roots();
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      if (i == j) continue;
      long reps = 1 - rs.cartan(j, i);
      QVector v(alg.dim());
      v[alg.e_index(j)] = 1;
      QVector w(alg.dim());
      w[alg.f_index(j)] = 1;
      for (long k = 0; k < reps; ++k) {
        v = mat_vec(alg.ad(alg.e_index(i)), v);
        w = mat_vec(alg.ad(alg.f_index(i)), w);
      }
      for (const Rat& x : v)
        if (sgn(x) != 0) return false;
      for (const Rat& x : w)
        if (sgn(x) != 0) return false;
    }
  return true;
}

inline std::shared_ptr<const ChevalleyAlgebra> make_algebra(char type,
                                                            std::size_t rank) {
  return std::make_shared<const ChevalleyAlgebra>(build_root_system(type, rank));
}

}  // namespace gaudinlab::testing

#endif
