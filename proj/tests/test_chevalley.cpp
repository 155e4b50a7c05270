#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace gaudinlab;
using gaudinlab::testing::jacobi_holds;
using gaudinlab::testing::make_algebra;
using gaudinlab::testing::serre_holds;

TEST_CASE("Jacobi identity holds for every built algebra") {
  for (auto [t, r] : {std::pair<char, std::size_t>{'A', 1}, {'A', 2}, {'B', 2},
                      {'C', 3}, {'G', 2}}) {
    auto alg = make_algebra(t, r);
    CHECK_MESSAGE(jacobi_holds(*alg), alg->roots().name());
  }
}

TEST_CASE("Serre relations hold") {
  for (auto [t, r] : {std::pair<char, std::size_t>{'A', 2}, {'B', 2}, {'G', 2}}) {
    auto alg = make_algebra(t, r);
    CHECK_MESSAGE(serre_holds(*alg), alg->roots().name());
  }
}

TEST_CASE("defining relations of the Chevalley basis") {
  auto alg = make_algebra('B', 2);
  const RootSystem& rs = alg->roots();
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      // [h_i, e_j] = <alpha_j, alpha_i^vee> e_j
      QVector b = alg->bracket_basis(alg->h_index(i), alg->e_index(j));
      CHECK(b[alg->e_index(j)] == Rat(rs.cartan(j, i)));
      // [e_i, f_j] = delta_ij h_i
      QVector c = alg->bracket_basis(alg->e_index(i), alg->f_index(j));
      if (i == j) {
        CHECK(c[alg->h_index(i)] == Rat(1));
      } else {
        for (const Rat& x : c) CHECK(sgn(x) == 0);
      }
    }
}

TEST_CASE("structure constants have magnitude p+1") {
  for (auto [t, r] : {std::pair<char, std::size_t>{'A', 2}, {'B', 2}, {'G', 2}}) {
    auto alg = make_algebra(t, r);
    const RootSystem& rs = alg->roots();
    long max_abs = 0;
    std::vector<RootVec> all;
    for (const RootVec& a : rs.positive_roots()) {
      all.push_back(a);
      RootVec neg(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      all.push_back(neg);
    }
    for (const RootVec& a : all)
      for (const RootVec& b : all) {
        RootVec sum(a.size());
        bool zero = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          sum[i] = a[i] + b[i];
          if (sum[i] != 0) zero = false;
        }
        if (zero || !rs.is_root(sum)) continue;
        Rat n = alg->n_constant(a, b);
        long p = rs.string_down(b, a);
        CHECK(abs(n) == Rat(p + 1));
        max_abs = std::max(max_abs, std::labs(n.get_num().get_si()));
      }
    if (t == 'G') CHECK(max_abs == 3);
    if (t == 'A') CHECK(max_abs == 1);
  }
}

TEST_CASE("antisymmetry of the structure constants") {
  auto alg = make_algebra('G', 2);
  const std::size_t n = alg->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVector a = alg->bracket_basis(i, j);
      QVector b = alg->bracket_basis(j, i);
      for (std::size_t k = 0; k < n; ++k) CHECK(a[k] == -b[k]);
    }
}

TEST_CASE("Killing form on A1") {
  auto alg = make_algebra('A', 1);
  const QMatrix& k = alg->killing_gram();
  CHECK(k(alg->e_index(0), alg->f_index(0)) == Rat(4));
  CHECK(k(alg->h_index(0), alg->h_index(0)) == Rat(8));
  CHECK(k(alg->e_index(0), alg->e_index(0)) == Rat(0));
  CHECK(k(alg->e_index(0), alg->h_index(0)) == Rat(0));
}

TEST_CASE("normalized form on A1 is the defining trace form") {
  auto alg = make_algebra('A', 1);
  QMatrix g = alg->form_gram(FormNormalization::kNormalized);
  CHECK(g(alg->e_index(0), alg->f_index(0)) == Rat(1));
  CHECK(g(alg->h_index(0), alg->h_index(0)) == Rat(2));
}

TEST_CASE("both forms are invariant: (x, [y,z]) = ([x,y], z)") {
  for (auto form : {FormNormalization::kKilling, FormNormalization::kNormalized}) {
    auto alg = make_algebra('B', 2);
    QMatrix g = alg->form_gram(form);
    const std::size_t n = alg->dim();
    auto pair = [&](const QVector& x, const QVector& y) {
      Rat s;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (sgn(x[i]) == 0 || sgn(y[j]) == 0) continue;
          s += x[i] * g(i, j) * y[j];
        }
      return s;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k : {std::size_t{0}, n / 2, n - 1}) {
          QVector xi(n), xk(n);
          xi[i] = 1;
          xk[k] = 1;
          QVector yz = alg->bracket_basis(j, k);
          QVector xy = alg->bracket_basis(i, j);
          CHECK(pair(xi, yz) == pair(xy, xk));
        }
  }
}

TEST_CASE("dual bases pair to the identity") {
  for (auto form : {FormNormalization::kKilling, FormNormalization::kNormalized}) {
    auto alg = make_algebra('A', 2);
    QMatrix g = alg->form_gram(form);
    DualBases duals = dual_bases(*alg, g);
    const std::size_t n = alg->dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Rat s;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (sgn(duals.primal[a][i]) == 0 || sgn(duals.dual[b][j]) == 0) continue;
            s += duals.primal[a][i] * g(i, j) * duals.dual[b][j];
          }
        CHECK(s == (a == b ? Rat(1) : Rat(0)));
      }
  }
}

TEST_CASE("dual basis of A1: Killing vs trace normalization") {
  auto alg = make_algebra('A', 1);
  {
    DualBases d = dual_bases(*alg, alg->killing_gram());
    CHECK(d.dual[alg->e_index(0)][alg->f_index(0)] == Rat(1, 4));
    CHECK(d.dual[alg->h_index(0)][alg->h_index(0)] == Rat(1, 8));
  }
  {
    DualBases d = dual_bases(*alg, alg->form_gram(FormNormalization::kNormalized));
    CHECK(d.dual[alg->e_index(0)][alg->f_index(0)] == Rat(1));
    CHECK(d.dual[alg->h_index(0)][alg->h_index(0)] == Rat(1, 2));
  }
}

TEST_CASE("Cartan anti-involution") {
  for (auto [t, r] : {std::pair<char, std::size_t>{'A', 2}, {'G', 2}}) {
    auto alg = make_algebra(t, r);
    CartanInvolutionMap w = cartan_antiinvolution(*alg);
    const std::size_t n = alg->dim();
    // generators swap, Cartan fixed
    for (std::size_t i = 0; i < r; ++i) {
      QVector e(n), f(n), h(n);
      e[alg->e_index(i)] = 1;
      f[alg->f_index(i)] = 1;
      h[alg->h_index(i)] = 1;
      CHECK(w.apply(e) == f);
      CHECK(w.apply(f) == e);
      CHECK(w.apply(h) == h);
    }
    // involution
    CHECK(w.matrix * w.matrix == QMatrix::identity(n));
    // anti-homomorphism on all basis pairs
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        QVector xi(n), xj(n);
        xi[i] = 1;
        xj[j] = 1;
        QVector lhs = w.apply(alg->bracket_basis(i, j));
        QVector rhs = alg->bracket(w.apply(xj), w.apply(xi));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("basis labels round trip") {
  auto alg = make_algebra('B', 2);
  for (std::size_t i = 0; i < alg->dim(); ++i)
    CHECK(alg->index_of_label(alg->basis_label(i)) == i);
  CHECK(alg->basis_label(alg->e_index(0)) == "e_1");
  CHECK(alg->basis_label(alg->f_index(1)) == "f_2");
  CHECK(alg->basis_label(alg->h_index(0)) == "h_1");
  CHECK_THROWS(alg->index_of_label("e_9"));
  CHECK_THROWS(alg->index_of_label("x_1"));
}

TEST_CASE("coroots of long and short roots") {
  auto alg = make_algebra('G', 2);
  // highest root (3,2) is long: theta^vee = h_1 + 2 h_2 in G2
  const auto& c = alg->coroot(alg->roots().num_positive() - 1);
  CHECK(c == std::vector<long>{1, 2});
}
