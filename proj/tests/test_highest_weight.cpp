#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace gaudinlab;
using gaudinlab::testing::make_algebra;
using gaudinlab::testing::weyl_dimension;

namespace {

HighestWeightModule build(char t, std::size_t r, std::vector<long> lambda,
                          std::size_t cap = HighestWeightModule::kDefaultDimCap) {
  return HighestWeightModule::build(make_algebra(t, r), std::move(lambda), cap);
}

}  // namespace

TEST_CASE("dimensions agree with the Weyl formula oracle") {
  struct Case {
    char t;
    std::size_t r;
    std::vector<long> lambda;
  };
  for (const Case& c : {Case{'A', 1, {0}}, {'A', 1, {1}}, {'A', 1, {2}},
                        {'A', 1, {5}}, {'A', 2, {1, 0}}, {'A', 2, {0, 1}},
                        {'A', 2, {1, 1}}, {'A', 2, {2, 1}}, {'B', 2, {1, 0}},
                        {'B', 2, {0, 1}}, {'B', 2, {1, 1}}, {'C', 3, {1, 0, 0}},
                        {'G', 2, {1, 0}}, {'G', 2, {0, 1}}}) {
    auto alg = make_algebra(c.t, c.r);
    auto mod = HighestWeightModule::build(alg, c.lambda);
    Rat expect = weyl_dimension(alg->roots(), c.lambda);
    CHECK_MESSAGE(Rat(static_cast<long>(mod.dim())) == expect,
                  alg->roots().name() << " dim " << mod.dim());
  }
}

TEST_CASE("specific dimension oracles") {
  CHECK(build('A', 1, {2}).dim() == 3);
  CHECK(build('A', 2, {1, 1}).dim() == 8);   // adjoint
  CHECK(build('B', 2, {0, 1}).dim() == 4);   // spin
  CHECK(build('B', 2, {1, 0}).dim() == 5);   // vector
  CHECK(build('G', 2, {1, 0}).dim() == 7);   // short fundamental
  CHECK(build('G', 2, {0, 1}).dim() == 14);  // adjoint
}

TEST_CASE("highest line Gram is 1 and Shapovalov is block diagonal") {
  auto mod = build('A', 2, {1, 1});
  CHECK(mod.blocks().front().gram(0, 0) == Rat(1));
  const QMatrix& g = mod.shapovalov();
  CHECK(g == g.transposed());
  CHECK(rank(g) == mod.dim());
}

TEST_CASE("module action satisfies the defining relations") {
  auto alg = make_algebra('B', 2);
  auto mod = HighestWeightModule::build(alg, {1, 1});
  const std::size_t r = alg->roots().rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const QMatrix& e = mod.action(alg->e_index(i));
      const QMatrix& f = mod.action(alg->f_index(j));
      const QMatrix& h = mod.action(alg->h_index(i));
      QMatrix lhs = commutator(e, f);
      if (i == j) {
        CHECK(lhs == h);
      } else {
        CHECK(lhs.is_zero());
      }
      CHECK(commutator(h, mod.action(alg->e_index(j))) ==
            Rat(alg->roots().cartan(j, i)) * mod.action(alg->e_index(j)));
    }
}

TEST_CASE("action is a Lie algebra homomorphism on all basis pairs") {
  auto alg = make_algebra('A', 2);
  auto mod = HighestWeightModule::build(alg, {1, 1});
  for (std::size_t i = 0; i < alg->dim(); ++i)
    for (std::size_t j = 0; j < alg->dim(); ++j) {
      QMatrix lhs = commutator(mod.action(i), mod.action(j));
      QMatrix rhs = mod.action_of(alg->bracket_basis(i, j));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Shapovalov adjointness: F_i is adjoint to E_i") {
  for (auto [t, r] : {std::pair<char, std::size_t>{'A', 2}, {'G', 2}}) {
    auto alg = make_algebra(t, r);
    std::vector<long> lambda(r, 0);
    lambda[0] = 1;
    if (t == 'A') lambda.assign(r, 1);
    auto mod = HighestWeightModule::build(alg, lambda);
    const QMatrix& g = mod.shapovalov();
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(mod.action(alg->f_index(i)).transposed() * g ==
            g * mod.action(alg->e_index(i)));
      CHECK(mod.action(alg->h_index(i)).transposed() * g ==
            g * mod.action(alg->h_index(i)));
    }
  }
}

TEST_CASE("Casimir scalars on the A1 two-dimensional module") {
  auto alg = make_algebra('A', 1);
  auto mod = HighestWeightModule::build(alg, {1});
  QMatrix trace_cas =
      casimir_matrix(mod, alg->form_gram(FormNormalization::kNormalized));
  CHECK(trace_cas == Rat(3, 2) * QMatrix::identity(2));
  QMatrix killing_cas = casimir_matrix(mod, alg->killing_gram());
  CHECK(killing_cas == Rat(3, 8) * QMatrix::identity(2));
}

TEST_CASE("Casimir is scalar on irreducibles") {
  auto alg = make_algebra('B', 2);
  auto mod = HighestWeightModule::build(alg, {1, 1});
  QMatrix cas = casimir_matrix(mod, alg->form_gram(FormNormalization::kNormalized));
  Rat c = cas(0, 0);
  CHECK(cas == c * QMatrix::identity(mod.dim()));
  CHECK(sgn(c) > 0);
}

TEST_CASE("depth of the lowest weight") {
  auto a1 = make_algebra('A', 1);
  CHECK(irrep_depth(*a1, {3}) == 3);
  auto a2 = make_algebra('A', 2);
  CHECK(irrep_depth(*a2, {1, 1}) == 4);  // 2(alpha_1 + alpha_2)
  auto g2 = make_algebra('G', 2);
  CHECK(irrep_depth(*g2, {1, 0}) == 6);  // 2(2 alpha_1 + alpha_2)
}

TEST_CASE("dimension cap raises a resource error") {
  CHECK_THROWS_AS(build('A', 2, {3, 3}, 10), ResourceError);
}

TEST_CASE("weight multiplicities of the A2 adjoint") {
  auto mod = build('A', 2, {1, 1});
  std::size_t cartan_mult = 0;
  for (const auto& block : mod.blocks())
    if (block.content == Content{1, 1}) cartan_mult = block.pivot.size();
  CHECK(cartan_mult == 2);  // zero weight space of the adjoint
}

TEST_CASE("json round trip preserves the module") {
  auto alg = make_algebra('B', 2);
  auto mod = HighestWeightModule::build(alg, {1, 0});
  auto back = HighestWeightModule::from_json(mod.to_json(), alg);
  CHECK(back.dim() == mod.dim());
  CHECK(back.shapovalov() == mod.shapovalov());
  for (std::size_t i = 0; i < alg->dim(); ++i)
    CHECK(back.action(i) == mod.action(i));
}
