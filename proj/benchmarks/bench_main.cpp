#include <benchmark/benchmark.h>

#include "gaudinlab/gaudin.hpp"
#include "gaudinlab/linalg.hpp"
#include "gaudinlab/report.hpp"

using namespace gaudinlab;

namespace {

QMatrix dense_test_matrix(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Rat(static_cast<long>((i * 7 + j * 13 + 3) % 11) - 5,
                    static_cast<long>(j % 4 + 1));
  return m;
}

void bench_rref(benchmark::State& state) {
  QMatrix m = dense_test_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(bench_rref)->Arg(16)->Arg(32)->Arg(64);

void bench_hamiltonians(benchmark::State& state) {
  auto alg = std::make_shared<const ChevalleyAlgebra>(build_root_system('A', 1));
  auto mod = std::make_shared<const HighestWeightModule>(
      HighestWeightModule::build(alg, {static_cast<long>(state.range(0))}));
  TensorModule tensor({mod, mod, mod});
  std::vector<Rat> z{Rat(1), Rat(2), Rat(3)};
  QVector mu(alg->dim());
  DualBases duals = dual_bases(*alg, alg->form_gram(FormNormalization::kKilling));
  for (auto _ : state) {
    auto hams = gaudin_hamiltonians(tensor, z, mu, duals);
    benchmark::DoNotOptimize(hams.size());
  }
}
BENCHMARK(bench_hamiltonians)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
