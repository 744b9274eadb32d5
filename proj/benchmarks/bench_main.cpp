#include <benchmark/benchmark.h>

#include "drazinkit/blockops.hpp"
#include "drazinkit/classify.hpp"
#include "drazinkit/drazin.hpp"
#include "drazinkit/testgen.hpp"

using namespace drazinkit;

namespace {

GenSpec spec_for(Kernel kernel, std::size_t size) {
  GenSpec s;
  s.seed = 2024;
  s.size = size;
  s.index_cap = 3;
  s.kernel = kernel;
  s.entry_bound = kernel == Kernel::Exact ? 3.0 : 2.0;
  return s;
}

template <KernelScalar T>
void BM_DrazinInverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix<T> a = gen_drazin_matrix<T>(spec_for(kernel_of_v<T>, n));
  for (auto _ : state) benchmark::DoNotOptimize(drazin_inverse(a));
}

template <KernelScalar T>
void BM_BlockFormula(benchmark::State& state) {
  const auto bt = gen_random_triple<T>(spec_for(kernel_of_v<T>, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(block_drazin_inverse(bt));
}

template <KernelScalar T>
void BM_GenericOnAssembled(benchmark::State& state) {
  const auto bt = gen_random_triple<T>(spec_for(kernel_of_v<T>, static_cast<std::size_t>(state.range(0))));
  const Matrix<T> a = assemble(bt);
  for (auto _ : state) benchmark::DoNotOptimize(drazin_inverse(a));
}

template <KernelScalar T>
void BM_ClassifyDn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix<T> a = gen_dn_rotated<T>(spec_for(kernel_of_v<T>, n), ClassQuery(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(is_dn(a, ClassQuery(2, 3)));
}

}  // namespace

BENCHMARK(BM_DrazinInverse<Complex>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_DrazinInverse<Gaussian>)->DenseRange(4, 12, 4);
BENCHMARK(BM_BlockFormula<Complex>)->DenseRange(4, 16, 4);
BENCHMARK(BM_GenericOnAssembled<Complex>)->DenseRange(4, 16, 4);
BENCHMARK(BM_BlockFormula<Gaussian>)->DenseRange(2, 6, 2);
BENCHMARK(BM_GenericOnAssembled<Gaussian>)->DenseRange(2, 6, 2);
BENCHMARK(BM_ClassifyDn<Complex>)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_ClassifyDn<Gaussian>)->DenseRange(4, 8, 4);
BENCHMARK_MAIN();
