#include <benchmark/benchmark.h>

#include "curvspace/linsolve.hpp"
#include "curvspace/scenario.hpp"

using namespace curvspace;

namespace {

Matrix random_sparse(std::size_t rows, std::size_t cols, Field f, std::uint64_t seed) {
  DetRng rng(seed);
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.int_in(0, 4) == 0) m.at(r, c) = Scalar(rng.int_in(-3, 3)).promoted(f);
  return m;
}

void BM_rref_dense_rational(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DetRng rng(42);
  Matrix m(n, n, Field::Q);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Scalar(rng.int_in(-9, 9), rng.int_in(1, 9));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_dense_rational)->Arg(16)->Arg(32)->Arg(48);

void BM_kernel_sparse(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_sparse(3 * n, n, Field::Q, 7);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis_matrix(m).cols());
}
BENCHMARK(BM_kernel_sparse)->Arg(64)->Arg(128);

void BM_kernel_sparse_gaussian(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_sparse(2 * n, n, Field::QI, 11);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis_matrix(m).cols());
}
BENCHMARK(BM_kernel_sparse_gaussian)->Arg(64)->Arg(128);

} // namespace
