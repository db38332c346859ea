#include <benchmark/benchmark.h>

#include "curvspace/catalog.hpp"
#include "curvspace/curvature.hpp"
#include "curvspace/tanaka.hpp"

using namespace curvspace;

namespace {

void BM_pspace_so(benchmark::State& state) {
  CatalogEntry so = so_entry(static_cast<std::size_t>(state.range(0)), Field::Q);
  for (auto _ : state) benchmark::DoNotOptimize(pspace(so.rep).space.dim());
}
BENCHMARK(BM_pspace_so)->Arg(3)->Arg(4)->Arg(5);

void BM_rspace_so(benchmark::State& state) {
  CatalogEntry so = so_entry(static_cast<std::size_t>(state.range(0)), Field::Q);
  for (auto _ : state) benchmark::DoNotOptimize(rspace(so.rep).space.dim());
}
BENCHMARK(BM_rspace_so)->Arg(3)->Arg(4)->Arg(5);

void BM_pspace_tensor_pair(benchmark::State& state) {
  CatalogEntry pair = so_pair_tensor_entry(3, 3, Field::QI);
  for (auto _ : state) benchmark::DoNotOptimize(pspace(pair.rep).space.dim());
}
BENCHMARK(BM_pspace_tensor_pair);

void BM_prolong_cubic(benchmark::State& state) {
  CatalogEntry cubic = sl2_irrep_entry(3);
  for (auto _ : state) benchmark::DoNotOptimize(full_prolongation(cubic.rep).assembled_dim);
}
BENCHMARK(BM_prolong_cubic);

void BM_first_layer_sp4(benchmark::State& state) {
  CatalogEntry sp4 = sp_entry(4, Field::QI);
  for (auto _ : state) {
    TanakaTower tower(build_base_grading(sp4.rep));
    benchmark::DoNotOptimize(tower.extend());
  }
}
BENCHMARK(BM_first_layer_sp4);

} // namespace
