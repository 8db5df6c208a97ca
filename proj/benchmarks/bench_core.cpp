#include <benchmark/benchmark.h>

#include "catena/ext_lattice.hpp"
#include "catena/group.hpp"
#include "catena/lattice.hpp"

namespace {

catena::RingExtension prime_extension(catena::FiniteCommRing ring) {
  auto S = std::make_shared<catena::FiniteCommRing>(std::move(ring));
  catena::ElemSet seed(S->n);
  seed.set(S->zero);
  seed.set(S->one);
  return catena::RingExtension::from_subring(S, catena::closure_subring(*S, seed));
}

void BM_EnumerateInterval_F4t2(benchmark::State& state) {
  auto F4 = catena::ring_gf(2, 2);
  auto ext = prime_extension(catena::ring_poly_quotient(F4, {0, 0, 1}));
  for (auto _ : state)
    benchmark::DoNotOptimize(catena::enumerate_interval(ext));
}
BENCHMARK(BM_EnumerateInterval_F4t2);

void BM_EnumerateInterval_F2pow4(benchmark::State& state) {
  auto F2 = catena::ring_gf(2, 1);
  auto ext = prime_extension(catena::ring_product({F2, F2, F2, F2}));
  for (auto _ : state)
    benchmark::DoNotOptimize(catena::enumerate_interval(ext));
}
BENCHMARK(BM_EnumerateInterval_F2pow4);

void BM_SubgroupLattice_S4(benchmark::State& state) {
  auto G = catena::symmetric_4();
  for (auto _ : state)
    benchmark::DoNotOptimize(catena::subgroup_lattice(G));
}
BENCHMARK(BM_SubgroupLattice_S4);

void BM_Supersolvable_S4Lattice(benchmark::State& state) {
  auto SL = catena::subgroup_lattice(catena::symmetric_4());
  for (auto _ : state)
    benchmark::DoNotOptimize(catena::is_supersolvable(SL.lattice));
}
BENCHMARK(BM_Supersolvable_S4Lattice);

void BM_TClosure(benchmark::State& state) {
  auto F2 = catena::ring_gf(2, 1);
  auto F4 = catena::ring_gf(2, 2);
  auto ext = prime_extension(catena::ring_product({F2, F2, F4}));
  for (auto _ : state)
    benchmark::DoNotOptimize(catena::t_closure(ext));
}
BENCHMARK(BM_TClosure);

}  // namespace

BENCHMARK_MAIN();
