#include <necklace/chains.hpp>
#include <necklace/fixtures.hpp>
#include <necklace/hopf.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace necklace;

static void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::vector<std::vector<long>> dense(n, std::vector<long>(n));
  for (auto& row : dense)
    for (auto& x : row) x = rng() % 4 == 0 ? entry(rng) : 0;
  SparseMatrix m = SparseMatrix::from_dense(dense);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->Arg(20)->Arg(60)->Arg(120);

static void BM_LoopsOnSphere(benchmark::State& state) {
  ChainsModel M = to_categorical_coalgebra(fixtures::sphere2());
  const int v = M.C.set_likes.front();
  const int top = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hom_homology(M.C, HomRequest{v, v, 0, top, 8, false, std::nullopt},
                                          CoefficientRing::integers()));
}
BENCHMARK(BM_LoopsOnSphere)->Arg(5)->Arg(8);

static void BM_CoHochschildSphere(benchmark::State& state) {
  ChainsModel M = to_categorical_coalgebra(fixtures::sphere2());
  for (auto _ : state)
    benchmark::DoNotOptimize(coch_homology(M.C, CoChRequest{0, static_cast<int>(state.range(0)), 8, false, std::nullopt},
                                           CoefficientRing::integers()));
}
BENCHMARK(BM_CoHochschildSphere)->Arg(4)->Arg(6);

static void BM_HochschildOfCobarSphere(benchmark::State& state) {
  ChainsModel M = to_categorical_coalgebra(fixtures::sphere2());
  for (auto _ : state)
    benchmark::DoNotOptimize(ch_homology(M.C, ChRequest{0, static_cast<int>(state.range(0)), 8, false, std::nullopt},
                                         CoefficientRing::integers()));
}
BENCHMARK(BM_HochschildOfCobarSphere)->Arg(4);

static void BM_CircleSector(benchmark::State& state) {
  ChainsModel M = to_categorical_coalgebra(fixtures::circle());
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(coch_homology(M.C, CoChRequest{0, 3, static_cast<std::size_t>(w) + 4, true, w},
                                           CoefficientRing::integers()));
}
BENCHMARK(BM_CircleSector)->Arg(1)->Arg(5)->Arg(10);

static void BM_BarEnumeration(benchmark::State& state) {
  ChainsModel M = to_categorical_coalgebra(fixtures::boundary_delta3());
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bar_basis(M.C, BarQuery{d, 6, true}));
}
BENCHMARK(BM_BarEnumeration)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CoproductTetrahedron(benchmark::State& state) {
  ChainsModel M = to_categorical_coalgebra(fixtures::reduced_tetrahedron());
  auto words = all_words(M.C, 3, static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) {
    LoopBialgebra H(M);
    for (const auto& w : words) benchmark::DoNotOptimize(H.coproduct(w));
  }
  state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_CoproductTetrahedron)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
