#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "antihorn/clause.hpp"
#include "antihorn/gf2m.hpp"
#include "antihorn/learner.hpp"
#include "antihorn/transform.hpp"
#include "antihorn/word.hpp"
#include "antihorn/world.hpp"

using namespace antihorn;

namespace {

WorldParams benchParams(std::uint64_t seed, int k, int n_max) {
  WorldParams p;
  p.seed = seed;
  p.k = k;
  p.n_max = n_max;
  p.census = Poly({3});
  p.bound = Poly({2, 1});
  p.density = Rational{3, 4};
  return p;
}

void BM_FormulaDerives(benchmark::State& state) {
  const AntiHornFormula gamma = AntiHornFormula::parse(
      "0 -> 0 ; 0 -> 1 ; 0 -> 00 | 01 ; 0 -> 10 ; 0 -> 11 | 000 ; 0 -> 001 ; "
      "0 -> 010 | 011 ; 0 -> 100");
  const AntiHornFormula delta = AntiHornFormula::parse(
      "0 -> 0 | 1 ; 0 -> 00 | 01 | 10 ; 0 -> 10 | 11 ; 0 -> 001 | 100 ; "
      "0 -> 11 | 000 | 111 ; 0 -> 100 | 101");
  for (auto _ : state) benchmark::DoNotOptimize(derives(gamma, delta));
}
BENCHMARK(BM_FormulaDerives);

void BM_WorldGenerate(benchmark::State& state) {
  const WorldParams params = benchParams(7, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SparseWorld world = SparseWorld::generate(params);
    benchmark::DoNotOptimize(world.sparseSet().size());
  }
}
BENCHMARK(BM_WorldGenerate)->Arg(4)->Arg(6)->Arg(8);

void BM_LearnSat(benchmark::State& state) {
  const WorldParams params = benchParams(7, static_cast<int>(state.range(0)), 5);
  const SparseWorld world = SparseWorld::generate(params);
  const TargetLanguage target(world);
  const Word z = Word::parse("0");
  for (auto _ : state) {
    AntiHornFormula gamma = learnSat(world, target, world.params().n_max, z);
    benchmark::DoNotOptimize(gamma.size());
  }
}
BENCHMARK(BM_LearnSat)->Arg(1)->Arg(2)->Arg(3);

void BM_LearnAll(benchmark::State& state) {
  const WorldParams params = benchParams(11, 2, static_cast<int>(state.range(0)));
  const SparseWorld world = SparseWorld::generate(params);
  const TargetLanguage target(world);
  for (auto _ : state) {
    FormulaList list = learnAll(world, target, world.params().n_max);
    benchmark::DoNotOptimize(list.formulas.size());
  }
}
BENCHMARK(BM_LearnAll)->Arg(4)->Arg(6);

void BM_EncodeTuple(benchmark::State& state) {
  const std::vector<Word> tuple = {Word::parse("101"), Word::parse("_"), Word::parse("0110")};
  for (auto _ : state) benchmark::DoNotOptimize(encodeTuple(tuple, 3));
}
BENCHMARK(BM_EncodeTuple);

void BM_FieldMul(benchmark::State& state) {
  const FieldCtx f = FieldCtx::build(static_cast<int>(state.range(0)));
  std::uint64_t x = 0x9e3779b97f4a7c15ull;
  for (auto _ : state) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    const FieldElement a = f.element(x % f.order());
    const FieldElement b = f.element((x >> 20) % f.order());
    benchmark::DoNotOptimize(f.mul(a, b));
  }
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(18);

void BM_Vandermonde(benchmark::State& state) {
  const FieldCtx f = FieldCtx::build(6);
  const int n = static_cast<int>(state.range(0));
  std::vector<FieldElement> us, vs;
  for (int i = 0; i < n; ++i) {
    us.push_back(f.element(static_cast<std::uint64_t>(7 * i + 3) % f.order()));
    vs.push_back(f.element(static_cast<std::uint64_t>(13 * i + 5) % f.order()));
  }
  for (auto _ : state) benchmark::DoNotOptimize(solveVandermonde(f, us, vs));
}
BENCHMARK(BM_Vandermonde)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
