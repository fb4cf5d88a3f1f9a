#include <benchmark/benchmark.h>

#include "manna/classify.hpp"
#include "manna/linprog.hpp"
#include "manna/oracle.hpp"
#include "manna/solve.hpp"
#include "manna/verify.hpp"

namespace {

manna::Problem family(long long c) {
  manna::RatMat u = {{manna::Rat(-1), manna::Rat(-3), manna::Rat(c)},
                     {manna::Rat(-2), manna::Rat(-1), manna::Rat(c)}};
  return manna::make_problem(u);
}

void BM_Classify(benchmark::State& state) {
  const manna::Problem p = family(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(manna::classify(p).kind);
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(-1);

void BM_SolvePositive(benchmark::State& state) {
  const manna::Problem p = family(3);
  for (auto _ : state) benchmark::DoNotOptimize(manna::solve_positive(p));
}
BENCHMARK(BM_SolvePositive);

void BM_SolveNegativeFamily(benchmark::State& state) {
  const manna::Problem p = family(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(manna::solve_negative(p));
}
BENCHMARK(BM_SolveNegativeFamily)->Arg(-1)->Arg(-3);

void BM_SolveNegativeRandom(benchmark::State& state) {
  const manna::Problem p = manna::random_problem(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
      /*seed=*/17, /*mix=*/0.9);
  if (manna::classify(p).kind != manna::Kind::Negative) {
    state.SkipWithError("instance is not negative");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(manna::solve_negative(p));
}
BENCHMARK(BM_SolveNegativeRandom)->Args({3, 4})->Args({4, 5});

void BM_VerifyDivision(benchmark::State& state) {
  const manna::Problem p = family(-1);
  const auto divisions = manna::solve_negative(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        manna::verify_division(p, divisions.front(), manna::Kind::Negative));
}
BENCHMARK(BM_VerifyDivision);

void BM_OracleGrid(benchmark::State& state) {
  const manna::Problem p = family(-1);
  manna::GridSpec spec;
  spec.resolution = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(manna::grid_critical_points(p, spec));
}
BENCHMARK(BM_OracleGrid)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
