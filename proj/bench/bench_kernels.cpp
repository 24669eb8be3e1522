// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcong/kernels.hpp"
#include "qcong/rootexpand.hpp"
#include "qcong/sweep.hpp"

namespace {

using qcong::Integer;
using qcong::kernels::IntVec;

IntVec random_vec(std::size_t len, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(-1000000000L, 1000000000L);
  IntVec v(len);
  for (auto& x : v) x = Integer(dist(gen)) * dist(gen);
  return v;
}

void BM_MulSchoolbook(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const IntVec a = random_vec(len, 1), b = random_vec(len, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::kernels::mul_schoolbook(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_MulSchoolbookOmp(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const IntVec a = random_vec(len, 1), b = random_vec(len, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::kernels::mul_schoolbook_omp(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_MulKaratsuba(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto threshold = static_cast<std::size_t>(state.range(1));
  const IntVec a = random_vec(len, 1), b = random_vec(len, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::kernels::mul_karatsuba(a, b, threshold));
}

void BM_ExceptionalReference(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::exceptional_sums_reference(2, n));
}

void BM_ExceptionalOmp(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::exceptional_sums(2, n));
}

void BM_Sweep(benchmark::State& state) {
  qcong::SweepConfig cfg;
  cfg.families = {"theorem1", "theorem2"};
  cfg.a_max = 4;
  cfg.n_max = 7;
  const auto cases = qcong::enumerate_cases(cfg);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcong::run_cases(cases, jobs));
  state.counters["cases"] = static_cast<double>(cases.size());
}

}  // namespace

BENCHMARK(BM_MulSchoolbook)->RangeMultiplier(2)->Range(16, 1024)->Complexity();
BENCHMARK(BM_MulSchoolbookOmp)->RangeMultiplier(2)->Range(16, 1024)->Complexity();
BENCHMARK(BM_MulKaratsuba)
    ->ArgsProduct({{64, 256, 1024}, {8, 16, 24, 32, 64}});
BENCHMARK(BM_ExceptionalReference)->DenseRange(5, 13, 4);
BENCHMARK(BM_ExceptionalOmp)->DenseRange(5, 13, 4);
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
