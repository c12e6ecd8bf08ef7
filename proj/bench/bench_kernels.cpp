// Serial reference kernels against their OpenMP counterparts, plus an
// end-to-end tiling check on the long-period instance.

#include <benchmark/benchmark.h>

#include <random>

#include "ztile/constructions.hpp"
#include "ztile/kernels.hpp"

using namespace ztile;

namespace {

std::vector<std::uint64_t> random_residues(std::uint64_t m, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> v(k);
  for (auto& x : v) x = rng() % m;
  return v;
}

std::vector<std::int64_t> random_coeffs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7) - 3;
  return v;
}

// range(0) = modulus, range(1) = threads (0 selects the serial reference)
void BM_SumsetCounts(benchmark::State& st) {
  const auto m = static_cast<std::uint64_t>(st.range(0));
  const auto a = random_residues(m, 64, 1), b = random_residues(m, m / 64, 2);
  const int threads = static_cast<int>(st.range(1));
  for (auto _ : st) {
    auto c = threads == 0 ? kernels::serial::sumset_counts(a, b, m)
                          : kernels::omp::sumset_counts(a, b, m, threads);
    benchmark::DoNotOptimize(c.data());
  }
}

void BM_Fold(benchmark::State& st) {
  const auto f = random_coeffs(static_cast<std::size_t>(st.range(0)), 3);
  const int threads = static_cast<int>(st.range(1));
  const std::uint64_t s = 1001;
  for (auto _ : st) {
    auto g = threads == 0 ? kernels::serial::fold(f, s) : kernels::omp::fold(f, s, threads);
    benchmark::DoNotOptimize(g.data());
  }
}

void BM_ShiftDifference(benchmark::State& st) {
  const auto v = random_coeffs(static_cast<std::size_t>(st.range(0)), 4);
  const int threads = static_cast<int>(st.range(1));
  for (auto _ : st) {
    auto w = threads == 0 ? kernels::serial::shift_difference(v, 37)
                          : kernels::omp::shift_difference(v, 37, threads);
    benchmark::DoNotOptimize(w.data());
  }
}

void BM_Coverage(benchmark::State& st) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(st.range(0)), 1);
  const int threads = static_cast<int>(st.range(1));
  for (auto _ : st) {
    auto c = threads == 0 ? kernels::serial::coverage(counts) : kernels::omp::coverage(counts, threads);
    benchmark::DoNotOptimize(c.exact);
  }
}

void BM_LongPeriodIsTiling(benchmark::State& st) {
  static const auto inst = long_period_tiling({});
  const int threads = static_cast<int>(st.range(0));
  for (auto _ : st) {
    auto v = is_tiling(inst.tile, inst.complement, inst.modulus, threads);
    benchmark::DoNotOptimize(v.tiles);
  }
}

void kernel_args(benchmark::internal::Benchmark* b) {
  for (const std::int64_t n : {1 << 14, 1 << 18, 1 << 21})
    for (const std::int64_t t : {0, 1, 2, 4}) b->Args({n, t});
  b->ArgNames({"n", "threads"});
}

}  // namespace

BENCHMARK(BM_SumsetCounts)->Apply(kernel_args);
BENCHMARK(BM_Fold)->Apply(kernel_args);
BENCHMARK(BM_ShiftDifference)->Apply(kernel_args);
BENCHMARK(BM_Coverage)->Apply(kernel_args);
BENCHMARK(BM_LongPeriodIsTiling)->Arg(1)->Arg(2)->Arg(4)->ArgName("threads")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
