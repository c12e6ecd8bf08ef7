#include "ztile/kernels.hpp"

#include <algorithm>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ztile {

int resolve_threads(int requested) noexcept {
  if (requested > 0) return requested;
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {
namespace {
// Below this many residues the fork/join overhead dominates.
constexpr std::size_t kParallelThreshold = 1 << 15;

bool go_parallel(std::size_t work, int threads) {
  return resolve_threads(threads) > 1 && work >= kParallelThreshold;
}
}  // namespace

namespace serial {

std::vector<std::int64_t> sumset_counts(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b, std::uint64_t m) {
  std::vector<std::int64_t> counts(m, 0);
  for (const auto x : a) {
    const std::uint64_t xr = x % m;
    for (const auto y : b) {
      std::uint64_t r = xr + y % m;
      if (r >= m) r -= m;
      ++counts[r];
    }
  }
  return counts;
}

std::vector<std::int64_t> fold(std::span<const std::int64_t> f, std::uint64_t s) {
  std::vector<std::int64_t> out(s, 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i % s] += f[i];
  return out;
}

std::vector<std::int64_t> shift_difference(std::span<const std::int64_t> v, std::uint64_t shift) {
  const std::size_t n = v.size();
  std::vector<std::int64_t> out(n);
  if (n == 0) return out;
  shift %= n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = (i + n - shift) % n;
    out[i] = v[src] - v[i];
  }
  return out;
}

bool all_zero(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

CoverageSummary coverage(std::span<const std::int64_t> counts) {
  CoverageSummary s;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] > 1 && !s.first_overcovered) s.first_overcovered = r;
    if (counts[r] == 0 && !s.first_uncovered) s.first_uncovered = r;
  }
  s.exact = !s.first_overcovered && !s.first_uncovered;
  return s;
}

}  // namespace serial

namespace omp {

std::vector<std::int64_t> sumset_counts(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b, std::uint64_t m,
                                        int threads) {
  std::vector<std::int64_t> counts(m, 0);
  const auto na = static_cast<std::int64_t>(a.size());
  std::int64_t* out = counts.data();
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < na; ++i) {
    const std::uint64_t xr = a[i] % m;
    for (const auto y : b) {
      std::uint64_t r = xr + y % m;
      if (r >= m) r -= m;
#pragma omp atomic
      ++out[r];
    }
  }
  return counts;
}

std::vector<std::int64_t> fold(std::span<const std::int64_t> f, std::uint64_t s, int threads) {
  std::vector<std::int64_t> out(s, 0);
  const auto ns = static_cast<std::int64_t>(s);
  const std::size_t n = f.size();
  // Each output residue is owned by exactly one iteration.
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::int64_t r = 0; r < ns; ++r) {
    std::int64_t acc = 0;
    for (std::size_t i = static_cast<std::size_t>(r); i < n; i += s) acc += f[i];
    out[r] = acc;
  }
  return out;
}

std::vector<std::int64_t> shift_difference(std::span<const std::int64_t> v, std::uint64_t shift,
                                           int threads) {
  const std::size_t n = v.size();
  std::vector<std::int64_t> out(n);
  if (n == 0) return out;
  shift %= n;
  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < nn; ++i) {
    const std::size_t src = (static_cast<std::size_t>(i) + n - shift) % n;
    out[i] = v[src] - v[i];
  }
  return out;
}

bool all_zero(std::span<const std::int64_t> v, int threads) {
  const auto n = static_cast<std::int64_t>(v.size());
  std::int64_t nonzero = 0;
#pragma omp parallel for schedule(static) reduction(+ : nonzero) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < n; ++i) nonzero += (v[i] != 0);
  return nonzero == 0;
}

CoverageSummary coverage(std::span<const std::int64_t> counts, int threads) {
  const auto n = static_cast<std::int64_t>(counts.size());
  std::int64_t first_over = n;
  std::int64_t first_under = n;
#pragma omp parallel for schedule(static) reduction(min : first_over, first_under) \
    num_threads(resolve_threads(threads))
  for (std::int64_t r = 0; r < n; ++r) {
    if (counts[r] > 1 && r < first_over) first_over = r;
    if (counts[r] == 0 && r < first_under) first_under = r;
  }
  CoverageSummary s;
  if (first_over < n) s.first_overcovered = static_cast<std::uint64_t>(first_over);
  if (first_under < n) s.first_uncovered = static_cast<std::uint64_t>(first_under);
  s.exact = !s.first_overcovered && !s.first_uncovered;
  return s;
}

}  // namespace omp

std::vector<std::int64_t> sumset_counts(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b, std::uint64_t m,
                                        int threads) {
  if (go_parallel(a.size() * b.size(), threads)) return omp::sumset_counts(a, b, m, threads);
  return serial::sumset_counts(a, b, m);
}

std::vector<std::int64_t> fold(std::span<const std::int64_t> f, std::uint64_t s, int threads) {
  if (go_parallel(f.size(), threads)) return omp::fold(f, s, threads);
  return serial::fold(f, s);
}

std::vector<std::int64_t> shift_difference(std::span<const std::int64_t> v, std::uint64_t shift,
                                           int threads) {
  if (go_parallel(v.size(), threads)) return omp::shift_difference(v, shift, threads);
  return serial::shift_difference(v, shift);
}

bool all_zero(std::span<const std::int64_t> v, int threads) {
  if (go_parallel(v.size(), threads)) return omp::all_zero(v, threads);
  return serial::all_zero(v);
}

CoverageSummary coverage(std::span<const std::int64_t> counts, int threads) {
  if (go_parallel(counts.size(), threads)) return omp::coverage(counts, threads);
  return serial::coverage(counts);
}

}  // namespace kernels
}  // namespace ztile
