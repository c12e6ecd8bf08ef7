#pragma once

// Data-parallel inner loops over residues of Z_M. Every kernel has a serial
// reference in kernels::serial and an OpenMP version in kernels::omp that
// must produce identical results; the tests and the benchmark compare them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ztile {

/// 0 means "let OpenMP decide"; anything else is taken literally.
int resolve_threads(int requested) noexcept;

namespace kernels {

struct CoverageSummary {
  bool exact = false;  // every residue hit exactly once
  std::optional<std::uint64_t> first_overcovered;
  std::optional<std::uint64_t> first_uncovered;
  friend bool operator==(const CoverageSummary&, const CoverageSummary&) = default;
};

namespace serial {

/// counts[r] = #{(a, b) : a + b = r mod m}
std::vector<std::int64_t> sumset_counts(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b, std::uint64_t m);
/// Fold a coefficient vector modulo X^s - 1.
std::vector<std::int64_t> fold(std::span<const std::int64_t> f, std::uint64_t s);
/// v * (X^shift - 1) modulo X^{|v|} - 1.
std::vector<std::int64_t> shift_difference(std::span<const std::int64_t> v, std::uint64_t shift);
bool all_zero(std::span<const std::int64_t> v);
CoverageSummary coverage(std::span<const std::int64_t> counts);

}  // namespace serial

namespace omp {

std::vector<std::int64_t> sumset_counts(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b, std::uint64_t m,
                                        int threads);
std::vector<std::int64_t> fold(std::span<const std::int64_t> f, std::uint64_t s, int threads);
std::vector<std::int64_t> shift_difference(std::span<const std::int64_t> v, std::uint64_t shift,
                                           int threads);
bool all_zero(std::span<const std::int64_t> v, int threads);
CoverageSummary coverage(std::span<const std::int64_t> counts, int threads);

}  // namespace omp

// Dispatch: serial below a size threshold or with one thread.
std::vector<std::int64_t> sumset_counts(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b, std::uint64_t m,
                                        int threads = 1);
std::vector<std::int64_t> fold(std::span<const std::int64_t> f, std::uint64_t s, int threads = 1);
std::vector<std::int64_t> shift_difference(std::span<const std::int64_t> v, std::uint64_t shift,
                                           int threads = 1);
bool all_zero(std::span<const std::int64_t> v, int threads = 1);
CoverageSummary coverage(std::span<const std::int64_t> counts, int threads = 1);

}  // namespace kernels
}  // namespace ztile
