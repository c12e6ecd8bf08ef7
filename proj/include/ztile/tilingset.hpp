#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ztile/kernels.hpp"
#include "ztile/polyring.hpp"

namespace ztile {

/// Raised when the direct and cyclotomic tiling checks disagree. That can only
/// mean an implementation bug, never bad input.
class InconsistentRoutes : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A nonempty finite set of nonnegative integers, stored strictly increasing.
class IntegerSet {
 public:
  /// Throws std::invalid_argument if empty or not strictly increasing.
  explicit IntegerSet(std::vector<std::uint64_t> elements);
  IntegerSet(std::initializer_list<std::uint64_t> elements);
  /// Sorts first; duplicates are still an error.
  static IntegerSet from_unsorted(std::vector<std::uint64_t> elements);

  std::span<const std::uint64_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::uint64_t min() const noexcept { return elements_.front(); }
  std::uint64_t max() const noexcept { return elements_.back(); }
  std::uint64_t diameter() const noexcept { return max() - min(); }
  bool is_normalized() const noexcept { return min() == 0; }
  bool contains(std::uint64_t x) const noexcept;

  /// Residues mod m, or nullopt if two elements collide.
  std::optional<IntegerSet> reduced_mod(std::uint64_t m) const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<std::uint64_t> elements_;
};

/// A - min(A).
IntegerSet normalize(const IntegerSet& a);

/// sum_{a in A} X^a. For a normalized set the degree is the diameter.
IntPolynomial mask_polynomial(const IntegerSet& a);

struct TilingVerdict {
  bool tiles = false;
  bool direct_route = false;
  bool cyclotomic_route = false;
  bool size_product_matches = false;   // |A||B| = M
  std::optional<std::uint64_t> first_overcovered;
  std::optional<std::uint64_t> first_uncovered;
  std::optional<std::uint64_t> failing_divisor;  // smallest s | M, s > 1, with Phi_s not dividing A(X)B(X)
};

/// Route (i): every residue of Z_M is a + b for exactly one pair.
kernels::CoverageSummary direct_tiling_route(const IntegerSet& a, const IntegerSet& b,
                                             std::uint64_t modulus, int threads = 1);

/// Route (ii): |A||B| = M and Phi_s | A(X)B(X) mod X^M - 1 for all s | M, s > 1.
/// Returns the first failing divisor, 1 for a size mismatch, nullopt on success.
std::optional<std::uint64_t> cyclotomic_tiling_route(const IntegerSet& a, const IntegerSet& b,
                                                     std::uint64_t modulus, int threads = 1);

/// Runs both routes. Throws InconsistentRoutes if they disagree.
TilingVerdict is_tiling(const IntegerSet& a, const IntegerSet& b, std::uint64_t modulus,
                        int threads = 1);

/// Smallest d | M with B + d = B in Z_M. B must lie in [0, M).
std::uint64_t least_period(const IntegerSet& b, std::uint64_t modulus);

/// All s <= bound with Phi_s | A(X). Indices with phi(s) > diam(A) are skipped.
std::vector<std::uint64_t> cyclotomic_divisors(const IntegerSet& a, std::uint64_t bound);

/// The s in `candidates` with Phi_s | A(X), in the given order.
std::vector<std::uint64_t> cyclotomic_divisors_among(const IntegerSet& a,
                                                     std::span<const std::uint64_t> candidates);

/// A verified factorization A + B = Z_M. Construction runs is_tiling.
class CyclicTiling {
 public:
  /// Throws std::invalid_argument if the triple is not a tiling.
  CyclicTiling(IntegerSet tile, IntegerSet complement, std::uint64_t modulus, int threads = 1);

  const IntegerSet& tile() const noexcept { return tile_; }
  const IntegerSet& complement() const noexcept { return complement_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const CyclicTiling&, const CyclicTiling&) = default;

 private:
  IntegerSet tile_;
  IntegerSet complement_;
  std::uint64_t modulus_;
};

}  // namespace ztile
