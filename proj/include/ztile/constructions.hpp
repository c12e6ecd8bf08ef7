#pragma once

// Explicit objects: the three-prime long-period tiling built by column shifts
// of a lattice tiling, the Phi_{p^2} Phi_{q^2} diameter counterexample, and
// the "box" tiles used as a (T1)+(T2) corpus.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ztile/cmcheck.hpp"
#include "ztile/tilingset.hpp"

namespace ztile {

/// The shifted polynomial has a coefficient outside {0, 1}.
class InvalidShift : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LongPeriodParams {
  std::uint64_t p1 = 7, p2 = 11, p3 = 13;
  unsigned n = 2;
  std::optional<double> target_beta;  // in (0, 3/2)
  std::optional<double> epsilon;      // > 0
  friend bool operator==(const LongPeriodParams&, const LongPeriodParams&) = default;
};

/// Throws std::invalid_argument unless p1 < p2 < p3 < 2 p1 are primes, n >= 2,
/// M = (p1 p2 p3)^n fits in 64 bits and the optional reals are in range.
void validate(const LongPeriodParams& params);

struct LongPeriodInstance {
  LongPeriodParams params;
  std::uint64_t modulus = 0;       // (p1 p2 p3)^n
  IntegerSet tile{0};              // prod_i (1 + X^{M/p_i^n} + ... + X^{(p_i-1)M/p_i^n})
  IntegerSet base_complement{0};   // prod_i B_i(X), exponents mod M
  IntegerSet complement{0};        // base with one column shifted per direction
  std::uint64_t shift_a = 0;
  std::uint64_t shift_b = 0;       // may exceed M; applied mod M
  friend bool operator==(const LongPeriodInstance&, const LongPeriodInstance&) = default;
};

/// Builds the tile, the lattice complement B_0 and the column-shifted
/// complement B. Each shift term (X^{c+u} - X^c) B_i(X) moves one column of
/// B_0 (the progression B_i, translated by c) along direction i. Throws
/// InvalidShift if the result is not a 0/1 polynomial.
LongPeriodInstance long_period_tiling(const LongPeriodParams& params);

struct LongPeriodValidation {
  bool tiles_with_base = false;
  bool tiles_with_shifted = false;
  std::uint64_t least_period_shifted = 0;
  std::uint64_t least_period_base = 0;
  bool base_periodic_each_direction = false;  // B_0 is M/p_i-periodic for every i
  bool prime_sets_match = false;              // primes(M) = primes(|A|)
  std::uint64_t diam = 0;
  std::uint64_t diam_bound = 0;               // 3 M / p1^{n-1}
  bool diam_bound_holds = false;
  std::uint64_t diam_formula = 0;             // sum_i (p_i - 1) M / p_i^n
  friend bool operator==(const LongPeriodValidation&, const LongPeriodValidation&) = default;
};

LongPeriodValidation validate_instance(const LongPeriodInstance& inst, int threads = 1);

struct ExponentReport {
  std::uint64_t diam = 0;
  std::uint64_t diam_bound = 0;
  bool diam_bound_holds = false;
  double achieved_exponent = 0;  // log M / log diam(A)
  std::optional<double> alpha;   // (3 - eps) n / (2n + 1)
  std::optional<bool> beta_below_alpha_below_three_halves;
  std::optional<bool> prime_large_enough;       // (p1^eps / 2)^n > (3/2)^{3/2}
  std::optional<bool> final_inequality_holds;   // M >= (3 p1 p2^n p3^n)^beta >= diam^beta
  friend bool operator==(const ExponentReport&, const ExponentReport&) = default;
};

ExponentReport exponent_report(const LongPeriodInstance& inst);

struct CounterexampleReport {
  std::uint64_t p = 0, q = 0;
  IntegerSet tile{0};
  std::uint64_t modulus = 0;           // p^2 q^2
  std::uint64_t lcm_spectrum = 0;      // computed lcm(S_A)
  std::uint64_t diam = 0;              // (p-1)p + (q-1)q
  std::uint64_t eq3_rhs_floor = 0;     // floor((p-1) M / p)
  bool diameter_bound_fails = false;   // diam < (p-1) M / p, exact
  CmReport analysis;
  friend bool operator==(const CounterexampleReport&, const CounterexampleReport&) = default;
};

/// The set with mask Phi_{p^2}(X) Phi_{q^2}(X) for primes p < q < 2p.
CounterexampleReport cyclotomic_square_counterexample(std::uint64_t p, std::uint64_t q);

/// Complete residue system mod N = prod p^alpha with mask
/// prod_p prod_{j=1..alpha} (1 + X^{N/p^j} + ... + X^{(p-1)N/p^j}).
/// Entries sharing a prime are merged; primes are laid out in increasing order.
IntegerSet standard_tile(const std::vector<std::pair<std::uint64_t, unsigned>>& prime_powers);

}  // namespace ztile
