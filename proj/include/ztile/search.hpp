#pragma once

// Exhaustive complement search in Z_M and the minimal tiling period.
//
// The search for a complement B of A in Z_M fixes 0 in B, then repeatedly
// takes the smallest residue t not yet covered. Whatever translate covers t
// must be A + (t - a) for some a in A, so those |A| candidates are tried in
// increasing order. The remaining problem depends only on the covered set,
// so covered sets that were fully refuted are remembered and skipped.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ztile/tilingset.hpp"

namespace ztile {

class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A witness search came back empty where a theorem says it cannot.
class WitnessViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class CandidateMode { restricted, unrestricted };

struct SearchConfig {
  std::optional<std::uint64_t> max_modulus_override;
  CandidateMode candidate_mode = CandidateMode::restricted;
  int parallelism = 1;  // 0 = auto
  std::optional<std::uint64_t> node_budget;  // per modulus
  bool cyclotomic_pruning = false;
};

enum class ComplementOutcome { found, no_complement, budget_exceeded };

enum class Refutation {
  none,
  size_not_dividing,   // |A| does not divide M
  not_injective,       // two elements of A collide mod M
  cyclotomic,          // pruning: prime-power cyclotomics left for B do not fit |B|
  exhausted,           // backtracking explored everything
};

struct ComplementSearch {
  ComplementOutcome outcome = ComplementOutcome::no_complement;
  Refutation refutation = Refutation::none;
  std::optional<IntegerSet> complement;
  std::uint64_t nodes = 0;
};

struct ComplementOptions {
  std::optional<std::uint64_t> node_budget;
  bool cyclotomic_pruning = false;
  /// Above 1, top-level branches are explored concurrently. Ignored when a
  /// node budget is set, so budget exhaustion stays deterministic.
  int parallelism = 1;
};

/// The lexicographically first complement B (0 in B) under the branching
/// order, or a refutation that is exhaustive.
ComplementSearch find_complement(const IntegerSet& a, std::uint64_t modulus,
                                 const ComplementOptions& options = {});

enum class PeriodStatus { tiles, does_not_tile, inconclusive };
enum class InconclusiveReason { none, budget_exhausted, cap_below_proof_bound };

struct ExploredModulus {
  std::uint64_t modulus = 0;
  ComplementOutcome outcome = ComplementOutcome::no_complement;
  Refutation refutation = Refutation::none;
  friend bool operator==(const ExploredModulus&, const ExploredModulus&) = default;
};

struct PeriodResult {
  PeriodStatus status = PeriodStatus::does_not_tile;
  InconclusiveReason reason = InconclusiveReason::none;
  std::optional<std::uint64_t> period;
  std::optional<IntegerSet> complement;
  std::uint64_t cap_used = 0;
  std::vector<ExploredModulus> explored;
  friend bool operator==(const PeriodResult&, const PeriodResult&) = default;
};

/// (2 diam(A))^d with d the number of distinct primes of |A|, saturating at
/// UINT64_MAX. A least-period tiling whose period has the primes of |A| never
/// exceeds it.
std::uint64_t proof_cap(const IntegerSet& a);

/// Multiples of n whose prime set equals that of n, ascending, up to cap.
std::vector<std::uint64_t> restricted_candidates(std::uint64_t n, std::uint64_t cap);
/// All multiples of n up to cap.
std::vector<std::uint64_t> unrestricted_candidates(std::uint64_t n, std::uint64_t cap);

/// Smallest candidate period admitting a complement. DoesNotTile is only
/// reported when the cap is at least proof_cap(A).
PeriodResult minimal_tiling_period(const IntegerSet& a, const SearchConfig& config = {});

struct TopPowerWitness {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t witness = 0;  // s | M with p^n | s and Phi_s | A(X)
  friend bool operator==(const TopPowerWitness&, const TopPowerWitness&) = default;
};

/// For each p^n exactly dividing M, the smallest s | M with p^n | s and
/// Phi_s | A(X). Requires least_period(B, M) = M (PreconditionFailed
/// otherwise); an empty witness search throws WitnessViolation.
std::vector<TopPowerWitness> top_power_witnesses(const CyclicTiling& tiling);

/// M <= (2 diam(A))^d, d the number of distinct primes of M. Requires M to be
/// the least period and to share its primes with |A|.
bool period_bound_holds(const CyclicTiling& tiling);
/// The same bound for a tile A of Z whose residues mod M are tiling.tile();
/// D is the diameter of A itself. Throws std::invalid_argument on a mismatch.
bool period_bound_holds(const IntegerSet& a, const CyclicTiling& tiling);

}  // namespace ztile
