#pragma once

// Coven-Meyerowitz spectrum and conditions (T1)/(T2), the diameter bounds
// that follow from them, and fiber decompositions over Z_M with M = p^a q^b.

#include <cstdint>
#include <optional>
#include <vector>

#include "ztile/tilingset.hpp"

namespace ztile {

struct CmReport {
  std::vector<std::uint64_t> spectrum;  // S_A, ascending
  bool t1 = false;
  bool t2 = false;
  std::uint64_t lcm_sa = 1;
  bool phi_lcm_divides = false;  // Phi_{lcm(S_A)} | A(X)
  std::uint64_t diam = 0;
  std::optional<bool> half_bound_holds;  // diam >= lcm/2, only when phi_lcm_divides
  std::optional<bool> eq3_holds;         // diam >= (p-1)/p lcm, p least prime of |A|; absent for |A| = 1
  friend bool operator==(const CmReport&, const CmReport&) = default;
};

/// Prime powers p^a with Phi_{p^a} | A(X). Phi_{p^a} | A(X) forces p | A(1) = |A|,
/// so only the primes of |A| are tried.
std::vector<std::uint64_t> spectrum(const IntegerSet& a);

/// |A| = prod_{p^a in S_A} p
bool check_t1(const IntegerSet& a);
bool check_t1(const IntegerSet& a, const std::vector<std::uint64_t>& spectrum);

/// Phi_{s_1...s_k} | A(X) for all choices of powers of k >= 2 distinct primes from S_A.
bool check_t2(const IntegerSet& a);
bool check_t2(const IntegerSet& a, const std::vector<std::uint64_t>& spectrum);

CmReport cm_report(const IntegerSet& a);

/// A mod M written as a union of cosets x + <M/p> and x + <M/q>.
struct FiberDecomposition {
  std::uint64_t modulus = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> p_fibers;  // base residues
  std::vector<std::uint64_t> q_fibers;
  bool unique = true;  // false when another decomposition exists
  friend bool operator==(const FiberDecomposition&, const FiberDecomposition&) = default;
};

/// The set of residues {x + k M/p : 0 <= k < p}.
std::vector<std::uint64_t> fiber_elements(std::uint64_t base, std::uint64_t modulus,
                                          std::uint64_t prime);

/// Exhaustive search for a decomposition of the multiset A mod M into p- and
/// q-fibers, always branching on the smallest residue still uncovered and
/// trying its p-fiber before its q-fiber. p == q selects single-prime mode.
/// nullopt certifies that no decomposition exists.
std::optional<FiberDecomposition> fiber_decompose(const IntegerSet& a, std::uint64_t modulus,
                                                  std::uint64_t p, std::uint64_t q);

}  // namespace ztile
