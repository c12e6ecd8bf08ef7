#include <doctest.h>

#include <bit>

#include "helpers.hpp"
#include "ztile/constructions.hpp"
#include "ztile/corpus.hpp"
#include "ztile/search.hpp"

using namespace ztile;

namespace {

// Tries every subset of Z_M containing 0 with M/|A| elements.
bool brute_force_complement_exists(const IntegerSet& a, std::uint64_t m) {
  if (m % a.size() != 0) return false;
  const auto reduced = a.reduced_mod(m);
  if (!reduced) return false;
  // translate[b] is the residue mask of A + b.
  std::vector<std::uint32_t> translate(m, 0);
  for (std::uint64_t b = 0; b < m; ++b)
    for (const auto x : reduced->elements()) translate[b] |= std::uint32_t{1} << ((x + b) % m);
  const std::uint32_t full = m == 32 ? ~0u : (std::uint32_t{1} << m) - 1;
  const auto check = [&](std::uint32_t subset) {
    std::uint32_t acc = translate[0];
    for (unsigned i = 0; i + 1 < m; ++i) {
      if (!(subset >> i & 1)) continue;
      if (acc & translate[i + 1]) return false;
      acc |= translate[i + 1];
    }
    return acc == full;
  };
  const unsigned k = static_cast<unsigned>(m / a.size()) - 1;  // elements besides 0
  const unsigned bits = static_cast<unsigned>(m) - 1;          // candidates 1..M-1
  if (k == 0) return check(0);
  // Gosper's hack over k-subsets of the bits.
  for (std::uint32_t s = (std::uint32_t{1} << k) - 1; s < (std::uint32_t{1} << bits);) {
    if (check(s)) return true;
    const std::uint32_t c = s & -s;
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("find_complement examples") {
    const auto a = find_complement(IntegerSet{0, 1}, 4);
    CHECK(a.outcome == ComplementOutcome::found);
    CHECK(a.complement == IntegerSet{0, 2});
    const auto b = find_complement(IntegerSet{0, 1, 4, 5}, 8);
    CHECK(b.complement == IntegerSet{0, 2});
    const auto c = find_complement(IntegerSet{0, 1, 3}, 6);
    CHECK(c.outcome == ComplementOutcome::no_complement);
    CHECK(c.refutation == Refutation::exhausted);
    CHECK(find_complement(IntegerSet{0, 1}, 5).refutation == Refutation::size_not_dividing);
    CHECK(find_complement(IntegerSet{0, 2}, 2).refutation == Refutation::not_injective);
    CHECK_THROWS_AS(find_complement(IntegerSet{1, 2}, 4), std::invalid_argument);
  }

  TEST_CASE("find_complement matches brute force for M <= 24, |A| <= 4") {
    int checked = 0;
    for (std::uint64_t m = 1; m <= 24; ++m) {
      for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
        if (std::popcount(mask) > 3) continue;
        const IntegerSet a = corpus_set(mask);
        if (a.max() >= m) continue;
        const auto found = find_complement(a, m);
        CHECK(found.outcome != ComplementOutcome::budget_exceeded);
        const bool exists = brute_force_complement_exists(a, m);
        CHECK_MESSAGE((found.outcome == ComplementOutcome::found) == exists, "M=", m, " mask=", mask);
        if (found.complement) {
          CHECK(found.complement->contains(0));
          CHECK(is_tiling(a, *found.complement, m).tiles);
        }
        ++checked;
      }
    }
    CHECK(checked > 1000);
  }

  TEST_CASE("candidate generators") {
    CHECK(restricted_candidates(6, 100) == std::vector<std::uint64_t>{6, 12, 18, 24, 36, 48, 54, 72, 96});
    CHECK(restricted_candidates(3, 6) == std::vector<std::uint64_t>{3});
    CHECK(restricted_candidates(1, 100) == std::vector<std::uint64_t>{1});
    CHECK(unrestricted_candidates(3, 10) == std::vector<std::uint64_t>{3, 6, 9});
    CHECK(restricted_candidates(4, 3).empty());
  }

  TEST_CASE("proof_cap") {
    CHECK(proof_cap(IntegerSet{0}) == 1);
    CHECK(proof_cap(IntegerSet{0, 1, 3}) == 6);
    CHECK(proof_cap(IntegerSet{0, 1, 2, 3, 4, 5}) == 100);
  }

  TEST_CASE("minimal_tiling_period examples") {
    const auto one = minimal_tiling_period(IntegerSet{0});
    CHECK(one.status == PeriodStatus::tiles);
    CHECK(one.period == 1u);
    CHECK(one.complement == IntegerSet{0});

    const auto two = minimal_tiling_period(IntegerSet{0, 2});
    CHECK(two.period == 4u);
    CHECK(two.complement == IntegerSet{0, 1});
    REQUIRE(two.explored.size() == 2);
    CHECK(two.explored[0].refutation == Refutation::not_injective);

    const auto four = minimal_tiling_period(IntegerSet{0, 1, 4, 5});
    CHECK(four.period == 8u);
    CHECK(four.complement == IntegerSet{0, 2});

    const auto none = minimal_tiling_period(IntegerSet{0, 1, 3});
    CHECK(none.status == PeriodStatus::does_not_tile);
    CHECK(none.cap_used == 6);
  }

  TEST_CASE("caps below the proof bound never claim DoesNotTile") {
    SearchConfig cfg;
    cfg.max_modulus_override = 5;
    const auto r = minimal_tiling_period(IntegerSet{0, 1, 3}, cfg);
    CHECK(r.status == PeriodStatus::inconclusive);
    CHECK(r.reason == InconclusiveReason::cap_below_proof_bound);
    // A hit below the cap is still a valid answer.
    cfg.max_modulus_override = 4;
    CHECK(minimal_tiling_period(IntegerSet{0, 2}, cfg).period == 4u);
  }

  TEST_CASE("node budget yields Inconclusive") {
    SearchConfig cfg;
    cfg.node_budget = 1;
    const auto r = minimal_tiling_period(IntegerSet{0, 1, 5, 6, 10, 11}, cfg);
    CHECK(r.status == PeriodStatus::inconclusive);
    CHECK(r.reason == InconclusiveReason::budget_exhausted);
    CHECK(r.explored.back().outcome == ComplementOutcome::budget_exceeded);
  }

  TEST_CASE("restricted search equals unrestricted search on small sets") {
    for (std::uint64_t mask = 0; mask < (1u << 8); ++mask) {
      const IntegerSet a = corpus_set(mask);
      SearchConfig u;
      u.candidate_mode = CandidateMode::unrestricted;
      const auto r = minimal_tiling_period(a);
      const auto v = minimal_tiling_period(a, u);
      CHECK(r.status == v.status);
      CHECK(r.period == v.period);
    }
  }

  TEST_CASE("pruning does not change answers") {
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
      const IntegerSet a = corpus_set(mask);
      SearchConfig pruned;
      pruned.cyclotomic_pruning = true;
      const auto r = minimal_tiling_period(a);
      const auto p = minimal_tiling_period(a, pruned);
      CHECK(r.status == p.status);
      CHECK(r.period == p.period);
      CHECK(r.complement == p.complement);
    }
  }

  TEST_CASE("results do not depend on parallelism") {
    for (std::uint64_t mask = 0; mask < (1u << 10); mask += 7) {
      const IntegerSet a = corpus_set(mask);
      SearchConfig cfg;
      const auto base = minimal_tiling_period(a, cfg);
      for (const int threads : {2, 3, 8}) {
        cfg.parallelism = threads;
        const auto r = minimal_tiling_period(a, cfg);
        CHECK(r.status == base.status);
        CHECK(r.period == base.period);
        CHECK(r.complement == base.complement);
      }
      if (base.period) {
        ComplementOptions opts;
        opts.parallelism = 4;
        CHECK(find_complement(a, *base.period, opts).complement == base.complement);
      }
    }
  }

  TEST_CASE("top_power_witnesses examples") {
    CHECK_THROWS_AS(top_power_witnesses(CyclicTiling(IntegerSet{0, 1}, IntegerSet{0, 2}, 4)),
                    PreconditionFailed);
    const auto w = top_power_witnesses(CyclicTiling(IntegerSet{0, 2}, IntegerSet{0, 1}, 4));
    REQUIRE(w.size() == 1);
    CHECK(w[0] == TopPowerWitness{2, 2, 4});
  }

  TEST_CASE("top_power_witnesses on the long-period tiling") {
    const auto inst = long_period_tiling({});
    const auto w = top_power_witnesses(CyclicTiling(inst.tile, inst.complement, inst.modulus));
    REQUIRE(w.size() == 3);
    const std::uint64_t primes[] = {7, 11, 13};
    for (int i = 0; i < 3; ++i) {
      CHECK(w[i].prime == primes[i]);
      CHECK(w[i].exponent == 2);
      CHECK(w[i].witness % (primes[i] * primes[i]) == 0);
      CHECK(inst.modulus % w[i].witness == 0);
      CHECK(divisible_by_cyclotomic(mask_polynomial(inst.tile), w[i].witness));
    }
  }

  TEST_CASE("period_bound_holds examples") {
    CHECK(period_bound_holds(CyclicTiling(IntegerSet{0, 2}, IntegerSet{0, 1}, 4)));
    CHECK(period_bound_holds(CyclicTiling(IntegerSet{0}, IntegerSet{0}, 1)));
    const auto inst = long_period_tiling({});
    CHECK(period_bound_holds(CyclicTiling(inst.tile, inst.complement, inst.modulus)));
    CHECK_THROWS_AS(period_bound_holds(CyclicTiling(IntegerSet{0, 3}, IntegerSet{0, 1, 2}, 6)),
                    PreconditionFailed);
  }

  TEST_CASE("period_bound_holds measures the unreduced tile") {
    // {0, 3} tiles Z_2; the bound uses diam = 3, not the diameter of {0, 1}.
    const CyclicTiling t(IntegerSet{0, 1}, IntegerSet{0}, 2);
    CHECK(period_bound_holds(IntegerSet{0, 3}, t));
    CHECK_THROWS_AS(period_bound_holds(IntegerSet{0, 2}, t), std::invalid_argument);
  }
}
