// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "ztile/constructions.hpp"
#include "ztile/corpus.hpp"

using namespace ztile;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = v.ok && in_time;
  std::printf("criterion %2d: %s  %s [%s; %.2f s of %.0f s allowed]\n", id, pass ? "PASS" : "FAIL", title,
              v.detail.c_str(), secs, limit_s);
  std::fflush(stdout);
  return pass;
}

std::vector<CorpusRecord> corpus(std::uint64_t d, int jobs = 0) {
  CorpusOptions o;
  o.max_diameter = d;
  o.jobs = jobs;
  return build_corpus(o);
}

std::string corpus_bytes(std::uint64_t d, int jobs) {
  std::ostringstream os;
  write_corpus(corpus(d, jobs), os);
  return os.str();
}

Verdict cyclotomic_identity() {
  int bad = 0;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    IntPolynomial prod{1};
    for (const auto d : divisors(n)) prod = prod * cyclotomic(d);
    bad += !(prod == IntPolynomial::x_pow_minus_one(n));
    bad += *cyclotomic(n).degree() != euler_phi(n);
  }
  return {bad == 0, std::to_string(bad) + " mismatches over N, s <= 300"};
}

Verdict long_period_construction() {
  const auto inst = long_period_tiling({});
  const auto v = validate_instance(inst, 0);
  const auto fm = factorize(inst.modulus).primes();
  const bool primes = fm == std::vector<std::uint64_t>{7, 11, 13} &&
                      factorize(inst.tile.size()).primes() == fm;
  const bool base_proper = v.least_period_base < inst.modulus && inst.modulus % v.least_period_base == 0;
  const bool ok = v.tiles_with_base && v.tiles_with_shifted && v.least_period_shifted == inst.modulus &&
                  base_proper && primes && v.diam == 276652 && v.diam_bound_holds;
  std::ostringstream d;
  d << "M=" << inst.modulus << ", diam=" << v.diam << " <= " << v.diam_bound
    << ", least periods B=" << v.least_period_shifted << " B0=" << v.least_period_base;
  return {ok, d.str()};
}

Verdict counterexamples() {
  std::ostringstream d;
  bool ok = true;
  for (const auto& [p, q] : {std::pair<std::uint64_t, std::uint64_t>{7, 11}, {11, 13}}) {
    const auto r = cyclotomic_square_counterexample(p, q);
    const std::uint64_t expected_diam = (p - 1) * p + (q - 1) * q;
    const std::uint64_t m = p * p * q * q;
    // diam < (p-1)M/p  <=>  p diam < (p-1) M, compared exactly.
    const bool fails = p * r.diam < (p - 1) * m;
    ok = ok && r.diam == expected_diam && r.modulus == m && r.lcm_spectrum == m && fails &&
         r.diameter_bound_fails;
    d << "(" << p << "," << q << "): " << r.diam << " < " << r.eq3_rhs_floor << "  ";
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  int failures = 0;
  const auto check = [&](bool pass) { failures += !pass; };

  check(run_criterion(1, "cyclotomic identity and degrees", 10, cyclotomic_identity));
  check(run_criterion(2, "long-period construction at (7,11,13,2)", 60, long_period_construction));
  check(run_criterion(3, "diameter counterexamples at (7,11) and (11,13)", 5, counterexamples));

  std::vector<CorpusRecord> small;  // every normalized A inside {0..10}
  check(run_criterion(4, "restricted search equals unrestricted search, A inside {0..10}", 600, [&] {
    small = corpus(10);
    int mismatches = 0;
    SearchConfig unrestricted;
    unrestricted.candidate_mode = CandidateMode::unrestricted;
    for (const auto& rec : small) {
      const auto u = minimal_tiling_period(rec.set, unrestricted);
      mismatches += u.status != rec.min_period.status || u.period != rec.min_period.period;
      mismatches += rec.min_period.status == PeriodStatus::inconclusive;
    }
    return Verdict{mismatches == 0,
                   std::to_string(small.size()) + " sets, " + std::to_string(mismatches) + " discrepancies"};
  }));

  check(run_criterion(5, "top-power witnesses on least-period tilings", 60, [&] {
    int tested = 0, violations = 0;
    for (const auto& rec : small) {
      if (!rec.min_period.complement) continue;
      const std::uint64_t m = *rec.min_period.period;
      const CyclicTiling t(*rec.set.reduced_mod(m), *rec.min_period.complement, m);
      if (least_period(t.complement(), t.modulus()) != t.modulus()) continue;
      ++tested;
      try {
        const auto w = top_power_witnesses(t);
        violations += w.size() != factorize(t.modulus()).distinct_primes();
      } catch (const WitnessViolation&) {
        ++violations;
      }
    }
    return Verdict{violations == 0 && tested > 0,
                   std::to_string(tested) + " tilings, " + std::to_string(violations) + " violations"};
  }));

  check(run_criterion(6, "period bound M <= (2D)^d on minimal tilings", 60, [&] {
    int tested = 0, failed = 0;
    for (const auto& rec : small) {
      if (!rec.min_period.complement) continue;
      ++tested;
      const std::uint64_t m = *rec.min_period.period;
      const CyclicTiling t(*rec.set.reduced_mod(m), *rec.min_period.complement, m);
      failed += !period_bound_holds(rec.set, t);
    }
    return Verdict{failed == 0 && tested > 0,
                   std::to_string(tested) + " tilings, " + std::to_string(failed) + " failures"};
  }));

  check(run_criterion(7, "Coven-Meyerowitz conditions on corpus tiles", 120, [&] {
    int tiles = 0, failures7 = 0;
    for (const auto& rec : small) {
      if (rec.min_period.status != PeriodStatus::tiles) continue;
      ++tiles;
      const auto& r = rec.analysis;
      failures7 += !r.t1;
      if (factorize(rec.set.size()).distinct_primes() <= 2) failures7 += !r.t2;
      if (r.t1 && r.t2) {
        failures7 += find_complement(rec.set, r.lcm_sa).outcome != ComplementOutcome::found;
        failures7 += r.lcm_sa > 2 * r.diam && r.lcm_sa != 1;
      }
    }
    return Verdict{failures7 == 0 && tiles > 0,
                   std::to_string(tiles) + " tiles, " + std::to_string(failures7) + " failures"};
  }));

  check(run_criterion(8, "two-prime fiber decompositions", 120, [&] {
    int tested = 0, failures8 = 0;
    for (const auto& rec : small) {
      if (rec.min_period.status != PeriodStatus::tiles) continue;
      const auto primes = factorize(rec.set.size()).primes();
      const auto& r = rec.analysis;
      if (primes.size() != 2 || !r.phi_lcm_divides) continue;
      ++tested;
      const std::uint64_t m = r.lcm_sa, p = primes[0], q = primes[1];
      const auto d = fiber_decompose(rec.set, m, p, q);
      if (!d) {
        ++failures8;
        continue;
      }
      const auto fiber_diam = [&](std::uint64_t base, std::uint64_t prime) {
        auto e = fiber_elements(base, m, prime);
        return *std::max_element(e.begin(), e.end()) - *std::min_element(e.begin(), e.end());
      };
      for (const auto x : d->p_fibers) failures8 += fiber_diam(x, p) != (p - 1) * (m / p);
      for (const auto x : d->q_fibers) failures8 += fiber_diam(x, q) != (q - 1) * (m / q);
      failures8 += rec.set.diameter() < (p - 1) * (m / p);
    }
    return Verdict{failures8 == 0 && tested > 0,
                   std::to_string(tested) + " tiles, " + std::to_string(failures8) + " failures"};
  }));

  check(run_criterion(9, "direct and cyclotomic routes agree on 10^4 random instances", 120, [&] {
    std::mt19937_64 rng(2024);
    int tilings = 0;
    for (int iter = 0; iter < 10000; ++iter) {
      const std::uint64_t m = 1 + rng() % 60;
      const auto divs = divisors(m);
      const std::uint64_t k = divs[rng() % divs.size()];
      std::vector<std::uint64_t> a, b;
      if (iter % 2 == 0) {
        // A tiling: one representative per class mod k, B = multiples of k.
        for (std::uint64_t r = 0; r < k; ++r) a.push_back(r + k * (rng() % (m / k)));
        for (std::uint64_t j = 0; j < m / k; ++j) b.push_back(j * k);
      } else {
        std::vector<std::uint64_t> pool(m);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        a.assign(pool.begin(), pool.begin() + k);
        std::shuffle(pool.begin(), pool.end(), rng);
        b.assign(pool.begin(), pool.begin() + 1 + rng() % m);
      }
      const auto na = normalize(IntegerSet::from_unsorted(a));
      const auto nb = normalize(IntegerSet::from_unsorted(b));
      tilings += is_tiling(na, nb, m).tiles;  // throws InconsistentRoutes on disagreement
    }
    return Verdict{true, "10000 instances, " + std::to_string(tilings) + " tilings, 0 inconsistencies"};
  }));

  check(run_criterion(10, "corpus output identical for 1, 2 and 8 workers", 600, [&] {
    const auto one = corpus_bytes(10, 1);
    const bool same = corpus_bytes(10, 2) == one && corpus_bytes(10, 8) == one;
    return Verdict{same, std::to_string(one.size()) + " bytes"};
  }));

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
