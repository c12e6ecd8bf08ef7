#include "ztile/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace ztile {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::invalid_argument("value exceeds 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// {0, step, 2 step, ..., (count-1) step}
std::vector<std::uint64_t> progression(std::uint64_t step, std::uint64_t count) {
  std::vector<std::uint64_t> v(count);
  for (std::uint64_t k = 0; k < count; ++k) v[k] = k * step;
  return v;
}

// Sumset of the factors, each sum reduced mod m (m = 0: no reduction).
// Throws InvalidShift on a repeated sum, i.e. a coefficient above 1.
std::vector<std::uint64_t> product_set(const std::vector<std::vector<std::uint64_t>>& factors,
                                       std::uint64_t m, const char* what) {
  std::vector<std::uint64_t> acc{0};
  for (const auto& f : factors) {
    std::vector<std::uint64_t> next;
    next.reserve(acc.size() * f.size());
    for (const auto x : acc)
      for (const auto y : f) next.push_back(m ? (x + y) % m : x + y);
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  if (std::adjacent_find(acc.begin(), acc.end()) != acc.end())
    throw InvalidShift(std::string(what) + " has a coefficient above 1");
  return acc;
}

}  // namespace

void validate(const LongPeriodParams& p) {
  if (!is_prime(p.p1) || !is_prime(p.p2) || !is_prime(p.p3))
    throw std::invalid_argument("p1, p2, p3 must be prime");
  if (!(p.p1 < p.p2 && p.p2 < p.p3 && p.p3 < 2 * p.p1))
    throw std::invalid_argument("primes must satisfy p1 < p2 < p3 < 2 p1");
  if (p.n < 2) throw std::invalid_argument("n must be at least 2");
  checked_pow(checked_mul(checked_mul(p.p1, p.p2), p.p3), p.n);
  if (p.target_beta && !(*p.target_beta > 0 && *p.target_beta < 1.5))
    throw std::invalid_argument("beta must lie in (0, 3/2)");
  if (p.epsilon && !(*p.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
}

LongPeriodInstance long_period_tiling(const LongPeriodParams& params) {
  validate(params);
  const std::uint64_t primes[3] = {params.p1, params.p2, params.p3};
  const unsigned n = params.n;

  LongPeriodInstance inst;
  inst.params = params;
  inst.modulus = checked_pow(params.p1 * params.p2 * params.p3, n);
  const std::uint64_t m = inst.modulus;

  std::vector<std::vector<std::uint64_t>> tile_factors, columns;
  std::uint64_t unit[3];  // M / p_i^n
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t pn = checked_pow(primes[i], n);
    unit[i] = m / pn;
    tile_factors.push_back(progression(unit[i], primes[i]));
    columns.push_back(progression(m / (pn / primes[i]), pn / primes[i]));
  }
  inst.tile = IntegerSet(product_set(tile_factors, 0, "tile"));
  const auto base = product_set(columns, m, "base complement");
  inst.base_complement = IntegerSet(base);

  const std::uint64_t top[3] = {m - m / (checked_pow(primes[0], n - 1)),
                                m - m / (checked_pow(primes[1], n - 1)),
                                m - m / (checked_pow(primes[2], n - 1))};
  // a = (p3^{n-1} - 1) M / p3^{n-1}; b = (p2^{n-1} - 1) M / p2^{n-1} + (p1^{n-1} - 1) M / p1^{n-1}
  inst.shift_a = top[2];
  inst.shift_b = top[1] + top[0];

  // B = B_0 + (X^{u_1} - 1) B_1 + (X^{a + u_2} - X^a) B_2 + (X^{b + u_3} - X^b) B_3
  const std::uint64_t offset[3] = {0, inst.shift_a % m, inst.shift_b % m};
  std::unordered_map<std::uint64_t, int> delta;
  for (int i = 0; i < 3; ++i) {
    for (const auto e : columns[i]) {
      const std::uint64_t from = (offset[i] + e) % m;
      --delta[from];
      ++delta[(from + unit[i]) % m];
    }
  }
  std::vector<std::uint64_t> shifted;
  shifted.reserve(base.size());
  for (const auto x : base) {
    const auto it = delta.find(x);
    const int c = 1 + (it == delta.end() ? 0 : it->second);
    if (c < 0 || c > 1) throw InvalidShift("shifted complement has a coefficient outside {0,1}");
    if (c == 1) shifted.push_back(x);
  }
  for (const auto& [x, d] : delta) {
    if (std::binary_search(base.begin(), base.end(), x)) continue;
    if (d < 0 || d > 1) throw InvalidShift("shifted complement has a coefficient outside {0,1}");
    if (d == 1) shifted.push_back(x);
  }
  inst.complement = IntegerSet::from_unsorted(std::move(shifted));
  return inst;
}

LongPeriodValidation validate_instance(const LongPeriodInstance& inst, int threads) {
  const auto& p = inst.params;
  const std::uint64_t m = inst.modulus;
  const std::uint64_t primes[3] = {p.p1, p.p2, p.p3};
  LongPeriodValidation v;
  v.tiles_with_base = is_tiling(inst.tile, inst.base_complement, m, threads).tiles;
  v.tiles_with_shifted = is_tiling(inst.tile, inst.complement, m, threads).tiles;
  v.least_period_shifted = least_period(inst.complement, m);
  v.least_period_base = least_period(inst.base_complement, m);
  v.base_periodic_each_direction = std::all_of(std::begin(primes), std::end(primes), [&](auto q) {
    return (m / q) % v.least_period_base == 0;
  });
  v.prime_sets_match = factorize(m).primes() == factorize(inst.tile.size()).primes();
  v.diam = inst.tile.diameter();
  v.diam_bound = 3 * (m / checked_pow(p.p1, p.n - 1));
  v.diam_bound_holds = v.diam <= v.diam_bound;
  for (const auto q : primes) v.diam_formula += (q - 1) * (m / checked_pow(q, p.n));
  return v;
}

ExponentReport exponent_report(const LongPeriodInstance& inst) {
  const auto& p = inst.params;
  ExponentReport r;
  r.diam = inst.tile.diameter();
  r.diam_bound = 3 * (inst.modulus / checked_pow(p.p1, p.n - 1));
  r.diam_bound_holds = r.diam <= r.diam_bound;

  const long double log_m = std::log(static_cast<long double>(inst.modulus));
  const long double log_d = std::log(static_cast<long double>(r.diam));
  r.achieved_exponent = static_cast<double>(log_m / log_d);

  const long double n = p.n;
  if (p.epsilon) {
    const long double eps = *p.epsilon;
    r.alpha = static_cast<double>((3 - eps) * n / (2 * n + 1));
    r.prime_large_enough =
        n * (eps * std::log(static_cast<long double>(p.p1)) - std::log(2.0L)) >
        1.5L * std::log(1.5L);
  }
  if (p.target_beta) {
    const long double beta = *p.target_beta;
    // 3 p1 p2^n p3^n = 3 M / p1^{n-1}
    const long double log_box = std::log(static_cast<long double>(r.diam_bound));
    r.final_inequality_holds = log_m >= beta * log_box && log_box >= log_d;
    if (r.alpha) r.beta_below_alpha_below_three_halves = beta < *r.alpha && *r.alpha < 1.5;
  }
  return r;
}

CounterexampleReport cyclotomic_square_counterexample(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q) || !(p < q && q < 2 * p))
    throw std::invalid_argument("need primes p < q < 2p");
  CounterexampleReport r;
  r.p = p;
  r.q = q;
  // (1 + X^p + ... + X^{(p-1)p}) (1 + X^q + ... + X^{(q-1)q})
  r.tile = IntegerSet(product_set({progression(p, p), progression(q, q)}, 0, "counterexample"));
  r.modulus = checked_mul(checked_mul(p, p), checked_mul(q, q));
  r.diam = r.tile.diameter();
  r.eq3_rhs_floor = (p - 1) * (r.modulus / p);
  r.diameter_bound_fails = r.diam < r.eq3_rhs_floor;  // (p-1)M/p is an integer here
  r.analysis = cm_report(r.tile);
  r.lcm_spectrum = r.analysis.lcm_sa;
  return r;
}

IntegerSet standard_tile(const std::vector<std::pair<std::uint64_t, unsigned>>& prime_powers) {
  std::map<std::uint64_t, unsigned> merged;
  for (const auto& [p, alpha] : prime_powers) {
    if (!is_prime(p) || alpha == 0)
      throw std::invalid_argument("standard_tile: entries must be (prime, exponent >= 1)");
    merged[p] += alpha;
  }
  std::uint64_t n = 1;
  for (const auto& [p, alpha] : merged) n = checked_mul(n, checked_pow(p, alpha));

  std::vector<std::vector<std::uint64_t>> factors;
  for (const auto& [p, alpha] : merged) {
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= alpha; ++j) {
      pj *= p;
      factors.push_back(progression(n / pj, p));
    }
  }
  return IntegerSet(product_set(factors, 0, "standard tile"));
}

}  // namespace ztile
