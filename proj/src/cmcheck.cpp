#include "ztile/cmcheck.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace ztile {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("index product exceeds 64 bits");
  return r;
}

std::map<std::uint64_t, std::vector<std::uint64_t>> group_by_prime(
    const std::vector<std::uint64_t>& prime_powers) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
  for (const auto s : prime_powers) groups[factorize(s).terms()[0].prime].push_back(s);
  return groups;
}

}  // namespace

std::vector<std::uint64_t> spectrum(const IntegerSet& a) {
  const IntegerSet na = normalize(a);
  const std::uint64_t diam = na.diameter();
  std::vector<std::uint64_t> candidates;
  for (const auto p : factorize(na.size()).primes()) {
    // phi(p^k) = p^{k-1}(p-1) <= diam
    for (std::uint64_t pk = p; (pk / p) * (p - 1) <= diam; pk *= p) {
      candidates.push_back(pk);
      if (pk > UINT64_MAX / p) break;
    }
  }
  std::sort(candidates.begin(), candidates.end());
  return cyclotomic_divisors_among(na, candidates);
}

bool check_t1(const IntegerSet& a, const std::vector<std::uint64_t>& spec) {
  unsigned __int128 product = 1;
  for (const auto s : spec) product *= factorize(s).terms()[0].prime;
  return product == a.size();
}

bool check_t1(const IntegerSet& a) { return check_t1(a, spectrum(a)); }

bool check_t2(const IntegerSet& a, const std::vector<std::uint64_t>& spec) {
  const IntegerSet na = normalize(a);
  const auto groups = group_by_prime(spec);
  std::vector<std::vector<std::uint64_t>> powers;
  for (const auto& [p, v] : groups) powers.push_back(v);
  const std::size_t k = powers.size();
  if (k < 2) return true;

  const IntPolynomial mask = mask_polynomial(na);
  // Every nonempty subset of primes of size >= 2, then every choice of one
  // power per chosen prime (odometer over the choices).
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    if (std::popcount(subset) < 2) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (subset >> i & 1) chosen.push_back(i);
    std::vector<std::size_t> digit(chosen.size(), 0);
    while (true) {
      std::uint64_t s = 1;
      for (std::size_t j = 0; j < chosen.size(); ++j) s = checked_mul(s, powers[chosen[j]][digit[j]]);
      // Degree obstruction: Phi_s cannot divide a polynomial of smaller degree.
      if (euler_phi(s) > na.diameter()) return false;
      if (!divisible_by_cyclotomic(mask, s)) return false;
      std::size_t j = 0;
      while (j < chosen.size() && ++digit[j] == powers[chosen[j]].size()) digit[j++] = 0;
      if (j == chosen.size()) break;
    }
  }
  return true;
}

bool check_t2(const IntegerSet& a) { return check_t2(a, spectrum(a)); }

CmReport cm_report(const IntegerSet& a) {
  const IntegerSet na = normalize(a);
  CmReport r;
  r.spectrum = spectrum(na);
  r.t1 = check_t1(na, r.spectrum);
  r.t2 = check_t2(na, r.spectrum);
  r.diam = na.diameter();
  // Spectrum entries are prime powers: the lcm is the product of the top power per prime.
  for (const auto& [p, powers] : group_by_prime(r.spectrum)) r.lcm_sa = checked_mul(r.lcm_sa, powers.back());
  r.phi_lcm_divides = euler_phi(r.lcm_sa) <= r.diam &&
                      divisible_by_cyclotomic(mask_polynomial(na), r.lcm_sa);
  if (r.phi_lcm_divides)
    r.half_bound_holds = static_cast<unsigned __int128>(2) * r.diam >= r.lcm_sa;
  if (na.size() > 1) {
    const std::uint64_t p = factorize(na.size()).terms()[0].prime;
    r.eq3_holds = static_cast<unsigned __int128>(p) * r.diam >=
                  static_cast<unsigned __int128>(p - 1) * r.lcm_sa;
  }
  return r;
}

std::vector<std::uint64_t> fiber_elements(std::uint64_t base, std::uint64_t modulus,
                                          std::uint64_t prime) {
  std::vector<std::uint64_t> out(prime);
  const std::uint64_t step = modulus / prime;
  for (std::uint64_t k = 0; k < prime; ++k) out[k] = (base + k * step) % modulus;
  return out;
}

namespace {

class FiberSearch {
 public:
  FiberSearch(std::vector<std::uint32_t> counts, std::uint64_t modulus, std::uint64_t p,
              std::uint64_t q)
      : counts_(std::move(counts)), modulus_(modulus), p_(p), q_(q) {}

  // Returns the number of decompositions found, stopping at two.
  int run() {
    dfs(0);
    return solutions_;
  }
  const std::vector<std::uint64_t>& p_fibers() const { return first_p_; }
  const std::vector<std::uint64_t>& q_fibers() const { return first_q_; }

 private:
  bool place(std::uint64_t x, std::uint64_t prime) {
    const std::uint64_t step = modulus_ / prime;
    for (std::uint64_t k = 0; k < prime; ++k)
      if (counts_[(x + k * step) % modulus_] == 0) return false;
    for (std::uint64_t k = 0; k < prime; ++k) --counts_[(x + k * step) % modulus_];
    return true;
  }
  void unplace(std::uint64_t x, std::uint64_t prime) {
    const std::uint64_t step = modulus_ / prime;
    for (std::uint64_t k = 0; k < prime; ++k) ++counts_[(x + k * step) % modulus_];
  }

  void dfs(std::uint64_t from) {
    if (solutions_ >= 2) return;
    std::uint64_t x = from;
    while (x < modulus_ && counts_[x] == 0) ++x;
    if (x == modulus_) {
      if (solutions_++ == 0) {
        first_p_ = cur_p_;
        first_q_ = cur_q_;
      }
      return;
    }
    if (place(x, p_)) {
      cur_p_.push_back(x);
      dfs(x);
      cur_p_.pop_back();
      unplace(x, p_);
    }
    if (q_ != p_ && solutions_ < 2 && place(x, q_)) {
      cur_q_.push_back(x);
      dfs(x);
      cur_q_.pop_back();
      unplace(x, q_);
    }
  }

  std::vector<std::uint32_t> counts_;
  std::uint64_t modulus_, p_, q_;
  int solutions_ = 0;
  std::vector<std::uint64_t> cur_p_, cur_q_, first_p_, first_q_;
};

}  // namespace

std::optional<FiberDecomposition> fiber_decompose(const IntegerSet& a, std::uint64_t modulus,
                                                  std::uint64_t p, std::uint64_t q) {
  if (modulus == 0 || !is_prime(p) || !is_prime(q) || modulus % p != 0 || modulus % q != 0)
    throw std::invalid_argument("fiber_decompose: p and q must be primes dividing M");
  std::vector<std::uint32_t> counts(modulus, 0);
  for (const auto x : a.elements()) ++counts[x % modulus];

  FiberSearch search(std::move(counts), modulus, p, q);
  const int found = search.run();
  if (found == 0) return std::nullopt;
  FiberDecomposition d;
  d.modulus = modulus;
  d.p = p;
  d.q = q;
  d.p_fibers = search.p_fibers();
  d.q_fibers = search.q_fibers();
  d.unique = found == 1;
  return d;
}

}  // namespace ztile
