#include "ztile/polyring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "ztile/kernels.hpp"

namespace ztile {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (const long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t exponent, const BigInt& c) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[n] += 1;
  v[0] -= 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool IntPolynomial::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "X";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) {
  std::vector<BigInt> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) v[i] += f.coeffs_[i];
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) v[i] += g.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) {
  std::vector<BigInt> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) v[i] += f.coeffs_[i];
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) v[i] -= g.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<BigInt> v(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (sgn(f.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) v[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

bool operator==(const IntPolynomial& f, const IntPolynomial& g) {
  return f.coeffs_.size() == g.coeffs_.size() &&
         std::equal(f.coeffs_.begin(), f.coeffs_.end(), g.coeffs_.begin(),
                    [](const BigInt& a, const BigInt& b) { return a == b; });
}

// ---------------------------------------------------------------------------
// Integers

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

Factorization::Factorization(std::vector<PrimePower> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!is_prime(terms_[i].prime) || terms_[i].exponent == 0)
      throw std::invalid_argument("factorization entry is not a prime with positive exponent");
    if (i > 0 && terms_[i - 1].prime >= terms_[i].prime)
      throw std::invalid_argument("factorization primes must be strictly increasing");
  }
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.prime);
  return out;
}

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& t : terms_) v *= t.value();
  return v;
}

std::vector<std::uint64_t> Factorization::divisors() const {
  std::vector<std::uint64_t> out{1};
  for (const auto& t : terms_) {
    const std::size_t n = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= t.exponent; ++k) {
      pk *= t.prime;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> terms;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    terms.push_back({p, e});
  }
  if (n > 1) terms.push_back({n, 1});
  return Factorization(std::move(terms));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return factorize(n).divisors(); }

std::uint64_t euler_phi(std::uint64_t s) {
  std::uint64_t phi = 1;
  for (const auto& t : factorize(s).terms()) phi *= (t.prime - 1) * (t.value() / t.prime);
  return phi;
}

bool is_prime_power(std::uint64_t s) { return s >= 2 && factorize(s).distinct_primes() == 1; }

// ---------------------------------------------------------------------------
// Division and cyclotomics

std::optional<IntPolynomial> exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  if (!g.is_monic()) throw std::invalid_argument("exact_divide: divisor must be monic");
  if (f.is_zero()) return IntPolynomial{};
  const std::size_t n = *f.degree();
  const std::size_t m = *g.degree();
  if (n < m) return std::nullopt;

  auto gc = g.coefficients();
  std::vector<BigInt> r(f.coefficients().begin(), f.coefficients().end());
  std::vector<BigInt> q(n - m + 1);
  for (std::size_t i = n - m + 1; i-- > 0;) {
    q[i] = r[i + m];
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j <= m; ++j) r[i + j] -= q[i] * gc[j];
  }
  for (std::size_t j = 0; j < m; ++j)
    if (sgn(r[j]) != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

namespace {

std::shared_mutex g_cyclotomic_mutex;
std::map<std::uint64_t, IntPolynomial> g_cyclotomic_cache;

// Same vanishing test as the int64 kernel, for coefficients that may not fit.
bool big_cyclotomic_vanishes(std::vector<BigInt> v, std::uint64_t s) {
  const std::size_t n = v.size();
  for (const auto p : factorize(s).primes()) {
    const std::uint64_t shift = s / p;
    std::vector<BigInt> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[(i + n - shift) % n] - v[i];
    v = std::move(out);
  }
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

}  // namespace

IntPolynomial cyclotomic(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  {
    std::shared_lock lock(g_cyclotomic_mutex);
    if (auto it = g_cyclotomic_cache.find(s); it != g_cyclotomic_cache.end()) return it->second;
  }
  IntPolynomial phi = IntPolynomial::x_pow_minus_one(s);
  for (const auto d : divisors(s)) {
    if (d == s) break;
    auto q = exact_divide(phi, cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic: X^s - 1 not divisible by a lower cyclotomic");
    phi = std::move(*q);
  }
  std::unique_lock lock(g_cyclotomic_mutex);
  return g_cyclotomic_cache.emplace(s, std::move(phi)).first->second;
}

IntPolynomial mul_mod_cyclic(const IntPolynomial& f, const IntPolynomial& g,
                             std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("mul_mod_cyclic: modulus must be positive");
  if (f.is_zero() || g.is_zero()) return {};
  auto fc = f.coefficients();
  auto gc = g.coefficients();
  std::vector<std::size_t> f_support, g_support;
  for (std::size_t i = 0; i < fc.size(); ++i)
    if (sgn(fc[i]) != 0) f_support.push_back(i);
  for (std::size_t j = 0; j < gc.size(); ++j)
    if (sgn(gc[j]) != 0) g_support.push_back(j);

  const std::size_t len =
      std::min<std::uint64_t>(modulus, fc.size() + gc.size() - 1);
  std::vector<BigInt> out(len);
  for (const auto i : f_support) {
    const std::uint64_t ir = i % modulus;
    for (const auto j : g_support) {
      std::uint64_t e = ir + j % modulus;
      if (e >= modulus) e -= modulus;
      out[e] += fc[i] * gc[j];
    }
  }
  return IntPolynomial(std::move(out));
}

bool cyclotomic_vanishes(std::vector<std::int64_t> folded, std::uint64_t s, int threads) {
  if (folded.size() != s) throw std::invalid_argument("cyclotomic_vanishes: length must equal s");
  for (const auto p : factorize(s).primes())
    folded = kernels::shift_difference(folded, s / p, threads);
  return kernels::all_zero(folded, threads);
}

bool divisible_by_cyclotomic(const IntPolynomial& f, std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("divisible_by_cyclotomic: index must be positive");
  if (f.is_zero()) return true;
  if (*f.degree() < euler_phi(s)) return false;
  auto fc = f.coefficients();

  BigInt l1 = 0;
  for (const auto& c : fc) l1 += abs(c);
  const auto omega = factorize(s).distinct_primes();
  // Each (X^k - 1) factor at most doubles the l1 norm of the folded vector.
  BigInt limit = 1;
  limit <<= static_cast<mp_bitcnt_t>(62 - omega);
  if (omega < 60 && l1 < limit) {
    std::vector<std::int64_t> folded(s, 0);
    for (std::size_t i = 0; i < fc.size(); ++i) folded[i % s] += fc[i].get_si();
    return cyclotomic_vanishes(std::move(folded), s);
  }
  std::vector<BigInt> folded(s);
  for (std::size_t i = 0; i < fc.size(); ++i) folded[i % s] += fc[i];
  return big_cyclotomic_vanishes(std::move(folded), s);
}

}  // namespace ztile
