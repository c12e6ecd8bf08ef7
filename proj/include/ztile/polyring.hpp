#pragma once

// Exact arithmetic over Z[X]: dense polynomials with GMP coefficients,
// cyclotomic polynomials, totients and small-integer factorization.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ztile {

using BigInt = mpz_class;

/// Dense polynomial with integer coefficients. Coefficient i multiplies X^i.
/// The highest stored coefficient is always nonzero; the zero polynomial
/// stores nothing and has no degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t exponent, const BigInt& c = 1);
  /// X^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  bool is_monic() const noexcept;
  const BigInt& leading() const;

  /// Coefficient of X^i (zero past the degree).
  BigInt coefficient(std::size_t i) const;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g);
  friend IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g);
  friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
  friend bool operator==(const IntPolynomial& f, const IntPolynomial& g);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization n = prod p^e with strictly increasing primes.
class Factorization {
 public:
  Factorization() = default;
  /// Throws std::invalid_argument unless primes are prime and strictly increasing.
  explicit Factorization(std::vector<PrimePower> terms);

  const std::vector<PrimePower>& terms() const& noexcept { return terms_; }
  /// By value on temporaries, so `for (auto t : factorize(n).terms())` is safe.
  std::vector<PrimePower> terms() && noexcept { return std::move(terms_); }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t distinct_primes() const noexcept { return terms_.size(); }
  std::vector<std::uint64_t> primes() const;
  std::uint64_t value() const;
  /// All positive divisors, ascending.
  std::vector<std::uint64_t> divisors() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> terms_;
};

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t s);
/// True when s = p^k for a prime p and k >= 1.
bool is_prime_power(std::uint64_t s);

/// Phi_s, built as (X^s - 1) / prod_{d | s, d < s} Phi_d and memoized.
/// The cache is shared between threads and filled at most once per index.
IntPolynomial cyclotomic(std::uint64_t s);

/// Quotient q with f = g * q, or nullopt when g does not divide f.
/// g must be monic; anything else throws std::invalid_argument.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& f, const IntPolynomial& g);

/// f * g reduced modulo X^M - 1 (exponents folded mod M). Zero coefficients
/// are skipped, so sparse mask polynomials multiply in O(|supp f| |supp g|).
IntPolynomial mul_mod_cyclic(const IntPolynomial& f, const IntPolynomial& g, std::uint64_t modulus);

/// Phi_s | f, decided without dividing: fold f modulo X^s - 1, multiply by
/// prod_{p | s} (X^{s/p} - 1) modulo X^s - 1 and test for zero. The product
/// vanishes exactly at the non-primitive s-th roots of unity, so the result is
/// zero iff f vanishes at every primitive s-th root.
bool divisible_by_cyclotomic(const IntPolynomial& f, std::uint64_t s);

/// Same test on a coefficient vector that is already reduced modulo X^s - 1.
bool cyclotomic_vanishes(std::vector<std::int64_t> folded, std::uint64_t s, int threads = 1);

}  // namespace ztile
