#include "ztile/tilingset.hpp"

#include <algorithm>

namespace ztile {

IntegerSet::IntegerSet(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("IntegerSet must be nonempty");
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (elements_[i - 1] >= elements_[i])
      throw std::invalid_argument("IntegerSet elements must be strictly increasing");
}

IntegerSet::IntegerSet(std::initializer_list<std::uint64_t> elements)
    : IntegerSet(std::vector<std::uint64_t>(elements)) {}

IntegerSet IntegerSet::from_unsorted(std::vector<std::uint64_t> elements) {
  std::sort(elements.begin(), elements.end());
  return IntegerSet(std::move(elements));
}

bool IntegerSet::contains(std::uint64_t x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::optional<IntegerSet> IntegerSet::reduced_mod(std::uint64_t m) const {
  std::vector<std::uint64_t> r;
  r.reserve(elements_.size());
  for (const auto x : elements_) r.push_back(x % m);
  std::sort(r.begin(), r.end());
  if (std::adjacent_find(r.begin(), r.end()) != r.end()) return std::nullopt;
  return IntegerSet(std::move(r));
}

IntegerSet normalize(const IntegerSet& a) {
  std::vector<std::uint64_t> v(a.elements().begin(), a.elements().end());
  const auto lo = a.min();
  for (auto& x : v) x -= lo;
  return IntegerSet(std::move(v));
}

IntPolynomial mask_polynomial(const IntegerSet& a) {
  std::vector<BigInt> c(a.max() + 1);
  for (const auto x : a.elements()) c[x] = 1;
  return IntPolynomial(std::move(c));
}

namespace {

std::vector<std::uint64_t> residues(const IntegerSet& s, std::uint64_t m) {
  std::vector<std::uint64_t> r;
  r.reserve(s.size());
  for (const auto x : s.elements()) r.push_back(x % m);
  return r;
}

// Mask polynomial of the multiset {x mod m}.
IntPolynomial residue_mask(const IntegerSet& s, std::uint64_t m) {
  std::uint64_t top = 0;
  for (const auto x : s.elements()) top = std::max(top, x % m);
  std::vector<BigInt> c(top + 1);
  for (const auto x : s.elements()) c[x % m] += 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

kernels::CoverageSummary direct_tiling_route(const IntegerSet& a, const IntegerSet& b,
                                             std::uint64_t modulus, int threads) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  const auto ra = residues(a, modulus);
  const auto rb = residues(b, modulus);
  const auto counts = kernels::sumset_counts(ra, rb, modulus, threads);
  return kernels::coverage(counts, threads);
}

std::optional<std::uint64_t> cyclotomic_tiling_route(const IntegerSet& a, const IntegerSet& b,
                                                     std::uint64_t modulus, int threads) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  if (static_cast<unsigned __int128>(a.size()) * b.size() != modulus) return 1;

  const IntPolynomial product =
      mul_mod_cyclic(residue_mask(a, modulus), residue_mask(b, modulus), modulus);
  // Coefficients count pairs (a, b), so they are at most |A||B| = M and fit
  // the int64 kernels.
  std::vector<std::int64_t> coeffs(modulus, 0);
  const auto pc = product.coefficients();
  for (std::size_t i = 0; i < pc.size(); ++i) coeffs[i] = pc[i].get_si();

  for (const auto s : divisors(modulus)) {
    if (s == 1) continue;
    if (!cyclotomic_vanishes(kernels::fold(coeffs, s, threads), s, threads)) return s;
  }
  return std::nullopt;
}

TilingVerdict is_tiling(const IntegerSet& a, const IntegerSet& b, std::uint64_t modulus,
                        int threads) {
  TilingVerdict v;
  const auto cover = direct_tiling_route(a, b, modulus, threads);
  v.direct_route = cover.exact;
  v.first_overcovered = cover.first_overcovered;
  v.first_uncovered = cover.first_uncovered;
  v.size_product_matches = static_cast<unsigned __int128>(a.size()) * b.size() == modulus;

  const auto failing = cyclotomic_tiling_route(a, b, modulus, threads);
  v.cyclotomic_route = !failing.has_value();
  if (failing && *failing != 1) v.failing_divisor = failing;

  if (v.direct_route != v.cyclotomic_route)
    throw InconsistentRoutes("direct and cyclotomic tiling checks disagree");
  v.tiles = v.direct_route;
  return v;
}

std::uint64_t least_period(const IntegerSet& b, std::uint64_t modulus) {
  if (modulus == 0 || b.max() >= modulus)
    throw std::invalid_argument("least_period: set must lie in [0, M)");
  std::vector<std::uint64_t> shifted(b.size());
  for (const auto d : divisors(modulus)) {
    // A d-periodic set is a union of cosets of size M/d.
    if (b.size() % (modulus / d) != 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) shifted[i] = (b.elements()[i] + d) % modulus;
    std::sort(shifted.begin(), shifted.end());
    if (std::equal(shifted.begin(), shifted.end(), b.elements().begin())) return d;
  }
  return modulus;
}

std::vector<std::uint64_t> cyclotomic_divisors_among(const IntegerSet& a,
                                                     std::span<const std::uint64_t> candidates) {
  const IntegerSet na = normalize(a);
  const IntPolynomial mask = mask_polynomial(na);
  std::vector<std::uint64_t> out;
  for (const auto s : candidates) {
    if (s == 0 || euler_phi(s) > na.diameter()) continue;
    if (divisible_by_cyclotomic(mask, s)) out.push_back(s);
  }
  return out;
}

std::vector<std::uint64_t> cyclotomic_divisors(const IntegerSet& a, std::uint64_t bound) {
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t s = 1; s <= bound; ++s) candidates.push_back(s);
  return cyclotomic_divisors_among(a, candidates);
}

CyclicTiling::CyclicTiling(IntegerSet tile, IntegerSet complement, std::uint64_t modulus,
                           int threads)
    : tile_(std::move(tile)), complement_(std::move(complement)), modulus_(modulus) {
  if (modulus_ == 0 || tile_.max() >= modulus_ || complement_.max() >= modulus_)
    throw std::invalid_argument("CyclicTiling: elements must lie in [0, M)");
  if (!is_tiling(tile_, complement_, modulus_, threads).tiles)
    throw std::invalid_argument("CyclicTiling: A + B is not a factorization of Z_M");
}

}  // namespace ztile
