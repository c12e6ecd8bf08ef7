#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ztile/tilingset.hpp"

namespace ztile::testing {

/// Random subset of [0, m) with k elements, containing 0 when `with_zero`.
inline IntegerSet random_subset(std::mt19937_64& rng, std::uint64_t m, std::size_t k,
                                bool with_zero = true) {
  std::vector<std::uint64_t> pool;
  for (std::uint64_t x = with_zero ? 1 : 0; x < m; ++x) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::uint64_t> v;
  if (with_zero) v.push_back(0);
  for (std::size_t i = 0; v.size() < k && i < pool.size(); ++i) v.push_back(pool[i]);
  return IntegerSet::from_unsorted(std::move(v));
}

inline IntPolynomial random_polynomial(std::mt19937_64& rng, std::size_t degree, long range) {
  std::uniform_int_distribution<long> coef(-range, range);
  std::vector<BigInt> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace ztile::testing
