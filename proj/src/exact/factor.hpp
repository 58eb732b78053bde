#pragma once

#include <utility>
#include <vector>

#include "exact/int_matrix.hpp"

namespace skewspec::exact {

struct PrimeFactorization {
  Integer value;
  std::vector<std::pair<Integer, unsigned>> factors;  // increasing primes

  // Number of distinct prime factors.
  std::size_t distinct() const noexcept { return factors.size(); }
  bool square_free() const noexcept;
  Integer product() const;
};

// Strong-pseudoprime test with the first twelve prime bases, which is a proof
// of primality below 3.3e24. Larger inputs must additionally pass GMP's
// Baillie-PSW test.
bool is_prime(const Integer& n);

/// Complete factorization of v >= 1: trial division to 10^6, then
/// Pollard-Brent rho on the remaining cofactor.
PrimeFactorization factorize(const Integer& v);

}  // namespace skewspec::exact
