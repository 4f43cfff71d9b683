#pragma once

#include <utility>
#include <vector>

#include "fibzeta/modmath.hpp"

namespace fibzeta {

struct Factorization {
  u64 value = 1;
  // (prime, exponent) with primes strictly increasing
  std::vector<std::pair<u64, int>> factors;

  u64 product() const;
};

// Deterministic Miller-Rabin, exact for the full 64-bit range.
bool is_prime_u64(u64 n);

// Trial division for small factors, Brent-cycle splitting for the rest.
// Deterministic: no randomness, identical output across runs.
// n = 0 is rejected; factorize(1) has an empty factor list.
Factorization factorize(u64 n);

}  // namespace fibzeta
