#pragma once

#include "fibzeta/modmath.hpp"

namespace fibzeta {

// Adjacent values of a second-order sequence reduced mod `modulus`:
// `first` at `index`, `second` at `index + 1`.
struct SequencePair {
  u64 first = 0;
  u64 second = 0;
  u64 index = 0;
  u64 modulus = 0;
};

// (F_n, F_{n+1}) mod N by fast doubling, O(log n). Modulus < 2 is rejected.
SequencePair fib_pair_mod(u64 n, u64 modulus);

// (L_n, L_{n+1}) mod N, derived from the Fibonacci pair at n.
SequencePair lucas_pair_mod(u64 n, u64 modulus);

// Checks the classical identity kit at index n mod N:
//   L_n^2 - 5 F_n^2 = 4(-1)^n
//   L_n^2 = L_{2n} + 2(-1)^n
//   F_{2n} = F_n L_n
//   5 F_n = L_{n+1} + L_{n-1}
//   L_n = F_{n+1} + F_{n-1}
// (F_{-1} = 1 and L_{-1} = -1 at n = 0.)
bool verify_identities(u64 n, u64 modulus);

}  // namespace fibzeta
