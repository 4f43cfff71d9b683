#pragma once

#include <functional>
#include <vector>

#include "fibzeta/modmath.hpp"

namespace fibzeta {

// Segmented Eratosthenes. Base primes up to sqrt(limit) are computed once;
// segments are sieved on demand with odd-only storage. primes_in is const
// and safe to call from several threads at once.
class SegmentSieve {
 public:
  explicit SegmentSieve(u64 limit);

  u64 limit() const { return limit_; }
  // Appends the primes in [lo, hi) to out; hi must not exceed limit + 1.
  void primes_in(u64 lo, u64 hi, std::vector<u64>& out) const;

 private:
  u64 limit_;
  std::vector<u64> base_;
};

// Streams primes <= x in increasing order.
void for_each_prime(u64 x, u64 segment_size, const std::function<void(u64)>& fn);

std::vector<u64> primes_up_to(u64 x);
u64 count_primes(u64 x, u64 segment_size = 1u << 20);

}  // namespace fibzeta
