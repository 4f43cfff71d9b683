#include "fibzeta/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace fibzeta {

SegmentSieve::SegmentSieve(u64 limit) : limit_(limit) {
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  if (root < 2) return;
  std::vector<bool> is_composite(root + 1, false);
  for (u64 i = 2; i * i <= root; ++i) {
    if (is_composite[i]) continue;
    for (u64 j = i * i; j <= root; j += i) is_composite[j] = true;
  }
  for (u64 i = 2; i <= root; ++i)
    if (!is_composite[i]) base_.push_back(i);
}

void SegmentSieve::primes_in(u64 lo, u64 hi, std::vector<u64>& out) const {
  if (hi > limit_ + 1)
    throw std::invalid_argument("SegmentSieve: segment beyond limit");
  if (lo < 2) lo = 2;
  if (lo >= hi) return;
  if (lo <= 2 && 2 < hi) out.push_back(2);

  // odd-only bitmap for [lo, hi)
  u64 first = lo | 1;  // first odd >= lo
  if (first >= hi) return;
  u64 n = (hi - first + 1) / 2;  // odds in [first, hi)
  std::vector<bool> composite(n, false);
  for (u64 q : base_) {
    if (q == 2) continue;
    if (q * q >= hi) break;
    u64 start = std::max(q * q, ((lo + q - 1) / q) * q);
    if (start % 2 == 0) start += q;  // odd multiples only
    for (u64 v = start; v < hi; v += 2 * q) composite[(v - first) / 2] = true;
  }
  for (u64 idx = 0; idx < n; ++idx) {
    if (!composite[idx]) {
      u64 v = first + 2 * idx;
      if (v >= 3) out.push_back(v);  // 1 is not prime
    }
  }
}

void for_each_prime(u64 x, u64 segment_size, const std::function<void(u64)>& fn) {
  if (segment_size < 2) throw std::invalid_argument("for_each_prime: segment too small");
  if (x < 2) return;
  SegmentSieve sieve(x);
  std::vector<u64> buf;
  for (u64 lo = 2; lo <= x; lo += segment_size) {
    u64 hi = std::min(x, lo + segment_size - 1) + 1;
    buf.clear();
    sieve.primes_in(lo, hi, buf);
    for (u64 p : buf) fn(p);
    if (hi > x) break;
  }
}

std::vector<u64> primes_up_to(u64 x) {
  std::vector<u64> out;
  for_each_prime(x, 1u << 18, [&](u64 p) { out.push_back(p); });
  return out;
}

u64 count_primes(u64 x, u64 segment_size) {
  u64 n = 0;
  for_each_prime(x, segment_size, [&](u64) { ++n; });
  return n;
}

}  // namespace fibzeta
