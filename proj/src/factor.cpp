#include "fibzeta/factor.hpp"

#include <algorithm>
#include <numeric>

namespace fibzeta {

u64 Factorization::product() const {
  u64 r = 1;
  for (auto [q, e] : factors)
    for (int i = 0; i < e; ++i) r *= q;
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // these bases decide primality for every n < 2^64
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Brent's cycle variant of rho with batched gcds. Parameters are swept
// deterministically, so the returned factor is reproducible.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    const u64 batch = 128;
    u64 ys = y;
    for (u64 r = 1; d == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = addmod(mulmod(y, y, n), c % n, n);
      for (u64 k = 0; k < r && d == 1; k += batch) {
        ys = y;
        u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = addmod(mulmod(y, y, n), c % n, n);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      if (r > (1ull << 40)) break;  // give this c up, try the next
    }
    if (d == n) {
      // backtrack one step at a time
      d = 1;
      while (d == 1) {
        ys = addmod(mulmod(ys, ys, n), c % n, n);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n && d != 1) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.value = n;
  std::vector<u64> primes;
  for (u64 q = 2; q < 100 && q * q <= n; q == 2 ? q = 3 : q += 2) {
    while (n % q == 0) {
      primes.push_back(q);
      n /= q;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 q : primes) {
    if (!f.factors.empty() && f.factors.back().first == q)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(q, 1);
  }
  return f;
}

}  // namespace fibzeta
