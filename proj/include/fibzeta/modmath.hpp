#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

// 64-bit modular arithmetic helpers. Products go through a 128-bit
// intermediate, so every modulus that fits in a u64 is safe.

namespace fibzeta {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// a, b must already be reduced mod m
inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline u64 submod(u64 a, u64 b, u64 m) {
  return a >= b ? a - b : a + (m - b);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Inverse of a mod m by extended Euclid; empty when gcd(a, m) != 1.
inline std::optional<u64> mod_inverse(u64 a, u64 m) {
  if (m == 0) return std::nullopt;
  i128 t = 0, new_t = 1;
  i128 r = static_cast<i128>(m), new_r = static_cast<i128>(a % m);
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += static_cast<i128>(m);
  return static_cast<u64>(t);
}

// Largest v with q^v | n; n must be positive, q >= 2.
inline int valuation(u64 n, u64 q) {
  if (n == 0) throw std::invalid_argument("valuation: n must be positive");
  if (q < 2) throw std::invalid_argument("valuation: q must be >= 2");
  int v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

inline u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp--) {
    if (base != 0 && r > UINT64_MAX / base)
      throw std::overflow_error("ipow: overflow");
    r *= base;
  }
  return r;
}

}  // namespace fibzeta
