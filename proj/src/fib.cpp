#include "fibzeta/fib.hpp"

namespace fibzeta {

namespace {

void check_modulus(u64 m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
}

}  // namespace

SequencePair fib_pair_mod(u64 n, u64 modulus) {
  check_modulus(modulus);
  // F(2k) = F(k) * (2 F(k+1) - F(k)),  F(2k+1) = F(k)^2 + F(k+1)^2
  u64 a = 0, b = 1 % modulus;  // F(0), F(1)
  for (int bit = 63; bit >= 0; --bit) {
    u64 twob = addmod(b, b, modulus);
    u64 f2k = mulmod(a, submod(twob, a, modulus), modulus);
    u64 f2k1 = addmod(mulmod(a, a, modulus), mulmod(b, b, modulus), modulus);
    a = f2k;
    b = f2k1;
    if ((n >> bit) & 1) {
      u64 next = addmod(a, b, modulus);
      a = b;
      b = next;
    }
  }
  return {a, b, n, modulus};
}

SequencePair lucas_pair_mod(u64 n, u64 modulus) {
  check_modulus(modulus);
  SequencePair f = fib_pair_mod(n, modulus);
  // L_n = 2 F_{n+1} - F_n,  L_{n+1} = F_{n+1} + 2 F_n
  u64 ln = submod(addmod(f.second, f.second, modulus), f.first, modulus);
  u64 ln1 = addmod(f.second, addmod(f.first, f.first, modulus), modulus);
  return {ln, ln1, n, modulus};
}

bool verify_identities(u64 n, u64 modulus) {
  check_modulus(modulus);
  if (n > (UINT64_MAX >> 1))
    throw std::invalid_argument("verify_identities: index too large for doubled index");

  const u64 m = modulus;
  SequencePair f = fib_pair_mod(n, m);
  SequencePair l = lucas_pair_mod(n, m);
  u64 f_prev = submod(f.second, f.first, m);   // F_{n-1}, = 1 at n = 0
  u64 l_prev = submod(l.second, l.first, m);   // L_{n-1}, = -1 at n = 0
  SequencePair f2 = fib_pair_mod(2 * n, m);
  u64 l2n = submod(addmod(f2.second, f2.second, m), f2.first, m);

  u64 four = 4 % m, two = 2 % m, five = 5 % m;
  bool even = (n % 2 == 0);
  u64 sign4 = even ? four : submod(0, four, m);  // 4(-1)^n
  u64 sign2 = even ? two : submod(0, two, m);    // 2(-1)^n

  u64 ln_sq = mulmod(l.first, l.first, m);
  u64 fn_sq = mulmod(f.first, f.first, m);

  bool norm = submod(ln_sq, mulmod(five, fn_sq, m), m) == sign4;
  bool lucas_sq = ln_sq == addmod(l2n, sign2, m);
  bool doubling = f2.first == mulmod(f.first, l.first, m);
  bool five_f = mulmod(five, f.first, m) == addmod(l.second, l_prev, m);
  bool l_from_f = l.first == addmod(f.second, f_prev, m);

  return norm && lucas_sq && doubling && five_f && l_from_f;
}

}  // namespace fibzeta
