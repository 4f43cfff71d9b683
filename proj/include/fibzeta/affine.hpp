#pragma once

#include <vector>

#include "fibzeta/rational.hpp"

namespace fibzeta {

// x -> a x + b over Z/mZ with a a unit; the group law is composition.
struct AffineElement {
  u64 a = 1, b = 0, m = 0;

  AffineElement(u64 a, u64 b, u64 m);  // validates gcd(a, m) == 1
  bool operator==(const AffineElement&) const = default;
};

AffineElement affine_identity(u64 m);
// f then g: (g o f)(x) = a_g a_f x + (a_g b_f + b_g)
AffineElement compose(const AffineElement& g, const AffineElement& f);
AffineElement inverse(const AffineElement& f);

// All of I(m), a ascending then b ascending. phi(m) * m must stay
// within the enumeration bound (10^6 elements).
std::vector<AffineElement> enumerate_affine_group(u64 m);

// Index-2 subgroup of I(10^k) cut out by the parity coupling:
// b even exactly when a = 1, 4 (mod 5). k <= 3.
std::vector<AffineElement> enumerate_coupled_subgroup(int k);

enum class CountMethod { Brute, Closed };

// A subset count inside a finite group: `count` matching elements out of
// `total`, with the reduced fraction alongside. Closed-form results whose
// printed formula does not produce an integer over `total` (the flagged
// t1 = 0 formula) fall back to count = ratio.num(), total = ratio.den().
struct CountResult {
  i128 count = 0;
  i128 total = 1;
  ExactRational ratio;
  CountMethod method = CountMethod::Brute;
};

// Elements of I(ell^k) with a != 1 (mod ell^k), n = ord_ell(a - 1) >= t,
// and ell^(n-t+1) not dividing b. Iterates a, counts b arithmetically.
CountResult count_D_prime_bruteforce(int k, int t, u64 ell);

// Closed form: |D| = (ell^(2k-t+1) - ell^(k+1) + ell^t - ell^k) / (ell+1),
// cross-checked internally against the ratio form
// (ell^(2-t) - ell^(2-k) - ell^(1-k) + ell^(1-2k+t)) / (ell^2 - 1).
CountResult count_D_prime_closed(int k, int t, u64 ell);

// Same count inside the parity-coupled subgroup of I(10^k), with the
// 2-part and 5-part conditions at t1 and t2; the 2-part condition is
// omitted when t1 = 0. k in {2, 3}.
CountResult count_D_ten_bruteforce(int k, int t1, int t2);

// Printed closed forms: nine terms for t1 >= 1 (exact match with brute
// force), six terms for t1 = 0 (documented mismatch with brute force;
// reported, never silently corrected).
CountResult count_D_ten_closed(int k, int t1, int t2);

// Pairs (a, b) in I(q^k) with ord_q(a - 1) = i (i = 0 meaning a != 1 mod q)
// and ord_q(b) = i - j, where j = 0 relaxes to ord_q(b) >= i. Needs
// 0 <= j <= i < k.
CountResult count_joint_pairs_bruteforce(u64 q, int k, int i, int j);

// Correction factor: 5/4 when m = 10 (mod 20), 1/2 when 20 | m, else 1.
ExactRational rho(u64 m);

// Density of primes with m | Z(p): rho(m) * prod over q^e || m of
// q^(2-e) / (q^2 - 1).
ExactRational zeta(u64 m);

// Joint density of ord_q(p - eps_p) = i and ord_q(Z(p)) = j:
//   (q-2)/(q-1)         i = j = 0
//   q^(-2i)             i >= 1, j = 0
//   (q-1)/q^(2i-j+1)    otherwise
ExactRational zeta_joint(u64 q, int i, int j);

}  // namespace fibzeta
