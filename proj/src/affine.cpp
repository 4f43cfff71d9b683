#include "fibzeta/affine.hpp"

#include <numeric>

#include "fibzeta/factor.hpp"

namespace fibzeta {

namespace {

constexpr u64 kEnumerationBound = 1'000'000;

u64 phi_of(u64 m) {
  u64 phi = 0;
  for (u64 a = 0; a < m; ++a)
    if (std::gcd(a, m) == 1) ++phi;
  return phi;
}

i128 ipow128(u64 base, int exp) {
  i128 r = 1;
  for (int i = 0; i < exp; ++i) {
    i128 t;
    if (__builtin_mul_overflow(r, static_cast<i128>(base), &t))
      throw std::overflow_error("ipow128: overflow");
    r = t;
  }
  return r;
}

}  // namespace

AffineElement::AffineElement(u64 a_, u64 b_, u64 m_) : a(a_), b(b_), m(m_) {
  if (m < 2) throw std::invalid_argument("affine: modulus must be >= 2");
  if (a >= m || b >= m)
    throw std::invalid_argument("affine: coefficients must be reduced mod m");
  if (std::gcd(a, m) != 1)
    throw std::invalid_argument("affine: a must be a unit mod m");
}

AffineElement affine_identity(u64 m) { return AffineElement(1 % m, 0, m); }

AffineElement compose(const AffineElement& g, const AffineElement& f) {
  if (g.m != f.m) throw std::invalid_argument("affine: mismatched moduli");
  u64 m = g.m;
  return AffineElement(mulmod(g.a, f.a, m), addmod(mulmod(g.a, f.b, m), g.b, m), m);
}

AffineElement inverse(const AffineElement& f) {
  u64 m = f.m;
  u64 ainv = *mod_inverse(f.a, m);  // a is a unit by the type invariant
  return AffineElement(ainv, submod(0, mulmod(ainv, f.b, m), m), m);
}

std::vector<AffineElement> enumerate_affine_group(u64 m) {
  if (m < 2) throw std::invalid_argument("enumerate_affine_group: modulus must be >= 2");
  u64 phi = phi_of(m);
  if (phi > kEnumerationBound / m)
    throw std::invalid_argument("enumerate_affine_group: group too large");
  std::vector<AffineElement> out;
  out.reserve(phi * m);
  for (u64 a = 0; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    for (u64 b = 0; b < m; ++b) out.emplace_back(a, b, m);
  }
  return out;
}

std::vector<AffineElement> enumerate_coupled_subgroup(int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("enumerate_coupled_subgroup: need 1 <= k <= 3");
  u64 m = ipow(10, static_cast<unsigned>(k));
  std::vector<AffineElement> out;
  for (u64 a = 0; a < m; ++a) {
    if (a % 2 == 0 || a % 5 == 0) continue;
    bool even_b = (a % 5 == 1 || a % 5 == 4);
    for (u64 b = even_b ? 0 : 1; b < m; b += 2) out.emplace_back(a, b, m);
  }
  return out;
}

CountResult count_D_prime_bruteforce(int k, int t, u64 ell) {
  if (ell < 2) throw std::invalid_argument("count_D_prime: ell must be >= 2");
  if (t < 1 || t >= k) throw std::invalid_argument("count_D_prime: need 1 <= t < k");
  u64 m = ipow(ell, static_cast<unsigned>(k));
  if (m > kEnumerationBound)
    throw std::invalid_argument("count_D_prime_bruteforce: ell^k too large");

  i128 count = 0;
  for (u64 a = 0; a < m; ++a) {
    if (a % ell == 0 || a == 1) continue;  // unit, a != 1 (mod ell^k)
    int n = valuation(a - 1, ell);         // < k since a != 1 mod ell^k
    if (n < t) continue;
    u64 excluded = m / ipow(ell, static_cast<unsigned>(n - t + 1));
    count += static_cast<i128>(m - excluded);
  }
  i128 total = static_cast<i128>(m) * static_cast<i128>(m / ell) * static_cast<i128>(ell - 1);
  return {count, total, ExactRational(count, total), CountMethod::Brute};
}

CountResult count_D_prime_closed(int k, int t, u64 ell) {
  if (ell < 2) throw std::invalid_argument("count_D_prime: ell must be >= 2");
  if (t < 1 || t >= k) throw std::invalid_argument("count_D_prime: need 1 <= t < k");
  i128 numer = ipow128(ell, 2 * k - t + 1) - ipow128(ell, k + 1) +
               ipow128(ell, t) - ipow128(ell, k);
  if (numer % static_cast<i128>(ell + 1) != 0)
    throw std::logic_error("count_D_prime_closed: numerator not divisible by ell + 1");
  i128 count = numer / static_cast<i128>(ell + 1);
  i128 total = ipow128(ell, 2 * k - 1) * static_cast<i128>(ell - 1);

  ExactRational ratio_form =
      (pow_rational(ell, 2 - t) - pow_rational(ell, 2 - k) -
       pow_rational(ell, 1 - k) + pow_rational(ell, 1 - 2 * k + t)) /
      ExactRational(static_cast<i128>(ell) * static_cast<i128>(ell) - 1, 1);
  ExactRational ratio(count, total);
  if (!(ratio == ratio_form))
    throw std::logic_error("count_D_prime_closed: count and ratio forms disagree");
  return {count, total, ratio, CountMethod::Closed};
}

CountResult count_D_ten_bruteforce(int k, int t1, int t2) {
  if (k < 2 || k > 3) throw std::invalid_argument("count_D_ten: need k in {2, 3}");
  if (t1 < 0 || t1 >= k) throw std::invalid_argument("count_D_ten: need 0 <= t1 < k");
  if (t2 < 1 || t2 >= k) throw std::invalid_argument("count_D_ten: need 1 <= t2 < k");
  u64 m = ipow(10, static_cast<unsigned>(k));
  u64 m2 = ipow(2, static_cast<unsigned>(k));
  u64 m5 = ipow(5, static_cast<unsigned>(k));

  i128 count = 0;
  for (u64 a = 0; a < m; ++a) {
    if (a % 2 == 0 || a % 5 == 0) continue;
    if (a % m2 == 1 || a % m5 == 1) continue;  // a != 1 mod 2^k and mod 5^k
    int n2 = valuation(a - 1, 5);
    if (n2 < t2) continue;
    u64 e5 = ipow(5, static_cast<unsigned>(n2 - t2 + 1));
    bool even_b = (a % 5 == 1 || a % 5 == 4);
    u64 cnt;
    if (t1 >= 1) {
      int n1 = valuation(a - 1, 2);  // >= 1: a odd
      if (n1 < t1) continue;
      u64 e2 = ipow(2, static_cast<unsigned>(n1 - t1 + 1));
      if (even_b) {
        // even b, 2^(n1-t1+1) and 5^(n2-t2+1) both forbidden
        cnt = m / 2 - m / e2 - m / (2 * e5) + m / (e2 * e5);
      } else {
        // odd b dodges the 2-condition automatically
        cnt = m / 2 - m / (2 * e5);
      }
    } else {
      cnt = m / 2 - m / (2 * e5);
    }
    count += static_cast<i128>(cnt);
  }
  i128 total = static_cast<i128>(phi_of(m)) * static_cast<i128>(m) / 2;
  return {count, total, ExactRational(count, total), CountMethod::Brute};
}

CountResult count_D_ten_closed(int k, int t1, int t2) {
  if (k < 2 || k > 3) throw std::invalid_argument("count_D_ten: need k in {2, 3}");
  if (t1 < 0 || t1 >= k) throw std::invalid_argument("count_D_ten: need 0 <= t1 < k");
  if (t2 < 1 || t2 >= k) throw std::invalid_argument("count_D_ten: need 1 <= t2 < k");

  auto term = [](i128 num, i128 den) { return ExactRational(num, den); };
  auto p2 = [](int e) { return ipow128(2, e); };
  auto p5 = [](int e) { return ipow128(5, e); };
  ExactRational ratio;
  if (t1 >= 1) {
    ratio = term(25, 36 * p2(t1) * p5(t2)) -
            term(5, 6 * p2(t1) * p5(k)) +
            term(5, 36 * p2(t1) * p5(2 * k - t2)) +
            term(5, 2 * ipow128(10, k)) -
            term(5, 12 * p2(k) * p5(2 * k - t2)) -
            term(25, 12 * p5(t2) * p2(k)) +
            term(5, 18 * p2(2 * k - t1) * p5(2 * k - t2)) +
            term(25, 18 * p2(2 * k - t1) * p5(t2)) -
            term(5, 3 * p2(2 * k - t1) * p5(k));
  } else {
    ratio = term(25, 9 * p5(t2)) -
            term(25, 9 * p5(t2) * ipow128(4, k)) +
            term(5, 9 * p5(2 * k - t2)) -
            term(10, 3 * p5(k)) -
            term(5, 9 * ipow128(4, k) * p5(2 * k - t2)) +
            term(10, 3 * ipow128(20, k));
  }

  u64 m = ipow(10, static_cast<unsigned>(k));
  i128 total = static_cast<i128>(phi_of(m)) * static_cast<i128>(m) / 2;
  i128 scaled_num = ratio.num() * total;
  CountResult r;
  r.method = CountMethod::Closed;
  r.ratio = ratio;
  if (scaled_num % ratio.den() == 0) {
    r.count = scaled_num / ratio.den();
    r.total = total;
  } else {
    // the printed t1 = 0 formula need not give an integer over the group
    r.count = ratio.num();
    r.total = ratio.den();
  }
  return r;
}

CountResult count_joint_pairs_bruteforce(u64 q, int k, int i, int j) {
  if (q < 2) throw std::invalid_argument("count_joint_pairs: q must be >= 2");
  if (j < 0 || j > i) throw std::invalid_argument("count_joint_pairs: need 0 <= j <= i");
  if (i >= k) throw std::invalid_argument("count_joint_pairs: need i < k");
  u64 m = ipow(q, static_cast<unsigned>(k));
  if (m > kEnumerationBound)
    throw std::invalid_argument("count_joint_pairs_bruteforce: q^k too large");

  i128 count = 0;
  for (u64 a = 0; a < m; ++a) {
    if (a % q == 0) continue;
    if (i == 0) {
      if (a % q == 1) continue;  // ord_q(a - 1) = 0 means a != 1 (mod q)
    } else {
      if (a == 1 || valuation(a - 1, q) != i) continue;
    }
    u64 b_count;
    if (j == 0) {
      b_count = m / ipow(q, static_cast<unsigned>(i));  // ord_q(b) >= i, b = 0 included
    } else {
      int e = i - j;
      b_count = m / ipow(q, static_cast<unsigned>(e)) -
                m / ipow(q, static_cast<unsigned>(e + 1));
    }
    count += static_cast<i128>(b_count);
  }
  i128 total = static_cast<i128>(m) * static_cast<i128>(m / q) * static_cast<i128>(q - 1);
  return {count, total, ExactRational(count, total), CountMethod::Brute};
}

ExactRational rho(u64 m) {
  if (m == 0) throw std::invalid_argument("rho: m must be positive");
  if (m % 20 == 10) return ExactRational(5, 4);
  if (m % 20 == 0) return ExactRational(1, 2);
  return ExactRational(1, 1);
}

ExactRational zeta(u64 m) {
  if (m == 0) throw std::invalid_argument("zeta: m must be positive");
  ExactRational z = rho(m);
  for (auto [q, e] : factorize(m).factors) {
    // q^(2-e) / (q^2 - 1)
    ExactRational factor =
        pow_rational(q, 2 - e) /
        ExactRational(static_cast<i128>(q) * static_cast<i128>(q) - 1, 1);
    z = z * factor;
  }
  return z;
}

ExactRational zeta_joint(u64 q, int i, int j) {
  if (q < 2) throw std::invalid_argument("zeta_joint: q must be >= 2");
  if (j < 0 || j > i) throw std::invalid_argument("zeta_joint: need 0 <= j <= i");
  if (i == 0) return ExactRational(static_cast<i128>(q) - 2, static_cast<i128>(q) - 1);
  if (j == 0) return pow_rational(q, -2 * i);
  return ExactRational(static_cast<i128>(q) - 1, 1) * pow_rational(q, -(2 * i - j + 1));
}

}  // namespace fibzeta
