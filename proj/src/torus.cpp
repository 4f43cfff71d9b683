#include "fibzeta/torus.hpp"

#include <vector>

namespace fibzeta {

namespace {

void check_field(u64 p) {
  if (p < 3 || p % 2 == 0 || p % 5 == 0)
    throw std::invalid_argument("torus: p must be an odd prime != 5");
}

u64 check_sqrt5(u64 sqrt5, u64 p) {
  if (p % 5 != 1 && p % 5 != 4)
    throw std::invalid_argument("torus: 5 is not a square mod p");
  if (mulmod(sqrt5, sqrt5, p) != 5 % p)
    throw std::invalid_argument("torus: sqrt5^2 != 5 mod p");
  return sqrt5 % p;
}

}  // namespace

TorusPoint::TorusPoint(u64 x_, u64 y_, u64 p_) : x(x_), y(y_), p(p_) {
  check_field(p);
  if (x >= p || y >= p)
    throw std::invalid_argument("torus: coordinates must be reduced mod p");
  u64 lhs = submod(mulmod(x, x, p), mulmod(5 % p, mulmod(y, y, p), p), p);
  if (lhs != 1 % p)
    throw std::invalid_argument("torus: point is not on x^2 - 5y^2 = 1");
}

TorusPoint identity(u64 p) { return TorusPoint(1, 0, p); }

TorusPoint add(const TorusPoint& a, const TorusPoint& b) {
  if (a.p != b.p) throw std::invalid_argument("torus: mismatched fields");
  u64 p = a.p;
  u64 x = addmod(mulmod(a.x, b.x, p), mulmod(5 % p, mulmod(a.y, b.y, p), p), p);
  u64 y = addmod(mulmod(a.x, b.y, p), mulmod(b.x, a.y, p), p);
  return TorusPoint(x, y, p);
}

TorusPoint negate(const TorusPoint& a) {
  return TorusPoint(a.x, a.y == 0 ? 0 : a.p - a.y, a.p);
}

TorusPoint scalar_mul(u64 n, const TorusPoint& a) {
  TorusPoint result = identity(a.p);
  TorusPoint addend = a;
  while (n) {
    if (n & 1) result = add(result, addend);
    n >>= 1;
    if (n) addend = add(addend, addend);
  }
  return result;
}

TorusPoint alpha(u64 p) {
  check_field(p);
  u64 inv2 = (p + 1) / 2;  // p odd
  return TorusPoint(mulmod(3 % p, inv2, p), inv2, p);
}

GroupOrderInfo group_order(u64 p) {
  check_field(p);
  int eps = (p % 5 == 1 || p % 5 == 4) ? +1 : -1;
  return {p, eps, eps > 0 ? p - 1 : p + 1};
}

u64 count_points_oracle(u64 p) {
  check_field(p);
  if (p > 10000)
    throw std::invalid_argument("count_points_oracle: p > 10^4");
  // tally 5y^2 for every y, then read off matches of x^2 - 1
  std::vector<u64> tally(p, 0);
  for (u64 y = 0; y < p; ++y)
    ++tally[mulmod(5 % p, mulmod(y, y, p), p)];
  u64 total = 0;
  for (u64 x = 0; x < p; ++x)
    total += tally[submod(mulmod(x, x, p), 1, p)];
  return total;
}

u64 to_multiplicative(const TorusPoint& a, u64 sqrt5) {
  u64 p = a.p;
  u64 s = check_sqrt5(sqrt5, p);
  return addmod(a.x, mulmod(s, a.y, p), p);
}

TorusPoint from_multiplicative(u64 t, u64 sqrt5, u64 p) {
  check_field(p);
  u64 s = check_sqrt5(sqrt5, p);
  t %= p;
  auto tinv = mod_inverse(t, p);
  if (!tinv) throw std::invalid_argument("from_multiplicative: t not invertible");
  u64 inv2 = (p + 1) / 2;
  auto inv2s = mod_inverse(mulmod(2, s, p), p);
  if (!inv2s) throw std::invalid_argument("from_multiplicative: 2*sqrt5 not invertible");
  u64 x = mulmod(addmod(t, *tinv, p), inv2, p);
  u64 y = mulmod(submod(t, *tinv, p), *inv2s, p);
  return TorusPoint(x, y, p);
}

u64 element_order(const TorusPoint& a, const Factorization& order_factorization) {
  GroupOrderInfo info = group_order(a.p);
  if (order_factorization.value != info.order ||
      order_factorization.product() != info.order)
    throw std::invalid_argument("element_order: factorization does not match |G(F_p)|");
  u64 ord = info.order;
  for (auto [q, e] : order_factorization.factors) {
    for (int i = 0; i < e; ++i) {
      if (ord % q != 0) break;
      u64 cand = ord / q;
      if (scalar_mul(cand, a).is_identity())
        ord = cand;
      else
        break;
    }
  }
  return ord;
}

int point_order_valuation(const TorusPoint& a, u64 q) {
  if (q < 2) throw std::invalid_argument("point_order_valuation: q must be >= 2");
  GroupOrderInfo info = group_order(a.p);
  int e = valuation(info.order, q);
  TorusPoint cur = scalar_mul(info.order / ipow(q, static_cast<unsigned>(e)), a);
  int s = 0;
  while (!cur.is_identity()) {
    if (s >= e)
      throw std::logic_error("point_order_valuation: order does not divide |G(F_p)|");
    cur = scalar_mul(q, cur);
    ++s;
  }
  return s;
}

}  // namespace fibzeta
