#pragma once

#include "fibzeta/factor.hpp"
#include "fibzeta/modmath.hpp"

namespace fibzeta {

// Point on the conic x^2 - 5y^2 = 1 over F_p, p an odd prime != 5.
// Construction checks the curve equation eagerly (primality of p is the
// caller's contract; the CLI validates it at the boundary).
struct TorusPoint {
  u64 x = 1, y = 0, p = 0;

  TorusPoint(u64 x, u64 y, u64 p);
  bool operator==(const TorusPoint&) const = default;
  bool is_identity() const { return x == 1 && y == 0; }
};

struct GroupOrderInfo {
  u64 p = 0;
  int epsilon = 0;  // +1 when p = 1, 4 (mod 5), -1 when p = 2, 3 (mod 5)
  u64 order = 0;    // p - epsilon
};

TorusPoint identity(u64 p);

// (x1 x2 + 5 y1 y2, x1 y2 + x2 y1); both points must share the same p.
TorusPoint add(const TorusPoint& a, const TorusPoint& b);
TorusPoint negate(const TorusPoint& a);
TorusPoint scalar_mul(u64 n, const TorusPoint& a);

// The point (3/2, 1/2); its n-th multiple is (L_{2n}/2, F_{2n}/2).
TorusPoint alpha(u64 p);

GroupOrderInfo group_order(u64 p);

// Exact point count by exhaustive enumeration; p <= 10^4.
u64 count_points_oracle(u64 p);

// Isomorphism onto F_p^* when 5 is a square: (x, y) -> x + sqrt5 * y.
// sqrt5 must satisfy sqrt5^2 = 5 (mod p).
u64 to_multiplicative(const TorusPoint& a, u64 sqrt5);
TorusPoint from_multiplicative(u64 t, u64 sqrt5, u64 p);

// Order of a point by divisor refinement over the factored group order.
// The factorization must multiply out to |G(F_p)|.
u64 element_order(const TorusPoint& a, const Factorization& order_factorization);

// ord_q of a point's order, computed without factoring: strip the q-part
// of the group order, then count how many times q must multiply the rest
// back to the identity.
int point_order_valuation(const TorusPoint& a, u64 q);

}  // namespace fibzeta
