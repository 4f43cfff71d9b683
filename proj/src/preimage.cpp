#include "fibzeta/preimage.hpp"

#include <vector>

namespace fibzeta {

namespace {

void check_ell(u64 ell) {
  if (ell < 2) throw std::invalid_argument("preimage: ell must be >= 2");
}

}  // namespace

bool has_preimage_power(const TorusPoint& a, u64 ell, std::int64_t n) {
  check_ell(ell);
  if (n < 0) throw std::invalid_argument("has_preimage_power: depth must be nonnegative");
  GroupOrderInfo info = group_order(a.p);
  int v = valuation(info.order, ell);
  u64 t = std::min<u64>(static_cast<u64>(n), static_cast<u64>(v));
  return scalar_mul(info.order / ipow(ell, static_cast<unsigned>(t)), a).is_identity();
}

PreimageDepth max_preimage_depth(const TorusPoint& a, u64 ell) {
  check_ell(ell);
  if (point_order_valuation(a, ell) == 0) return PreimageDepth::infinite();
  int v = valuation(group_order(a.p).order, ell);
  u64 depth = 0;
  while (depth < static_cast<u64>(v) &&
         has_preimage_power(a, ell, static_cast<std::int64_t>(depth) + 1))
    ++depth;
  return PreimageDepth::finite(depth);
}

std::optional<TorusPoint> find_preimage_oracle(const TorusPoint& a, u64 ell) {
  check_ell(ell);
  u64 p = a.p;
  if (p > 10000)
    throw std::invalid_argument("find_preimage_oracle: p > 10^4");
  // all square roots mod p, indexed by the square
  std::vector<std::vector<u64>> roots(p);
  for (u64 y = 0; y < p; ++y) roots[mulmod(y, y, p)].push_back(y);
  auto inv5 = mod_inverse(5 % p, p);
  for (u64 x = 0; x < p; ++x) {
    u64 ysq = mulmod(submod(mulmod(x, x, p), 1, p), *inv5, p);
    for (u64 y : roots[ysq]) {
      TorusPoint beta(x, y, p);
      if (scalar_mul(ell, beta) == a) return beta;
    }
  }
  return std::nullopt;
}

bool verify_order_preimage_relation(u64 p, u64 ell) {
  check_ell(ell);
  TorusPoint a = alpha(p);
  int s = point_order_valuation(a, ell);
  PreimageDepth depth = max_preimage_depth(a, ell);
  if (s == 0) return depth.is_infinite();
  if (depth.is_infinite()) return false;
  int v = valuation(group_order(p).order, ell);
  return static_cast<u64>(v) == static_cast<u64>(s) + depth.value();
}

}  // namespace fibzeta
