#pragma once

#include <cstdint>
#include <optional>

#include "fibzeta/torus.hpp"

namespace fibzeta {

// Maximal n such that an ell^n-th preimage of a point exists; unbounded
// when ell does not divide the point's order.
class PreimageDepth {
 public:
  static PreimageDepth infinite() { return PreimageDepth(true, 0); }
  static PreimageDepth finite(u64 v) { return PreimageDepth(false, v); }

  bool is_infinite() const { return infinite_; }
  u64 value() const {
    if (infinite_) throw std::logic_error("PreimageDepth: depth is infinite");
    return value_;
  }
  bool operator==(const PreimageDepth&) const = default;

 private:
  PreimageDepth(bool inf, u64 v) : infinite_(inf), value_(v) {}
  bool infinite_;
  u64 value_;
};

// Does some beta with ell^n * beta = a exist? In the cyclic group of order
// N this holds exactly when (N / ell^min(n, ord_ell(N))) * a is the
// identity. Negative n is rejected.
bool has_preimage_power(const TorusPoint& a, u64 ell, std::int64_t n);

// Largest n with an ell^n-th preimage, found by iterating
// has_preimage_power; infinite when ell does not divide |a|.
PreimageDepth max_preimage_depth(const TorusPoint& a, u64 ell);

// Exhaustive search over G(F_p) for one beta with ell * beta = a;
// p <= 10^4. Deterministic scan order (x ascending, then y).
std::optional<TorusPoint> find_preimage_oracle(const TorusPoint& a, u64 ell);

// Checks ord_ell(|alpha|) = ord_ell(|G(F_p)|) - max depth, with the
// infinite case exactly when ell does not divide |alpha|.
bool verify_order_preimage_relation(u64 p, u64 ell);

}  // namespace fibzeta
