#include "fibzeta/entry_point.hpp"

namespace fibzeta {

namespace {

std::map<u64, int> z_valuations(u64 z) {
  std::map<u64, int> v;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull}) v[q] = valuation(z, q);
  return v;
}

}  // namespace

u64 entry_point_naive(u64 p) {
  if (p < 2) throw std::invalid_argument("entry_point_naive: p must be >= 2");
  u64 a = 1 % p, b = 1 % p;  // F_1, F_2
  for (u64 n = 1; n <= p + 1; ++n) {
    if (a == 0) return n;
    u64 next = addmod(a, b, p);
    a = b;
    b = next;
  }
  throw std::invalid_argument("entry_point_naive: no zero within p + 1 steps (p not prime?)");
}

EntryPointRecord entry_point_fast(u64 p) {
  if (p == 2 || p == 5)
    throw std::invalid_argument("entry_point_fast: p = 2 and p = 5 take the naive path");
  GroupOrderInfo info = group_order(p);
  Factorization f = factorize(info.order);
  u64 ord = element_order(alpha(p), f);

  EntryPointRecord rec;
  rec.p = p;
  rec.epsilon = info.epsilon;
  rec.group_order = info.order;
  rec.alpha_order = ord;
  if (ord % 2 == 1) {
    rec.z = 2 * ord;
    rec.z_case = EntryPointCase::Odd;
  } else if (ord % 4 == 2) {
    rec.z = ord / 2;
    rec.z_case = EntryPointCase::TwoMod4;
  } else {
    rec.z = ord;
    rec.z_case = EntryPointCase::ZeroMod4;
  }
  rec.valuations = z_valuations(rec.z);
  return rec;
}

EntryPointRecord entry_point_record(u64 p) {
  if (p != 2 && p != 5) return entry_point_fast(p);
  EntryPointRecord rec;
  rec.p = p;
  rec.epsilon = (p == 5) ? 0 : -1;  // (2|5) = -1, (5|5) = 0
  rec.z = entry_point_naive(p);
  rec.z_case = EntryPointCase::Naive;
  rec.valuations = z_valuations(rec.z);
  return rec;
}

int q_adic_valuation_of_alpha_order(u64 p, u64 q) {
  if (p == 2 || p == 5)
    throw std::invalid_argument("q_adic_valuation_of_alpha_order: p must not be 2 or 5");
  return point_order_valuation(alpha(p), q);
}

int q_adic_valuation_of_Z(u64 p, u64 q) {
  int s = q_adic_valuation_of_alpha_order(p, q);
  if (q != 2) return s;
  if (s == 0) return 1;  // |alpha| odd, Z = 2|alpha|
  if (s == 1) return 0;  // |alpha| = 2 (mod 4), Z = |alpha| / 2
  return s;              // |alpha| = 0 (mod 4), Z = |alpha|
}

}  // namespace fibzeta
