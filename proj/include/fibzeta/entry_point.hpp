#pragma once

#include <map>
#include <optional>

#include "fibzeta/factor.hpp"
#include "fibzeta/torus.hpp"

namespace fibzeta {

// Which branch produced Z(p) from |alpha|.
enum class EntryPointCase {
  Odd,         // |alpha| odd          -> Z = 2|alpha|
  TwoMod4,     // |alpha| = 2 (mod 4)  -> Z = |alpha| / 2
  ZeroMod4,    // |alpha| = 0 (mod 4)  -> Z = |alpha|
  Naive,       // walked the sequence directly (p = 2, 5)
};

struct EntryPointRecord {
  u64 p = 0;
  int epsilon = 0;                 // +1, -1, or 0 for p = 5
  std::optional<u64> group_order;  // p - epsilon; absent on the naive path
  std::optional<u64> alpha_order;
  u64 z = 0;
  EntryPointCase z_case = EntryPointCase::Naive;
  std::map<u64, int> valuations;   // ord_q(z) for q in {2, 3, 5, 7, 11}
};

// Smallest n >= 1 with p | F_n, found by walking the sequence mod p.
// Throws if no zero appears within p + 1 steps (composite input).
u64 entry_point_naive(u64 p);

// Z(p) through the group: factor |G(F_p)|, refine to |alpha|, then case
// split on |alpha| mod 4. Rejects p in {2, 5}.
EntryPointRecord entry_point_fast(u64 p);

// entry_point_fast with a naive fallback for p in {2, 5}.
EntryPointRecord entry_point_record(u64 p);

// ord_q(|alpha|) without factoring anything (q-part refinement).
int q_adic_valuation_of_alpha_order(u64 p, u64 q);

// ord_q(Z(p)) for p not in {2, 5}. Odd q: equals ord_q(|alpha|). q = 2:
// transcribe ord_2(|alpha|) = 0 -> 1, 1 -> 0, s >= 2 -> s.
int q_adic_valuation_of_Z(u64 p, u64 q);

}  // namespace fibzeta
