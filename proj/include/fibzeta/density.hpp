#pragma once

#include <utility>
#include <vector>

#include "fibzeta/rational.hpp"

namespace fibzeta {

struct ScanConfig {
  u64 x = 0;
  std::vector<u64> divisor_targets;                  // m values for m | Z(p)
  std::vector<std::pair<u64, int>> joint_targets;    // (q, i_max)
  bool include_small_primes = true;                  // count p = 2 and p = 5
  unsigned worker_count = 1;
  u64 segment_size = 1u << 16;
};

struct DivisorEntry {
  u64 m = 0;
  u64 count = 0;
  ExactRational predicted;   // zeta(m), set by compare()
  ExactRational abs_error;   // |count / pi_x - predicted|
  bool annotated = false;
  bool flagged = false;
};

struct JointEntry {
  u64 q = 0;
  int i = 0, j = 0;
  u64 count = 0;
  ExactRational predicted;   // zeta_joint(q, i, j)
  ExactRational abs_error;
  bool annotated = false;
  bool flagged = false;
  bool outside_proof_scope = false;  // q = 2 rows
};

struct DensityReport {
  u64 x = 0;
  u64 pi_x = 0;
  std::vector<DivisorEntry> entries;
  std::vector<JointEntry> joint;
};

// Sieve [2, x], compute ord_q(Z(p)) per prime through the group (naive walk
// for p = 2, 5), and tally divisor and joint counters. Counter merging is a
// sum, so the result is identical for every worker_count and segment_size.
DensityReport scan(const ScanConfig& config);

// Fills predictions and absolute errors; flags entries beyond tolerance.
DensityReport compare(DensityReport report, double tolerance);

bool any_flagged(const DensityReport& report);

}  // namespace fibzeta
