#include "fibzeta/density.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "fibzeta/affine.hpp"
#include "fibzeta/entry_point.hpp"
#include "fibzeta/factor.hpp"
#include "fibzeta/sieve.hpp"

namespace fibzeta {

namespace {

struct JointBlock {
  u64 q = 0;
  int i_max = 0;
  size_t offset = 0;  // index of cell (0, 0) in the flat counter array
  size_t cells() const {
    return static_cast<size_t>(i_max + 1) * (i_max + 2) / 2;
  }
  // cells are laid out (i, j) with 0 <= j <= i <= i_max, i major
  size_t cell(int i, int j) const {
    return offset + static_cast<size_t>(i) * (i + 1) / 2 + static_cast<size_t>(j);
  }
};

struct CounterBank {
  u64 pi = 0;
  std::vector<u64> divisor_counts;
  std::vector<u64> joint_counts;
};

struct ScanPlan {
  u64 x;
  bool include_small;
  std::vector<std::pair<u64, std::vector<std::pair<u64, int>>>> divisors;  // (m, factors)
  std::vector<JointBlock> blocks;
  std::vector<u64> needed_qs;  // sorted, unique
};

ScanPlan build_plan(const ScanConfig& cfg) {
  if (cfg.x < 10) throw std::invalid_argument("scan: x must be >= 10");
  if (cfg.divisor_targets.empty() && cfg.joint_targets.empty())
    throw std::invalid_argument("scan: no targets");
  if (cfg.worker_count < 1) throw std::invalid_argument("scan: worker_count must be >= 1");
  if (cfg.segment_size < 2) throw std::invalid_argument("scan: segment_size must be >= 2");

  ScanPlan plan;
  plan.x = cfg.x;
  plan.include_small = cfg.include_small_primes;
  for (u64 m : cfg.divisor_targets) {
    if (m < 2) throw std::invalid_argument("scan: divisor target must be >= 2");
    plan.divisors.emplace_back(m, factorize(m).factors);
  }
  size_t offset = 0;
  for (auto [q, i_max] : cfg.joint_targets) {
    if (!is_prime_u64(q)) throw std::invalid_argument("scan: joint target q must be prime");
    if (i_max < 0) throw std::invalid_argument("scan: i_max must be >= 0");
    JointBlock blk{q, i_max, offset};
    offset += blk.cells();
    plan.blocks.push_back(blk);
  }
  for (auto& [m, factors] : plan.divisors)
    for (auto [q, e] : factors) plan.needed_qs.push_back(q);
  for (auto& blk : plan.blocks) plan.needed_qs.push_back(blk.q);
  std::sort(plan.needed_qs.begin(), plan.needed_qs.end());
  plan.needed_qs.erase(std::unique(plan.needed_qs.begin(), plan.needed_qs.end()),
                       plan.needed_qs.end());
  if (plan.needed_qs.size() > 64)
    throw std::invalid_argument("scan: too many distinct primes across targets");
  return plan;
}

void process_prime(u64 p, const ScanPlan& plan, CounterBank& bank) {
  ++bank.pi;

  if (p == 2 || p == 5) {
    if (!plan.include_small) return;
    u64 z = entry_point_naive(p);  // 3 or 5
    for (size_t idx = 0; idx < plan.divisors.size(); ++idx)
      if (z % plan.divisors[idx].first == 0) ++bank.divisor_counts[idx];
    if (p == 5) return;  // epsilon = 0: no joint row
    // p = 2: epsilon = -1, p - epsilon = 3
    for (const auto& blk : plan.blocks) {
      int i = valuation(3, blk.q);
      int j = valuation(z, blk.q);
      if (i <= blk.i_max) ++bank.joint_counts[blk.cell(i, j)];
    }
    return;
  }

  int eps = (p % 5 == 1 || p % 5 == 4) ? +1 : -1;
  u64 n = eps > 0 ? p - 1 : p + 1;

  // one group-side valuation per needed q, reused by every target
  int vz[64];
  for (size_t qi = 0; qi < plan.needed_qs.size(); ++qi)
    vz[qi] = q_adic_valuation_of_Z(p, plan.needed_qs[qi]);
  auto vz_of = [&](u64 q) {
    size_t qi = static_cast<size_t>(
        std::lower_bound(plan.needed_qs.begin(), plan.needed_qs.end(), q) -
        plan.needed_qs.begin());
    return vz[qi];
  };

  for (size_t idx = 0; idx < plan.divisors.size(); ++idx) {
    bool divides = true;
    for (auto [q, e] : plan.divisors[idx].second) {
      if (vz_of(q) < e) {
        divides = false;
        break;
      }
    }
    if (divides) ++bank.divisor_counts[idx];
  }

  for (const auto& blk : plan.blocks) {
    int i = valuation(n, blk.q);
    int j = vz_of(blk.q);
    if (i <= blk.i_max) ++bank.joint_counts[blk.cell(i, j)];
  }
}

}  // namespace

DensityReport scan(const ScanConfig& cfg) {
  ScanPlan plan = build_plan(cfg);
  size_t joint_cells = plan.blocks.empty()
                           ? 0
                           : plan.blocks.back().offset + plan.blocks.back().cells();

  SegmentSieve sieve(cfg.x);
  u64 segments = (cfg.x - 2) / cfg.segment_size + 1;
  std::atomic<u64> next_segment{0};

  std::vector<CounterBank> banks(cfg.worker_count);
  for (auto& bank : banks) {
    bank.divisor_counts.assign(plan.divisors.size(), 0);
    bank.joint_counts.assign(joint_cells, 0);
  }

  auto work = [&](CounterBank& bank) {
    std::vector<u64> primes;
    for (;;) {
      u64 seg = next_segment.fetch_add(1, std::memory_order_relaxed);
      if (seg >= segments) break;
      u64 lo = 2 + seg * cfg.segment_size;
      u64 hi = std::min(cfg.x, lo + cfg.segment_size - 1) + 1;
      primes.clear();
      sieve.primes_in(lo, hi, primes);
      for (u64 p : primes) process_prime(p, plan, bank);
    }
  };

  if (cfg.worker_count == 1) {
    work(banks[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(cfg.worker_count);
    for (unsigned w = 0; w < cfg.worker_count; ++w)
      threads.emplace_back(work, std::ref(banks[w]));
    for (auto& t : threads) t.join();
  }

  // merging is a plain sum: independent of worker count and scheduling
  CounterBank merged;
  merged.divisor_counts.assign(plan.divisors.size(), 0);
  merged.joint_counts.assign(joint_cells, 0);
  for (const auto& bank : banks) {
    merged.pi += bank.pi;
    for (size_t idx = 0; idx < bank.divisor_counts.size(); ++idx)
      merged.divisor_counts[idx] += bank.divisor_counts[idx];
    for (size_t idx = 0; idx < bank.joint_counts.size(); ++idx)
      merged.joint_counts[idx] += bank.joint_counts[idx];
  }

  DensityReport report;
  report.x = cfg.x;
  report.pi_x = merged.pi;
  for (size_t idx = 0; idx < plan.divisors.size(); ++idx) {
    DivisorEntry e;
    e.m = plan.divisors[idx].first;
    e.count = merged.divisor_counts[idx];
    report.entries.push_back(e);
  }
  for (const auto& blk : plan.blocks) {
    for (int i = 0; i <= blk.i_max; ++i) {
      for (int j = 0; j <= i; ++j) {
        JointEntry e;
        e.q = blk.q;
        e.i = i;
        e.j = j;
        e.count = merged.joint_counts[blk.cell(i, j)];
        e.outside_proof_scope = (blk.q == 2);
        report.joint.push_back(e);
      }
    }
  }
  return report;
}

DensityReport compare(DensityReport report, double tolerance) {
  if (report.pi_x == 0) throw std::invalid_argument("compare: empty report");
  for (auto& e : report.entries) {
    e.predicted = zeta(e.m);
    ExactRational observed(static_cast<i128>(e.count), static_cast<i128>(report.pi_x));
    e.abs_error = (observed - e.predicted).abs();
    e.flagged = e.abs_error.to_double() > tolerance;
    e.annotated = true;
  }
  for (auto& e : report.joint) {
    e.predicted = zeta_joint(e.q, e.i, e.j);
    ExactRational observed(static_cast<i128>(e.count), static_cast<i128>(report.pi_x));
    e.abs_error = (observed - e.predicted).abs();
    e.flagged = e.abs_error.to_double() > tolerance;
    e.annotated = true;
  }
  return report;
}

bool any_flagged(const DensityReport& report) {
  for (const auto& e : report.entries)
    if (e.flagged) return true;
  for (const auto& e : report.joint)
    if (e.flagged) return true;
  return false;
}

}  // namespace fibzeta
