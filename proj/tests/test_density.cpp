#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>

#include "fibzeta/affine.hpp"
#include "fibzeta/density.hpp"
#include "fibzeta/report_io.hpp"
#include "fibzeta/sieve.hpp"
#include "oracles.hpp"

using namespace fibzeta;

namespace {

struct OracleCounts {
  u64 pi = 0;
  std::map<u64, u64> divisor;
  std::map<std::tuple<u64, int, int>, u64> joint;
};

// independent recount: entry points by the O(p) walk, valuations by division
OracleCounts recount(u64 x, const std::vector<u64>& ms,
                     const std::vector<std::pair<u64, int>>& joints,
                     bool include_small) {
  OracleCounts oc;
  for (u64 p : oracles::primes_below(x)) {
    ++oc.pi;
    if ((p == 2 || p == 5) && !include_small) continue;
    u64 z = oracles::entry_walk(p);
    for (u64 m : ms)
      if (z % m == 0) ++oc.divisor[m];
    if (p == 5) continue;  // no group side when epsilon = 0
    u64 n = p == 2 ? 3 : (p % 5 == 1 || p % 5 == 4 ? p - 1 : p + 1);
    for (auto [q, i_max] : joints) {
      int i = oracles::val(n, q);
      int j = oracles::val(z, q);
      if (i <= i_max) ++oc.joint[{q, i, j}];
    }
  }
  return oc;
}

}  // namespace

// ====== prime sieve ======

TEST_CASE("prime streams at small bounds") {
  std::vector<u64> expect = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  CHECK(primes_up_to(30) == expect);
  CHECK(primes_up_to(2) == std::vector<u64>{2});
  CHECK(count_primes(100) == 25);
  CHECK(count_primes(1000) == 168);
}

TEST_CASE("prime counts at large bounds") {
  CHECK(count_primes(1000000) == 78498);
  CHECK(count_primes(10000000) == 664579);
}

TEST_CASE("segment boundaries do not lose or duplicate primes") {
  auto expect = oracles::primes_below(10000);
  for (u64 seg : {2ull, 3ull, 64ull, 997ull, 65536ull}) {
    std::vector<u64> got;
    for_each_prime(10000, seg, [&](u64 p) { got.push_back(p); });
    REQUIRE(got == expect);
  }

  SegmentSieve sieve(10000);
  std::vector<u64> chunked;
  for (u64 lo = 2; lo <= 10000; lo += 137)
    sieve.primes_in(lo, std::min<u64>(10000, lo + 137 - 1) + 1, chunked);
  CHECK(chunked == expect);
  std::vector<u64> sink;
  CHECK_THROWS_AS(sieve.primes_in(0, 10002, sink), std::invalid_argument);
}

// ====== scan counters ======

TEST_CASE("divisibility by 2 over the first hundred") {
  ScanConfig cfg;
  cfg.x = 100;
  cfg.divisor_targets = {2};
  DensityReport r = scan(cfg);
  CHECK(r.pi_x == 25);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].m == 2);
  CHECK(r.entries[0].count == 15);

  // the walk-based recount pins the same value
  OracleCounts oc = recount(100, {2}, {}, true);
  CHECK(oc.pi == 25);
  CHECK(oc.divisor[2] == 15);
}

TEST_CASE("scan matches the walk-based recount across bounds and targets") {
  std::vector<u64> ms = {2, 3, 4, 5, 6, 8, 9, 10, 20};
  std::vector<std::pair<u64, int>> joints = {{2, 3}, {3, 3}, {5, 3}};
  for (u64 x : {100ull, 1000ull, 31000ull}) {
    OracleCounts oc = recount(x, ms, joints, true);
    ScanConfig cfg;
    cfg.x = x;
    cfg.divisor_targets = ms;
    cfg.joint_targets = joints;
    cfg.worker_count = 3;
    cfg.segment_size = 4096;
    DensityReport r = scan(cfg);
    REQUIRE(r.pi_x == oc.pi);
    for (const auto& e : r.entries) REQUIRE(e.count == oc.divisor[e.m]);
    REQUIRE(r.joint.size() == 3 * 10);  // three blocks of (i, j) cells, i <= 3
    for (const auto& e : r.joint)
      REQUIRE(e.count == oc.joint[{e.q, e.i, e.j}]);
  }
}

TEST_CASE("joint cells partition the primes with small group valuation") {
  ScanConfig cfg;
  cfg.x = 20000;
  cfg.joint_targets = {{3, 2}};
  DensityReport r = scan(cfg);

  u64 in_cells = 0;
  for (const auto& e : r.joint) in_cells += e.count;
  u64 expect = 0;
  for (u64 p : oracles::primes_below(20000)) {
    if (p == 5) continue;
    u64 n = p == 2 ? 3 : (p % 5 == 1 || p % 5 == 4 ? p - 1 : p + 1);
    if (oracles::val(n, 3) <= 2) ++expect;
  }
  CHECK(in_cells == expect);
}

TEST_CASE("dropping the small primes only touches their own contributions") {
  ScanConfig cfg;
  cfg.x = 100;
  cfg.divisor_targets = {3, 5, 4};
  DensityReport with = scan(cfg);
  cfg.include_small_primes = false;
  DensityReport without = scan(cfg);

  CHECK(with.pi_x == without.pi_x);  // pi(x) is not redefined by the flag
  // Z(2) = 3 and Z(5) = 5 feed exactly the m = 3 and m = 5 counters
  CHECK(with.entries[0].count == without.entries[0].count + 1);
  CHECK(with.entries[1].count == without.entries[1].count + 1);
  CHECK(with.entries[2].count == without.entries[2].count);
}

TEST_CASE("entries come back in the configured order") {
  ScanConfig cfg;
  cfg.x = 200;
  cfg.divisor_targets = {20, 2, 9};
  cfg.joint_targets = {{5, 1}, {3, 0}};
  DensityReport r = scan(cfg);
  REQUIRE(r.entries.size() == 3);
  CHECK(r.entries[0].m == 20);
  CHECK(r.entries[1].m == 2);
  CHECK(r.entries[2].m == 9);
  REQUIRE(r.joint.size() == 4);  // (i_max 1 -> 3 cells) then (i_max 0 -> 1 cell)
  CHECK(r.joint[0].q == 5);
  CHECK(std::make_pair(r.joint[0].i, r.joint[0].j) == std::make_pair(0, 0));
  CHECK(std::make_pair(r.joint[2].i, r.joint[2].j) == std::make_pair(1, 1));
  CHECK(r.joint[3].q == 3);
}

TEST_CASE("worker count and segment size never change the counters") {
  ScanConfig base;
  base.x = 20000;
  base.divisor_targets = {2, 10};
  base.joint_targets = {{3, 2}};

  DensityReport reference = compare(scan(base), 0.01);
  std::string reference_json = report_to_json(reference);
  for (unsigned workers : {2u, 5u}) {
    for (u64 seg : {97ull, 1024ull, 65536ull}) {
      ScanConfig cfg = base;
      cfg.worker_count = workers;
      cfg.segment_size = seg;
      DensityReport r = compare(scan(cfg), 0.01);
      REQUIRE(report_to_json(r) == reference_json);
    }
  }
}

// ====== configuration validation ======

TEST_CASE("bad configurations are rejected") {
  ScanConfig cfg;
  cfg.x = 5;
  cfg.divisor_targets = {2};
  CHECK_THROWS_AS(scan(cfg), std::invalid_argument);

  cfg.x = 100;
  cfg.divisor_targets = {};
  CHECK_THROWS_AS(scan(cfg), std::invalid_argument);

  cfg.divisor_targets = {1};
  CHECK_THROWS_AS(scan(cfg), std::invalid_argument);

  cfg.divisor_targets = {2};
  cfg.joint_targets = {{4, 1}};
  CHECK_THROWS_AS(scan(cfg), std::invalid_argument);

  cfg.joint_targets = {{3, -1}};
  CHECK_THROWS_AS(scan(cfg), std::invalid_argument);

  cfg.joint_targets = {};
  cfg.worker_count = 0;
  CHECK_THROWS_AS(scan(cfg), std::invalid_argument);
}

// ====== predictions and annotation ======

TEST_CASE("comparison annotates predictions and errors") {
  ScanConfig cfg;
  cfg.x = 10000;
  cfg.divisor_targets = {2, 10};
  cfg.joint_targets = {{3, 1}, {2, 1}};
  DensityReport r = compare(scan(cfg), 1.0);

  for (const auto& e : r.entries) {
    REQUIRE(e.annotated);
    REQUIRE(e.predicted == zeta(e.m));
    ExactRational observed(static_cast<i128>(e.count),
                           static_cast<i128>(r.pi_x));
    REQUIRE(e.abs_error == (observed - e.predicted).abs());
    REQUIRE_FALSE(e.flagged);  // tolerance 1.0 flags nothing
  }
  for (const auto& e : r.joint) {
    REQUIRE(e.annotated);
    REQUIRE(e.predicted == zeta_joint(e.q, e.i, e.j));
    REQUIRE(e.outside_proof_scope == (e.q == 2));
  }
  CHECK_FALSE(any_flagged(r));

  DensityReport strict = compare(scan(cfg), 1e-12);
  CHECK(any_flagged(strict));  // finite samples never land exactly on target
}

TEST_CASE("comparison of an empty report is rejected") {
  DensityReport empty;
  CHECK_THROWS_AS(compare(empty, 0.01), std::invalid_argument);
}

// ====== renderings ======

TEST_CASE("report renderings carry the full table") {
  ScanConfig cfg;
  cfg.x = 100;
  cfg.divisor_targets = {2};
  cfg.joint_targets = {{3, 1}, {2, 0}};
  DensityReport r = compare(scan(cfg), 0.5);

  std::string json = report_to_json(r);
  CHECK(json.find("{\"x\":100,\"pi_x\":25,\"entries\":[") == 0);
  CHECK(json.find("\"m\":2,\"count\":15") != std::string::npos);
  CHECK(json.find("\"scope_flag\":\"outside proof scope\"") != std::string::npos);
  CHECK(json.find("\"scope_flag\":\"\"") != std::string::npos);
  CHECK(json.back() == '\n');

  std::string csv = report_to_csv(r);
  CHECK(csv.find("x,pi_x\n100,25\n") == 0);
  CHECK(csv.find("m,count,observed,predicted_num,predicted_den,abs_error\n") !=
        std::string::npos);
  CHECK(csv.find("q,i,j,count,observed,predicted_num,predicted_den,abs_error,"
                 "scope_flag\n") != std::string::npos);
  CHECK(csv.find(",outside proof scope\n") != std::string::npos);

  std::string table = report_to_table(r);
  CHECK(table.find("x = 100, pi(x) = 25") == 0);
  CHECK(table.find("[outside proof scope]") != std::string::npos);
}

TEST_CASE("renderings refuse a report that was never compared") {
  ScanConfig cfg;
  cfg.x = 100;
  cfg.divisor_targets = {2};
  DensityReport r = scan(cfg);
  CHECK_THROWS_AS(report_to_json(r), std::invalid_argument);
  CHECK_THROWS_AS(report_to_csv(r), std::invalid_argument);
  CHECK_THROWS_AS(report_to_table(r), std::invalid_argument);
}

TEST_CASE("observed ratios are rendered with nine fixed places") {
  ScanConfig cfg;
  cfg.x = 100;
  cfg.divisor_targets = {2};
  DensityReport r = compare(scan(cfg), 0.5);
  // 15 / 25 = 0.6 exactly
  CHECK(report_to_json(r).find("\"observed\":0.600000000") != std::string::npos);
}
