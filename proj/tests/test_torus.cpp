#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "fibzeta/fib.hpp"
#include "fibzeta/torus.hpp"
#include "oracles.hpp"

using namespace fibzeta;

namespace {

// every point of G(F_p) by brute curve scan, independent of the group code
std::vector<TorusPoint> all_points(u64 p) {
  std::vector<TorusPoint> pts;
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y) {
      u64 lhs = submod(mulmod(x, x, p), mulmod(5 % p, mulmod(y, y, p), p), p);
      if (lhs == 1 % p) pts.emplace_back(x, y, p);
    }
  return pts;
}

std::optional<u64> brute_sqrt5(u64 p) {
  for (u64 s = 0; s < p; ++s)
    if (mulmod(s, s, p) == 5 % p) return s;
  return std::nullopt;
}

std::vector<u64> odd_primes_below(u64 limit) {
  std::vector<u64> ps;
  for (u64 p : oracles::primes_below(limit))
    if (p != 2 && p != 5) ps.push_back(p);
  return ps;
}

}  // namespace

// ====== construction ======

TEST_CASE("construction validates the curve and the field") {
  CHECK_NOTHROW(TorusPoint(1, 0, 11));
  CHECK_NOTHROW(TorusPoint(7, 6, 11));
  CHECK_THROWS_AS(TorusPoint(2, 0, 11), std::invalid_argument);   // off the conic
  CHECK_THROWS_AS(TorusPoint(11, 0, 11), std::invalid_argument);  // not reduced
  CHECK_THROWS_AS(TorusPoint(1, 0, 2), std::invalid_argument);    // even p
  CHECK_THROWS_AS(TorusPoint(1, 0, 5), std::invalid_argument);    // p = 5
  CHECK_THROWS_AS(TorusPoint(1, 0, 15), std::invalid_argument);   // multiple of 5
}

TEST_CASE("alpha at small primes") {
  CHECK(alpha(11) == TorusPoint(7, 6, 11));  // (3/2, 1/2) with 1/2 = 6
  CHECK(alpha(13) == TorusPoint(8, 7, 13));
  CHECK(alpha(3) == TorusPoint(0, 2, 3));
  CHECK_THROWS_AS(alpha(5), std::invalid_argument);
}

TEST_CASE("alpha multiples track the halved Lucas and Fibonacci values") {
  // n * alpha = (L_2n / 2, F_2n / 2)
  for (u64 p : {11ull, 13ull, 97ull, 101ull}) {
    u64 inv2 = (p + 1) / 2;
    TorusPoint a = alpha(p);
    for (u64 n = 0; n <= 50; ++n) {
      u64 lx = mulmod(oracles::lucas_iter(2 * n, p).first, inv2, p);
      u64 fy = mulmod(oracles::fib_iter(2 * n, p).first, inv2, p);
      REQUIRE(scalar_mul(n, a) == TorusPoint(lx, fy, p));
    }
  }
  CHECK(scalar_mul(2, alpha(11)) == TorusPoint(9, 7, 11));
  CHECK(scalar_mul(5, alpha(11)) == identity(11));
}

// ====== order of the group ======

TEST_CASE("group order splits on the residue of p mod 5") {
  auto info = group_order(11);
  CHECK(info.epsilon == 1);
  CHECK(info.order == 10);
  info = group_order(13);
  CHECK(info.epsilon == -1);
  CHECK(info.order == 14);
  info = group_order(7);
  CHECK(info.epsilon == -1);
  CHECK(info.order == 8);
  info = group_order(19);
  CHECK(info.epsilon == 1);
  CHECK(info.order == 18);
}

TEST_CASE("exhaustive point count equals p - epsilon") {
  CHECK(count_points_oracle(3) == 4);
  CHECK(count_points_oracle(7) == 8);
  CHECK(count_points_oracle(11) == 10);
  for (u64 p : odd_primes_below(500))
    REQUIRE(count_points_oracle(p) == group_order(p).order);
  CHECK_THROWS_AS(count_points_oracle(100003), std::invalid_argument);
}

// ====== group axioms ======

TEST_CASE("abelian group axioms hold exhaustively for p < 100") {
  for (u64 p : odd_primes_below(100)) {
    auto pts = all_points(p);
    REQUIRE(pts.size() == group_order(p).order);
    TorusPoint id = identity(p);

    for (const auto& a : pts) {
      REQUIRE(add(a, id) == a);
      REQUIRE(add(a, negate(a)) == id);
    }
    for (const auto& a : pts)
      for (const auto& b : pts) REQUIRE(add(a, b) == add(b, a));
    for (const auto& a : pts)
      for (const auto& b : pts)
        for (const auto& c : pts)
          REQUIRE(add(add(a, b), c) == add(a, add(b, c)));
  }
}

TEST_CASE("mismatched fields are rejected") {
  CHECK_THROWS_AS(add(alpha(11), alpha(13)), std::invalid_argument);
}

TEST_CASE("scalar multiplication is a homomorphism from the integers") {
  for (u64 p : {11ull, 13ull, 103ull}) {
    TorusPoint a = alpha(p);
    CHECK(scalar_mul(0, a) == identity(p));
    CHECK(scalar_mul(1, a) == a);
    for (u64 m = 0; m <= 40; ++m)
      for (u64 n = 0; n <= 40; ++n)
        REQUIRE(scalar_mul(m + n, a) == add(scalar_mul(m, a), scalar_mul(n, a)));
  }
}

TEST_CASE("every element is killed by the group order") {
  for (u64 p : odd_primes_below(100)) {
    u64 N = group_order(p).order;
    for (const auto& a : all_points(p)) REQUIRE(scalar_mul(N, a) == identity(p));
  }
}

TEST_CASE("the group is cyclic: a generator exists for every p < 300") {
  for (u64 p : odd_primes_below(300)) {
    u64 N = group_order(p).order;
    Factorization f = factorize(N);
    bool found = false;
    for (const auto& a : all_points(p)) {
      if (element_order(a, f) == N) {
        found = true;
        break;
      }
    }
    REQUIRE(found);
  }
}

// ====== multiplicative model ======

TEST_CASE("split primes map onto the multiplicative group") {
  CHECK(to_multiplicative(alpha(11), 4) == 9);  // 7 + 4*6 = 31 = 9 mod 11
  CHECK(from_multiplicative(9, 4, 11) == alpha(11));
  CHECK_THROWS_AS(to_multiplicative(alpha(11), 5), std::invalid_argument);  // 5^2 != 5

  for (u64 p : odd_primes_below(300)) {
    auto s = brute_sqrt5(p);
    if (!s) {
      CHECK(group_order(p).epsilon == -1);
      continue;
    }
    CHECK(group_order(p).epsilon == 1);
    auto pts = all_points(p);
    for (const auto& a : pts) {
      u64 t = to_multiplicative(a, *s);
      REQUIRE(from_multiplicative(t, *s, p) == a);
    }
    // the map is a homomorphism onto F_p^*
    for (size_t ia = 0; ia < pts.size(); ia += 3)
      for (size_t ib = 0; ib < pts.size(); ib += 3) {
        u64 lhs = to_multiplicative(add(pts[ia], pts[ib]), *s);
        u64 rhs = mulmod(to_multiplicative(pts[ia], *s),
                         to_multiplicative(pts[ib], *s), p);
        REQUIRE(lhs == rhs);
      }
  }
}

// ====== element orders ======

TEST_CASE("element order by divisor refinement") {
  CHECK(element_order(alpha(11), factorize(10)) == 5);
  CHECK(element_order(identity(11), factorize(10)) == 1);
  CHECK(element_order(alpha(13), factorize(14)) == 14);
  CHECK(element_order(alpha(7), factorize(8)) == 8);

  Factorization wrong = factorize(6);
  CHECK_THROWS_AS(element_order(alpha(11), wrong), std::invalid_argument);
}

TEST_CASE("element order divides the group order and is minimal") {
  for (u64 p : odd_primes_below(120)) {
    u64 N = group_order(p).order;
    Factorization f = factorize(N);
    for (const auto& a : all_points(p)) {
      u64 ord = element_order(a, f);
      REQUIRE(N % ord == 0);
      REQUIRE(scalar_mul(ord, a) == identity(p));
      for (u64 d = 1; d < ord; ++d)
        if (ord % d == 0) REQUIRE(scalar_mul(d, a) != identity(p));
    }
  }
}

TEST_CASE("point order valuation avoids factoring") {
  CHECK(point_order_valuation(alpha(11), 2) == 0);  // |alpha| = 5
  CHECK(point_order_valuation(alpha(11), 5) == 1);
  CHECK(point_order_valuation(alpha(13), 2) == 1);  // |alpha| = 14
  CHECK(point_order_valuation(alpha(13), 7) == 1);
  CHECK(point_order_valuation(alpha(13), 3) == 0);

  for (u64 p : odd_primes_below(500)) {
    u64 N = group_order(p).order;
    Factorization f = factorize(N);
    u64 ord = element_order(alpha(p), f);
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull})
      REQUIRE(point_order_valuation(alpha(p), q) == oracles::val(ord, q));
  }
}
