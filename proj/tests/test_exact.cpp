#include <random>

#include "common/error.hpp"
#include "doctest.h"
#include "exact/factor.hpp"
#include "exact/linalg.hpp"
#include "exact/smith.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace skewspec;
using exact::IntMatrix;
using exact::Integer;

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = support::random_matrix(n, n, trial % 2 ? 3 : 40, rng);
    CHECK(exact::det(m) == oracle::cofactor_det(m));
  }
  CHECK(exact::det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(exact::det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(exact::det(IntMatrix(2, 3)), Error);
}

TEST_CASE("rational inverse") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = support::random_matrix(4, 4, 5, rng);
    const Integer d = exact::det(m);
    if (d == 0) {
      CHECK_THROWS_AS(exact::inverse_rational(m), Error);
      continue;
    }
    auto [adj, det] = exact::inverse_rational(m);
    CHECK(det == d);
    CHECK(m * adj == IntMatrix::identity(4) * d);
  }
}

TEST_CASE("Smith normal form matches gcd of minors and its transforms") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = support::random_matrix(n, n, trial % 3 == 0 ? 1 : 9, rng);
    const auto s = exact::snf(m);
    CHECK(s.d == oracle::snf_by_minors(m));
    CHECK(s.U * m * s.V == IntMatrix::diagonal(s.d));
    CHECK(abs(exact::det(s.U)) == 1);
    CHECK(abs(exact::det(s.V)) == 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (s.d[i] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
    }
  }
}

TEST_CASE("rank and nullspace mod p") {
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(exact::rank_mod_p(m, 5) == 2);
  const auto ns = exact::nullspace_mod_p(m, 5);
  REQUIRE(ns.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK((m * std::span<const Integer>(ns[0]))[i] % 5 == 0);
  std::size_t lead = 0;
  while (ns[0][lead] == 0) ++lead;
  CHECK(ns[0][lead] == 1);
  CHECK(exact::rank_mod_p(IntMatrix{{3, 6}, {9, 12}}, 3) == 0);
  CHECK_THROWS_AS(exact::rank_mod_p(m, 9), Error);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = support::random_matrix(4, 5, 6, rng);
    const Integer p = 7;
    const auto basis = exact::nullspace_mod_p(a, p);
    CHECK(basis.size() + exact::rank_mod_p(a, p) == 5);
    for (const auto& z : basis) {
      const auto az = a * std::span<const Integer>(z);
      for (const auto& x : az) CHECK(x % p == 0);
    }
  }
}

TEST_CASE("factorization and primality") {
  auto f = exact::factorize(Integer(19201));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].first == 7);
  CHECK(f.factors[1].first == 13);
  CHECK(f.factors[2].first == 211);
  CHECK(f.square_free());
  CHECK(f.product() == 19201);
  CHECK(exact::factorize(Integer(1)).factors.empty());
  CHECK_FALSE(exact::factorize(Integer(36)).square_free());
  CHECK_THROWS_AS(exact::factorize(Integer(0)), Error);

  for (long n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (long d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    CHECK(exact::is_prime(Integer(n)) == prime);
  }
  const Integer big("1000000000000000003");  // prime
  CHECK(exact::is_prime(big));
  const Integer semi = big * Integer("1000000007");
  auto g = exact::factorize(semi);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].first == Integer("1000000007"));
  CHECK(g.factors[1].first == big);
}

TEST_CASE("matrix helpers") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK((a * Integer(2)).content() == 2);
  CHECK(IntMatrix{{6, 9}, {3, 12}}.divided_exactly(3) == IntMatrix{{2, 3}, {1, 4}});
  CHECK_THROWS_AS(a.divided_exactly(2), Error);
  CHECK(IntMatrix{{1, 2}, {2, 1}}.is_symmetric());
}
