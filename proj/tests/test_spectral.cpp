#include <random>

#include "common/error.hpp"
#include "doctest.h"
#include "exact/factor.hpp"
#include "exact/linalg.hpp"
#include "exact/smith.hpp"
#include "graphs/graph_io.hpp"
#include "oracles/oracles.hpp"
#include "spectral/spectral.hpp"
#include "support.hpp"

using namespace skewspec;
using exact::IntMatrix;
using exact::Integer;

namespace {

Integer evaluate(const spectral::CharPoly& p, long x) {
  Integer acc = 0;
  for (const auto& c : p.coeffs) acc = acc * x + c;
  return acc;
}

bool snf_shape(const std::vector<Integer>& d) {
  const std::size_t n = d.size();
  const std::size_t ones = (n + 1) / 2;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (d[i] != (i < ones ? 1 : 2)) return false;
  const Integer b = d.back() / 2;
  return d.back() == 2 * b && b % 2 != 0 && exact::factorize(b).square_free();
}

}  // namespace

TEST_CASE("walk matrix columns are S^k e") {
  const auto g = graphs::parse_code("3:+0-");
  const IntMatrix w = spectral::walk_matrix(g);
  CHECK(w == IntMatrix{{1, 1, -2}, {1, -2, -2}, {1, 1, -2}});
}

TEST_CASE("characteristic polynomial agrees with det(xI - A)") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const IntMatrix a = trial % 2 ? graphs::skew_adjacency(support::random_graph(n, rng))
                                  : support::random_matrix(n, n, 4, rng);
    const auto p = spectral::char_poly(a);
    for (long x = -2; x <= 2; ++x) {
      CHECK(evaluate(p, x) == oracle::cofactor_det(IntMatrix::identity(n) * Integer(x) - a));
    }
  }
}

TEST_CASE("fixture SNF and family membership") {
  const std::pair<const char*, long> cases[] = {{"example1.json", 523}, {"example2.json", 21},
                                                {"example3.json", 211211}};
  for (const auto& [name, reduced] : cases) {
    const auto fx = support::fixture(name);
    const auto g = support::graph(fx.at("skew"));
    const auto snf = exact::snf(spectral::walk_matrix(g)).d;
    std::vector<Integer> expected;
    for (const auto& d : fx.at("snf")) expected.push_back(d.get<long>());
    CHECK(snf == expected);
    CHECK(snf_shape(snf));
    const auto v = spectral::family_membership(g);
    CHECK(v.in_family);
    CHECK(abs(v.reduced) == reduced);
    CHECK(v.obstruction == spectral::Obstruction::None);
  }
}

TEST_CASE("family obstructions") {
  // no arcs: W has rank 1
  auto v = spectral::family_membership(graphs::parse_code("3:000"));
  CHECK_FALSE(v.controllable);
  CHECK(v.obstruction == spectral::Obstruction::NotControllable);

  std::mt19937_64 rng(8);
  std::size_t even = 0, square = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = spectral::family_membership(support::random_graph(6, rng));
    if (w.obstruction == spectral::Obstruction::EvenReduced) ++even;
    if (w.obstruction == spectral::Obstruction::NotSquareFree) {
      ++square;
      CHECK_FALSE(exact::factorize(abs(w.reduced)).square_free());
    }
    CHECK(w.in_family == (w.obstruction == spectral::Obstruction::None));
  }
  CHECK(even > 0);
  CHECK(square > 0);
}

TEST_CASE("parity vector and half-integer walk matrix") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const auto g = support::random_graph(n, rng);
    const auto me = spectral::parity_matrix(g) * std::span<const Integer>(exact::ones(n));
    for (const auto& x : me) CHECK(x % 2 == 0);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, n / 2);
    CHECK(spectral::modified_walk_matrix(g).det() * power == exact::det(spectral::walk_matrix(g)));
  }
}

TEST_CASE("generalized cospectrality") {
  const auto fx = support::fixture("example2.json");
  const auto sigma = support::graph(fx.at("skew"));
  const auto delta = support::graph(fx.at("delta1_skew"));
  CHECK(spectral::generalized_cospectral(sigma, delta));
  CHECK(spectral::generalized_cospectral(sigma, graphs::converse(sigma)));
  CHECK_FALSE(spectral::generalized_cospectral(sigma, graphs::parse_code("6:000000000000000")));
  CHECK_THROWS_AS(spectral::generalized_cospectral(sigma, graphs::parse_code("2:+")), Error);
  const IntMatrix s = graphs::skew_adjacency(graphs::parse_code("2:+"));
  CHECK(spectral::complement_matrix(s) == IntMatrix{{0, 0}, {2, 0}});
}
