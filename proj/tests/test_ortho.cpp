#include <random>

#include "common/error.hpp"
#include "doctest.h"
#include "graphs/graph_io.hpp"
#include "ortho/rational_orthogonal.hpp"
#include "spectral/spectral.hpp"
#include "support.hpp"

using namespace skewspec;
using exact::IntMatrix;
using exact::Integer;

TEST_CASE("Q0 equals the fixture matrices") {
  for (const char* name : {"example1.json", "example2.json", "example3.json"}) {
    const auto fx = support::fixture(name);
    const auto g = support::graph(fx.at("skew"));
    const auto q0 = ortho::solve_q0(g);
    CHECK(q0 == support::orthogonal(fx.at("q0")));
    CHECK(ortho::q0_symmetry_check(q0));
    CHECK(ortho::alternating_walk_identity(q0, g));
    CHECK(ortho::verify_conjugation(q0, graphs::skew_adjacency(g), -graphs::skew_adjacency(g)));
  }
}

TEST_CASE("fixture factors compose to Q0") {
  const auto fx = support::fixture("example2.json");
  const auto q0 = support::orthogonal(fx.at("q0"));
  const auto q1 = support::orthogonal(fx.at("q1"));
  const auto q2 = support::orthogonal(fx.at("q2"));
  CHECK(ortho::compose(q1, q2) == q0);
  CHECK(ortho::compose(q2.transpose(), q1.transpose()) == q0);
  CHECK(ortho::compose(q1, q1.transpose()) == ortho::identity(6));

  const auto sigma = support::graph(fx.at("skew"));
  const auto delta = support::graph(fx.at("delta1_skew"));
  const auto t = ortho::solve_transition(sigma, delta);
  CHECK(t == q1);
  CHECK(ortho::conjugate(q1, graphs::skew_adjacency(sigma)) == graphs::skew_adjacency(delta));
}

TEST_CASE("level normalization") {
  const IntMatrix n = IntMatrix{{2, 2, -1}, {2, -1, 2}, {-1, 2, 2}};
  const auto q = ortho::level_normalize(n, 3);
  CHECK(q.level() == 3);
  const auto scaled = ortho::level_normalize(n * Integer(5), 15);
  CHECK(scaled == q);
  CHECK(ortho::level_normalize(IntMatrix::identity(3) * Integer(7), 7).is_permutation());
  CHECK_THROWS_AS(ortho::level_normalize(n, 4), Error);
  CHECK_THROWS_AS(ortho::level_normalize(IntMatrix{{1, 1}, {1, -1}}, 1), Error);
  CHECK_THROWS_AS(ortho::level_normalize(n, 0), Error);
}

TEST_CASE("Q0 properties on random controllable graphs") {
  std::mt19937_64 rng(13);
  int controllable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto g = support::random_graph(n, rng);
    if (!spectral::family_membership(g).controllable) {
      CHECK_THROWS_AS(ortho::solve_q0(g), Error);
      continue;
    }
    ++controllable;
    const auto q0 = ortho::solve_q0(g);
    CHECK(ortho::q0_symmetry_check(q0));
    CHECK(ortho::alternating_walk_identity(q0, g));
    if (spectral::family_membership(g).in_family) CHECK(q0.level() % 2 != 0);
    // Q0 is its own inverse
    CHECK(ortho::compose(q0, q0) == ortho::identity(n));
  }
  CHECK(controllable > 20);
}

TEST_CASE("transitions between relabelings are permutations") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = support::random_graph(6, rng);
    if (!spectral::family_membership(g).controllable) continue;
    graphs::Permutation perm{3, 1, 5, 0, 2, 4};
    const auto h = graphs::relabel(g, perm);
    const auto q = ortho::solve_transition(g, h);
    CHECK(q.is_permutation());
    CHECK(q.numerator() == graphs::permutation_matrix(perm));
  }
  CHECK_THROWS_AS(ortho::solve_transition(graphs::parse_code("2:+"), graphs::parse_code("3:+++")), Error);
}
