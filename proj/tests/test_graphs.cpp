#include <algorithm>
#include <random>
#include <set>

#include "common/error.hpp"
#include "doctest.h"
#include "graphs/graph_io.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace skewspec;
using graphs::OrientedGraph;

namespace {

std::size_t parse_error_position(const std::string& text) {
  try {
    graphs::parse_graph(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("pair code round trip") {
  const auto g = graphs::parse_code("4:+-0+0-");
  CHECK(g.order() == 4);
  CHECK(g.sign(0, 1) == 1);
  CHECK(g.sign(1, 0) == -1);
  CHECK(g.sign(0, 2) == -1);
  CHECK(g.sign(0, 3) == 0);
  CHECK(g.sign(2, 3) == -1);
  CHECK(graphs::to_code(g) == "4:+-0+0-");
  CHECK(graphs::parse_graph("  4:+-0+0-\n") == g);
  CHECK(graphs::parse_code("1:").order() == 1);
}

TEST_CASE("pair code errors carry positions") {
  CHECK(parse_error_position("4+-0+0-") == 7);
  CHECK(parse_error_position("x:+") == 0);
  CHECK(parse_error_position("17:") == 1);
  CHECK(parse_error_position("0:") == 0);
  CHECK(parse_error_position("3:+-") == 2);
  CHECK(parse_error_position("3:+x-") == 3);
  CHECK(parse_error_position("{\"n\": 3,") > 0);
}

TEST_CASE("JSON forms") {
  const auto g = graphs::parse_code("3:+0-");
  const auto doc = graphs::to_json(g);
  CHECK(doc.dump() == R"({"arcs":[[0,1],[2,1]],"n":3})");
  CHECK(graphs::from_json(doc) == g);
  CHECK(graphs::parse_graph(R"({"skew": [[0,1,0],[-1,0,-1],[0,1,0]]})") == g);
  CHECK_THROWS_AS(graphs::parse_graph(R"({"skew": [[0,2],[-2,0]]})"), Error);
  CHECK_THROWS_AS(graphs::parse_graph(R"({"skew": [[0,1],[1,0]]})"), Error);
  CHECK_THROWS_AS(graphs::parse_graph(R"({"skew": [[1,0],[0,0]]})"), Error);
  CHECK_THROWS_AS(graphs::parse_graph(R"({"n": 2, "arcs": [[0,1],[1,0]]})"), ParseError);
  CHECK_THROWS_AS(graphs::parse_graph(R"({"n": 2, "arcs": [[0,0]]})"), ParseError);
  CHECK_THROWS_AS(graphs::parse_graph(R"({"n": 2})"), ParseError);
  try {
    graphs::parse_graph(R"({"skew": [[0,1],[1,0]]})");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSkewAdjacency);
  }
}

TEST_CASE("skew adjacency and converse") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = support::random_graph(6, rng);
    const auto s = graphs::skew_adjacency(g);
    CHECK(graphs::is_skew_adjacency(s));
    CHECK(s.transpose() == -s);
    CHECK(graphs::from_skew(s) == g);
    CHECK(graphs::skew_adjacency(graphs::converse(g)) == -s);
    CHECK(graphs::converse(graphs::converse(g)) == g);
  }
  CHECK_THROWS_AS(OrientedGraph(0), Error);
  CHECK_THROWS_AS(OrientedGraph(17), Error);
  OrientedGraph g(3);
  g.add_arc(0, 1);
  CHECK_THROWS_AS(g.add_arc(1, 0), Error);
  CHECK_THROWS_AS(g.add_arc(2, 2), Error);
}

TEST_CASE("isomorphism agrees with brute force and yields a conjugating permutation") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const auto a = support::random_graph(n, rng);
    graphs::Permutation perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = trial % 3 == 0 ? support::random_graph(n, rng) : graphs::relabel(a, perm);
    const auto found = graphs::are_isomorphic(a, b);
    CHECK(found.has_value() == oracle::brute_isomorphic(a, b));
    if (found) {
      CHECK(graphs::relabel(a, *found) == b);
      const auto p = graphs::permutation_matrix(*found);
      CHECK(p.transpose() * graphs::skew_adjacency(a) * p == graphs::skew_adjacency(b));
    }
    CHECK((graphs::canonical_form(a) == graphs::canonical_form(b)) ==
          (oracle::brute_canonical(a) == oracle::brute_canonical(b)));
  }
}

TEST_CASE("canonical form partitions all 4-vertex graphs like brute force") {
  std::vector<OrientedGraph> all;
  for (std::size_t idx = 0; idx < 729; ++idx) {
    OrientedGraph g(4);
    std::size_t k = idx;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j, k /= 3)
        if (k % 3) g.set_pair(i, j, k % 3 == 1 ? 1 : -1);
    all.push_back(g);
  }
  const auto classes = oracle::brute_partition(all);
  std::set<std::string> canon;
  for (const auto& g : all) canon.insert(graphs::canonical_form(g));
  CHECK(canon.size() == classes.size());
  for (const auto& cls : classes)
    for (std::size_t i : cls) CHECK(graphs::canonical_form(all[i]) == graphs::canonical_form(all[cls[0]]));
}

TEST_CASE("small cases") {
  // n = 2: empty graph and the single arc, which is its own converse up to relabeling
  const auto empty = graphs::parse_code("2:0");
  const auto arc = graphs::parse_code("2:+");
  CHECK(graphs::canonical_form(arc) == graphs::canonical_form(graphs::parse_code("2:-")));
  CHECK(graphs::canonical_form(arc) != graphs::canonical_form(empty));
  CHECK_THROWS_AS(graphs::canonical_form(OrientedGraph(11)), Error);
  CHECK_THROWS_AS(graphs::relabel(arc, {0, 0}), Error);
}
