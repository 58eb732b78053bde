#pragma once

#include <fstream>
#include <random>
#include <string>

#include "exact/int_matrix.hpp"
#include "graphs/oriented_graph.hpp"
#include "json.hpp"
#include "ortho/rational_orthogonal.hpp"

namespace support {

using skewspec::exact::IntMatrix;
using skewspec::exact::Integer;

inline nlohmann::json fixture(const std::string& name) {
  std::ifstream in(std::string(SKEWSPEC_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}

inline IntMatrix matrix(const nlohmann::json& rows) {
  IntMatrix m(rows.size(), rows.at(0).size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j].get<long>();
  return m;
}

inline skewspec::graphs::OrientedGraph graph(const nlohmann::json& rows) {
  return skewspec::graphs::from_skew(matrix(rows));
}

inline skewspec::ortho::RegularRationalOrthogonal orthogonal(const nlohmann::json& q) {
  return skewspec::ortho::level_normalize(matrix(q.at("numerator")), Integer(q.at("level").get<long>()));
}

inline skewspec::graphs::OrientedGraph random_graph(std::size_t n, std::mt19937_64& rng) {
  skewspec::graphs::OrientedGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.set_pair(i, j, static_cast<int>(rng() % 3) - 1);
  return g;
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, long bound, std::mt19937_64& rng) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<long> d(-bound, bound);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace support
