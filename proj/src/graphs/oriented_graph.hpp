#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exact/int_matrix.hpp"

namespace skewspec::graphs {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;
/// perm[i] is the image of vertex i.
using Permutation = std::vector<Vertex>;

inline constexpr std::size_t kMaxVertices = 16;
inline constexpr std::size_t kMaxCanonicalVertices = 10;

/// Loopless digraph with at most one arc per vertex pair, 0-indexed.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(std::size_t n);
  OrientedGraph(std::size_t n, std::span<const Arc> arcs);

  std::size_t order() const noexcept { return n_; }

  // +1 for arc i->j, -1 for arc j->i, 0 otherwise.
  int sign(Vertex i, Vertex j) const noexcept { return s_[i * n_ + j]; }

  // Throws Argument on loops, out-of-range vertices or an opposite arc.
  void add_arc(Vertex from, Vertex to);
  void set_pair(Vertex i, Vertex j, int sign);

  std::vector<Arc> arcs() const;  // lexicographically sorted
  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> s_;
};

exact::IntMatrix skew_adjacency(const OrientedGraph& g);

/// Inverse of skew_adjacency. Throws NotSkewAdjacency unless the matrix is
/// square, skew-symmetric, zero on the diagonal and {-1,0,1}-valued.
OrientedGraph from_skew(const exact::IntMatrix& s);
bool is_skew_adjacency(const exact::IntMatrix& s);

OrientedGraph converse(const OrientedGraph& g);

/// Graph with vertex i renamed perm[i].
OrientedGraph relabel(const OrientedGraph& g, const Permutation& perm);

/// P with P[i][perm[i]] = 1, so that P^T S(g) P = S(relabel(g, perm)).
exact::IntMatrix permutation_matrix(const Permutation& perm);

/// Witness perm with relabel(g1, perm) == g2, if one exists.
std::optional<Permutation> are_isomorphic(const OrientedGraph& g1, const OrientedGraph& g2);

/// Graph code, equal for two graphs iff they are isomorphic. Among labelings
/// listing vertices in nondecreasing (out-degree, in-degree) order, picks the
/// one whose pair string read column-wise, (0,1),(0,2),(1,2),(0,3),..., is
/// smallest ('+' < '-' < '0'), and returns to_code of that relabeling.
/// Throws Capability for n > 10.
std::string canonical_form(const OrientedGraph& g);

}  // namespace skewspec::graphs
