#include "graphs/oriented_graph.hpp"

#include <algorithm>
#include <numeric>

#include "common/error.hpp"
#include "graphs/graph_io.hpp"

namespace skewspec::graphs {

namespace {

using DegreeKey = std::pair<std::size_t, std::size_t>;

DegreeKey degree_key(const OrientedGraph& g, Vertex v) {
  return {g.out_degree(v), g.in_degree(v)};
}

char pair_char(int sign) { return sign > 0 ? '+' : (sign < 0 ? '-' : '0'); }

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const OrientedGraph& g) : g_(g), n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) keys_.push_back(degree_key(g, v));
    sorted_keys_ = keys_;
    std::sort(sorted_keys_.begin(), sorted_keys_.end());
    used_.assign(n_, false);
  }

  // best_order_[pos] is the vertex placed at position pos
  std::vector<Vertex> run() {
    recurse(0);
    return best_order_;
  }

 private:
  // Pairs are emitted column by column, (0,k),(1,k),...,(k-1,k), so placing
  // the vertex at position k fixes a contiguous block of the code.
  void recurse(std::size_t pos) {
    if (pos == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || keys_[v] != sorted_keys_[pos]) continue;
      const std::size_t mark = cur_.size();
      for (std::size_t a = 0; a < pos; ++a) cur_.push_back(pair_char(g_.sign(order_[a], v)));
      if (!have_best_ || cur_.compare(0, cur_.size(), best_, 0, cur_.size()) <= 0) {
        used_[v] = true;
        order_.push_back(v);
        recurse(pos + 1);
        order_.pop_back();
        used_[v] = false;
      }
      cur_.resize(mark);
    }
  }

  const OrientedGraph& g_;
  std::size_t n_;
  std::vector<DegreeKey> keys_;
  std::vector<DegreeKey> sorted_keys_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
  std::string cur_;
  std::string best_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

class IsoSearch {
 public:
  IsoSearch(const OrientedGraph& a, const OrientedGraph& b)
      : a_(a), b_(b), n_(a.order()), map_(n_), taken_(n_, false) {
    for (Vertex v = 0; v < n_; ++v) {
      key_a_.push_back(degree_key(a, v));
      key_b_.push_back(degree_key(b, v));
    }
  }

  std::optional<Permutation> run() {
    if (recurse(0)) return map_;
    return std::nullopt;
  }

 private:
  bool recurse(Vertex v) {
    if (v == n_) return true;
    for (Vertex w = 0; w < n_; ++w) {
      if (taken_[w] || key_a_[v] != key_b_[w]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = a_.sign(u, v) == b_.sign(map_[u], w);
      if (!ok) continue;
      map_[v] = w;
      taken_[w] = true;
      if (recurse(v + 1)) return true;
      taken_[w] = false;
    }
    return false;
  }

  const OrientedGraph& a_;
  const OrientedGraph& b_;
  std::size_t n_;
  Permutation map_;
  std::vector<bool> taken_;
  std::vector<DegreeKey> key_a_;
  std::vector<DegreeKey> key_b_;
};

}  // namespace

OrientedGraph::OrientedGraph(std::size_t n) : n_(n), s_(n * n, 0) {
  if (n == 0 || n > kMaxVertices) {
    throw Error(ErrorKind::Argument, "vertex count must be in [1, " +
                                         std::to_string(kMaxVertices) + "], got " +
                                         std::to_string(n));
  }
}

OrientedGraph::OrientedGraph(std::size_t n, std::span<const Arc> arcs) : OrientedGraph(n) {
  for (const auto& [from, to] : arcs) add_arc(from, to);
}

void OrientedGraph::add_arc(Vertex from, Vertex to) {
  if (from >= n_ || to >= n_) {
    throw Error(ErrorKind::Argument, "arc (" + std::to_string(from) + "," +
                                         std::to_string(to) + ") out of range");
  }
  if (from == to) {
    throw Error(ErrorKind::Argument, "loop at vertex " + std::to_string(from));
  }
  if (sign(from, to) < 0) {
    throw Error(ErrorKind::Argument, "arcs (" + std::to_string(from) + "," +
                                         std::to_string(to) + ") and its reverse both present");
  }
  set_pair(from, to, 1);
}

void OrientedGraph::set_pair(Vertex i, Vertex j, int sign) {
  s_[i * n_ + j] = static_cast<std::int8_t>(sign);
  s_[j * n_ + i] = static_cast<std::int8_t>(-sign);
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = 0; j < n_; ++j)
      if (sign(i, j) > 0) out.emplace_back(i, j);
  return out;
}

std::size_t OrientedGraph::out_degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex j = 0; j < n_; ++j) d += sign(v, j) > 0;
  return d;
}

std::size_t OrientedGraph::in_degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex j = 0; j < n_; ++j) d += sign(v, j) < 0;
  return d;
}

exact::IntMatrix skew_adjacency(const OrientedGraph& g) {
  const std::size_t n = g.order();
  exact::IntMatrix s(n, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) s(i, j) = g.sign(i, j);
  return s;
}

bool is_skew_adjacency(const exact::IntMatrix& s) {
  if (!s.is_square() || s.rows() == 0) return false;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (sgn(s(i, i)) != 0) return false;
    for (std::size_t j = i + 1; j < s.cols(); ++j) {
      if (exact::cmp_abs(s(i, j), exact::Integer(1)) > 0) return false;
      if (s(i, j) != -s(j, i)) return false;
    }
  }
  return true;
}

OrientedGraph from_skew(const exact::IntMatrix& s) {
  if (!is_skew_adjacency(s)) {
    throw Error(ErrorKind::NotSkewAdjacency, "matrix is not the skew-adjacency matrix of an oriented graph");
  }
  if (s.rows() > kMaxVertices) {
    throw Error(ErrorKind::Argument, "too many vertices");
  }
  OrientedGraph g(s.rows());
  for (Vertex i = 0; i < s.rows(); ++i)
    for (Vertex j = i + 1; j < s.cols(); ++j) g.set_pair(i, j, sgn(s(i, j)));
  return g;
}

OrientedGraph converse(const OrientedGraph& g) {
  OrientedGraph out(g.order());
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j) out.set_pair(i, j, -g.sign(i, j));
  return out;
}

OrientedGraph relabel(const OrientedGraph& g, const Permutation& perm) {
  if (perm.size() != g.order()) {
    throw Error(ErrorKind::Argument, "permutation size does not match graph order");
  }
  std::vector<bool> seen(perm.size(), false);
  for (Vertex v : perm) {
    if (v >= perm.size() || seen[v]) throw Error(ErrorKind::Argument, "not a permutation");
    seen[v] = true;
  }
  OrientedGraph out(g.order());
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j) out.set_pair(perm[i], perm[j], g.sign(i, j));
  return out;
}

exact::IntMatrix permutation_matrix(const Permutation& perm) {
  exact::IntMatrix p(perm.size(), perm.size());
  for (Vertex i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1;
  return p;
}

std::optional<Permutation> are_isomorphic(const OrientedGraph& g1, const OrientedGraph& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  return IsoSearch(g1, g2).run();
}

std::string canonical_form(const OrientedGraph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    throw Error(ErrorKind::Capability, "canonical form supports at most " +
                                           std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  const std::vector<Vertex> order = CanonicalSearch(g).run();
  Permutation perm(order.size());
  for (Vertex pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  return to_code(relabel(g, perm));
}

}  // namespace skewspec::graphs
