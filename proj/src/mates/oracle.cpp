#include "mates/oracle.hpp"

#include <optional>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "graphs/graph_io.hpp"
#include "mates/mates.hpp"

namespace skewspec::mates {

namespace {

std::size_t pow3(std::size_t m) {
  std::size_t r = 1;
  while (m-- > 0) r *= 3;
  return r;
}

// index written in base 3 over the pairs in code order: 0 none, 1 i->j, 2 j->i
graphs::OrientedGraph graph_at(std::size_t n, std::size_t index) {
  graphs::OrientedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t digit = index % 3;
      index /= 3;
      if (digit != 0) g.set_pair(i, j, digit == 1 ? 1 : -1);
    }
  }
  return g;
}

struct GraphRow {
  std::string canonical;
  SpectrumKey key;
};

}  // namespace

OracleClasses brute_force_oracle(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::Argument, "oracle needs n >= 2");
  if (n > kMaxOracleVertices) {
    throw Error(ErrorKind::Capability, "oracle is limited to n <= " + std::to_string(kMaxOracleVertices));
  }
  const std::size_t total = pow3(n * (n - 1) / 2);
  OracleClasses out;
  out.n = n;
  out.graph_count = total;
  std::vector<GraphRow> rows(total);
  parallel_for(total, worker_count(), [&](std::size_t i) {
    const auto g = graph_at(n, i);
    const auto s = graphs::skew_adjacency(g);
    rows[i] = {graphs::canonical_form(g),
               {spectral::char_poly(s), spectral::char_poly(spectral::complement_matrix(s))}};
  });
  for (auto& row : rows) {
    out.classes[row.key].insert(row.canonical);
    out.key_of.emplace(row.canonical, row.key);
  }
  return out;
}

std::set<std::string> oracle_mates(const OracleClasses& oracle, const std::string& canonical) {
  std::set<std::string> out = oracle.classes.at(oracle.key_of.at(canonical));
  out.erase(canonical);
  return out;
}

OracleComparison compare_with_oracle(std::size_t n, unsigned threads) {
  const OracleClasses oracle = brute_force_oracle(n);
  OracleComparison cmp;
  cmp.n = n;
  cmp.graph_count = oracle.graph_count;
  cmp.key_count = oracle.classes.size();
  cmp.class_count = oracle.key_of.size();

  struct Outcome {
    bool member = false;
    std::string verdict;
    std::string canonical;
    std::optional<OracleMismatch> mismatch;
  };
  std::vector<Outcome> outcomes(oracle.graph_count);
  parallel_for(oracle.graph_count, worker_count(threads), [&](std::size_t i) {
    const auto g = graph_at(n, i);
    if (!spectral::family_membership(g).in_family) return;
    Outcome& o = outcomes[i];
    o.member = true;
    o.canonical = graphs::canonical_form(g);
    const auto expected = oracle_mates(oracle, o.canonical);
    try {
      const MateReport r = enumerate_mates(g);
      o.verdict = to_string(r.verdict);
      std::set<std::string> found;
      for (const auto& m : r.mates) found.insert(m.canonical);
      if (found != expected) o.mismatch = OracleMismatch{graphs::to_code(g), expected, found, {}};
    } catch (const Error& e) {
      o.verdict = "ERROR";
      o.mismatch = OracleMismatch{graphs::to_code(g), expected, {}, e.what()};
    }
  });

  std::set<std::string> member_classes;
  for (auto& o : outcomes) {
    if (!o.member) continue;
    ++cmp.family_members;
    member_classes.insert(o.canonical);
    ++cmp.verdict_counts[o.verdict];
    if (o.mismatch) cmp.mismatches.push_back(std::move(*o.mismatch));
  }
  cmp.family_classes = member_classes.size();
  return cmp;
}

}  // namespace skewspec::mates
