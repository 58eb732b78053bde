#include "graphs/graph_io.hpp"

#include <cctype>

#include "common/error.hpp"

namespace skewspec::graphs {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long json_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(0, std::string(what) + " must be an integer");
  return v.get<long>();
}

}  // namespace

OrientedGraph parse_code(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(text.size(), "missing ':' after vertex count");
  if (colon == 0) throw ParseError(0, "missing vertex count");
  std::size_t n = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(i, "vertex count must be decimal");
    }
    n = n * 10 + static_cast<std::size_t>(text[i] - '0');
    if (n > kMaxVertices) throw ParseError(i, "vertex count exceeds " + std::to_string(kMaxVertices));
  }
  if (n == 0) throw ParseError(0, "vertex count must be positive");
  const std::string_view code = text.substr(colon + 1);
  if (code.size() != pair_count(n)) {
    throw ParseError(colon + 1, "expected " + std::to_string(pair_count(n)) +
                                    " pair characters, got " + std::to_string(code.size()));
  }
  OrientedGraph g(n);
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++k) {
      switch (code[k]) {
        case '+': g.set_pair(i, j, 1); break;
        case '-': g.set_pair(i, j, -1); break;
        case '0': break;
        default:
          throw ParseError(colon + 1 + k, std::string("illegal pair character '") + code[k] + "'");
      }
    }
  }
  return g;
}

std::string to_code(const OrientedGraph& g) {
  std::string out = std::to_string(g.order()) + ":";
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = i + 1; j < g.order(); ++j) {
      const int s = g.sign(i, j);
      out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
    }
  }
  return out;
}

nlohmann::json to_json(const OrientedGraph& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [i, j] : g.arcs()) arcs.push_back({i, j});
  return {{"n", g.order()}, {"arcs", std::move(arcs)}};
}

OrientedGraph from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError(0, "graph JSON must be an object");
  if (doc.contains("skew")) {
    const auto& rows = doc.at("skew");
    if (!rows.is_array() || rows.empty()) throw ParseError(0, "\"skew\" must be a non-empty array");
    exact::IntMatrix s(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != rows.size()) {
        throw ParseError(0, "\"skew\" must be a square array of arrays");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) s(i, j) = json_int(rows[i][j], "skew entry");
    }
    return from_skew(s);
  }
  if (!doc.contains("n") || !doc.contains("arcs")) {
    throw ParseError(0, "graph JSON needs \"n\" and \"arcs\" (or \"skew\")");
  }
  const long n = json_int(doc.at("n"), "\"n\"");
  if (n < 1 || static_cast<std::size_t>(n) > kMaxVertices) throw ParseError(0, "\"n\" out of range");
  const auto& arcs = doc.at("arcs");
  if (!arcs.is_array()) throw ParseError(0, "\"arcs\" must be an array");
  OrientedGraph g(static_cast<std::size_t>(n));
  for (const auto& a : arcs) {
    if (!a.is_array() || a.size() != 2) throw ParseError(0, "each arc must be a pair");
    const long from = json_int(a[0], "arc endpoint");
    const long to = json_int(a[1], "arc endpoint");
    if (from < 0 || to < 0 || from >= n || to >= n || from == to) {
      throw ParseError(0, "invalid arc [" + std::to_string(from) + "," + std::to_string(to) + "]");
    }
    if (g.sign(static_cast<Vertex>(from), static_cast<Vertex>(to)) < 0) {
      throw ParseError(0, "arc and its reverse both present");
    }
    g.add_arc(static_cast<Vertex>(from), static_cast<Vertex>(to));
  }
  return g;
}

OrientedGraph parse_graph(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.byte, "invalid JSON");
    }
    return from_json(doc);
  }
  return parse_code(t);
}

}  // namespace skewspec::graphs
