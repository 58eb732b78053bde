#include "report/report.hpp"

#include <limits>
#include <random>
#include <sstream>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "graphs/graph_io.hpp"

namespace skewspec::report {

namespace {

using nlohmann::json;

json int_list(const std::vector<exact::Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json family_json(const spectral::FamilyVerdict& f) {
  json out;
  out["det_w"] = f.det_w.get_str();
  out["reduced"] = f.reduced_integral ? json(f.reduced.get_str()) : json(nullptr);
  out["controllable"] = f.controllable;
  out["in_family"] = f.in_family;
  out["obstruction"] = spectral::to_string(f.obstruction);
  return out;
}

json input_json(const graphs::OrientedGraph& g) {
  json out = graphs::to_json(g);
  out["code"] = graphs::to_code(g);
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string survey_row(const std::string& code) {
  const auto g = graphs::parse_code(code);
  const auto family = spectral::family_membership(g);
  std::ostringstream row;
  row << code << ',' << (family.in_family ? "true" : "false") << ',';
  if (!family.controllable) {
    row << ",,,NOT_CONTROLLABLE";
    return row.str();
  }
  if (!family.in_family) {
    row << ",,,OUT_OF_FAMILY";
    return row.str();
  }
  try {
    const auto r = mates::enumerate_mates(g);
    row << r.ell0.value.get_str() << ',' << r.ell0.distinct() << ',' << r.mates.size() << ','
        << mates::to_string(r.verdict);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Capability) throw;
    const auto q0 = ortho::solve_q0(g);
    row << q0.level().get_str() << ',' << exact::factorize(q0.level()).distinct() << ",,CAPABILITY_LIMIT";
  }
  return row.str();
}

}  // namespace

json to_json(const exact::IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const ortho::RegularRationalOrthogonal& q) {
  return {{"level", q.level().get_str()}, {"numerator", to_json(q.numerator())}};
}

json to_json(const exact::PrimeFactorization& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"prime", p.get_str()}, {"exponent", e}});
  return {{"value", f.value.get_str()}, {"factors", std::move(factors)}};
}

json analysis_document(const mates::MateReport& r, bool full, std::optional<double> seconds) {
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = full ? "mates" : "analyze";
  doc["input"] = input_json(r.subject);
  doc["family"] = family_json(r.family);
  doc["snf"] = int_list(r.snf);
  doc["q0"] = r.q0 ? to_json(*r.q0) : json(nullptr);
  doc["ell0"] = to_json(r.ell0);
  doc["self_converse"] = r.q0 && r.q0->is_permutation();

  json obstructions = json::array();
  for (const auto& o : r.obstructions) {
    obstructions.push_back({{"prime", o.prime.get_str()},
                            {"status", mates::to_string(o.status)},
                            {"generator", int_list(o.generator)},
                            {"self_product", o.self_product.get_str()}});
  }
  doc["obstructions"] = std::move(obstructions);

  if (full) {
    doc["verdict"] = mates::to_string(r.verdict);
    const std::size_t t = r.ell0.distinct();
    doc["t"] = t;
    doc["mate_bound"] = (std::size_t{1} << t) - 1;
    json mates = json::array();
    for (const auto& m : r.mates) {
      mates.push_back({{"name", m.name},
                       {"level", m.level.get_str()},
                       {"origin", mates::to_string(m.origin)},
                       {"code", graphs::to_code(m.graph)},
                       {"canonical", m.canonical},
                       {"q", to_json(m.q)},
                       {"skew", to_json(graphs::skew_adjacency(m.graph))}});
    }
    doc["mates"] = std::move(mates);
    json discoveries = json::array();
    for (const auto& d : r.discoveries) {
      discoveries.push_back({{"origin", mates::to_string(d.origin)},
                             {"prime", d.prime.get_str()},
                             {"level", d.q.level().get_str()},
                             {"oriented_graph", d.graph.has_value()}});
    }
    doc["discoveries"] = std::move(discoveries);
    json edges = json::array();
    for (const auto& e : r.edges) {
      edges.push_back({{"from", e.from},
                       {"to", e.to},
                       {"from_name", r.node_name(e.from)},
                       {"to_name", r.node_name(e.to)},
                       {"level", e.level.get_str()}});
    }
    doc["relationship_edges"] = std::move(edges);
    if (r.verdict != mates::Verdict::OutOfFamily) {
      const auto f = mates::factorability(r);
      json fac = {{"factorable", f.factorable}};
      if (f.factorable) {
        fac["q1"] = to_json(*f.q1);
        fac["q2"] = to_json(*f.q2);
      }
      doc["factorability"] = std::move(fac);
    }
  }
  if (seconds) doc["timing"] = {{"seconds", *seconds}};
  return doc;
}

std::string relationship_dot(const mates::MateReport& r) {
  std::ostringstream out;
  out << "digraph mates {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  n0 [label=" << dot_quote("Sigma") << ", tooltip=" << dot_quote(graphs::to_code(r.subject))
      << "];\n";
  for (std::size_t i = 0; i < r.mates.size(); ++i) {
    out << "  n" << i + 1 << " [label=" << dot_quote(r.mates[i].name)
        << ", tooltip=" << dot_quote(graphs::to_code(r.mates[i].graph)) << "];\n";
  }
  for (const auto& e : r.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=" << dot_quote("Q(" + e.level.get_str() + ")")
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

VerifyOutcome verify(const graphs::OrientedGraph& g) {
  VerifyOutcome v;
  std::ostringstream out;
  out << "graph " << graphs::to_code(g) << "\n";
  const auto family = spectral::family_membership(g);
  out << "family " << (family.in_family ? "IN_FAMILY" : "OUT_OF_FAMILY") << " ("
      << spectral::to_string(family.obstruction) << ")\n";

  auto emit = [&](const mates::AuditRecord& a) {
    for (const auto& c : a.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << "\n";
    }
    v.passed = v.passed && a.passed();
  };
  emit(mates::structural_audit(g));
  if (family.in_family) {
    try {
      const auto r = mates::enumerate_mates(g);
      out << "verdict " << mates::to_string(r.verdict) << "\n";
      emit(mates::theorem_audit(r));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Capability) throw;
      out << "SKIP mate audit [" << e.what() << "]\n";
    }
  }
  out << "result " << (v.passed ? "PASS" : "FAIL") << "\n";
  v.text = out.str();
  return v;
}

std::vector<std::string> survey_samples(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n < kSurveyMinOrder || n > kSurveyMaxOrder) {
    throw Error(ErrorKind::Argument, "survey order must be in [2, 10]");
  }
  constexpr std::uint64_t kLimit = std::numeric_limits<std::uint64_t>::max() / 3 * 3;
  std::mt19937_64 engine(seed);
  auto digit = [&] {
    for (;;) {
      const std::uint64_t x = engine();
      if (x < kLimit) return static_cast<int>(x % 3);
    }
  };
  static constexpr char kSymbols[] = {'0', '+', '-'};
  std::vector<std::string> out;
  out.reserve(count);
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::size_t k = 0; k < count; ++k) {
    std::string code = std::to_string(n) + ":";
    for (std::size_t p = 0; p < pairs; ++p) code += kSymbols[digit()];
    out.push_back(std::move(code));
  }
  return out;
}

std::string survey_csv(std::size_t n, std::size_t count, std::uint64_t seed, unsigned threads) {
  const auto samples = survey_samples(n, count, seed);
  std::vector<std::string> rows(samples.size());
  parallel_for(samples.size(), worker_count(threads), [&](std::size_t i) { rows[i] = survey_row(samples[i]); });
  std::string out = "code,in_family,ell0,t,mate_count,verdict\n";
  for (const auto& row : rows) out += row + "\n";
  return out;
}

json oracle_document(const mates::OracleComparison& cmp) {
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "oracle";
  doc["n"] = cmp.n;
  doc["graphs"] = cmp.graph_count;
  doc["spectrum_keys"] = cmp.key_count;
  doc["isomorphism_classes"] = cmp.class_count;
  doc["family_members"] = cmp.family_members;
  doc["family_classes"] = cmp.family_classes;
  doc["verdict_counts"] = cmp.verdict_counts;
  doc["mismatch_count"] = cmp.mismatches.size();
  json mismatches = json::array();
  for (const auto& m : cmp.mismatches) {
    json entry = {{"code", m.code}, {"expected", m.expected}, {"found", m.found}};
    if (!m.error.empty()) entry["error"] = m.error;
    mismatches.push_back(std::move(entry));
  }
  doc["mismatches"] = std::move(mismatches);
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace skewspec::report
