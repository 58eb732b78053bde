#include "mates/mates.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "common/error.hpp"
#include "exact/linalg.hpp"
#include "exact/smith.hpp"

namespace skewspec::mates {

namespace {

using graphs::OrientedGraph;

bool divides(const Integer& d, const Integer& n) {
  return sgn(d) != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::optional<OrientedGraph> conjugate_graph(const RegularRationalOrthogonal& q, const IntMatrix& s) {
  auto t = ortho::conjugate(q, s);
  if (!t || !graphs::is_skew_adjacency(*t)) return std::nullopt;
  return graphs::from_skew(*t);
}

struct Candidate {
  Integer level;
  std::string canonical;
  RegularRationalOrthogonal q;
  OrientedGraph graph;
  Origin origin;
};

// Mates grouped into converse pairs (A, A^T); pair 0 is the subject and its
// converse.
struct PairIndex {
  std::size_t low;
  std::size_t high;
};

std::vector<PairIndex> converse_pairs(const MateReport& r) {
  std::vector<PairIndex> pairs;
  std::map<std::string, std::size_t> node_of;
  node_of[r.subject_canonical] = 0;
  for (std::size_t i = 0; i < r.mates.size(); ++i) node_of[r.mates[i].canonical] = i + 1;
  std::vector<bool> used(r.mates.size() + 1, false);
  for (std::size_t node = 0; node <= r.mates.size(); ++node) {
    if (used[node]) continue;
    const OrientedGraph& g = node == 0 ? r.subject : r.mates[node - 1].graph;
    auto it = node_of.find(graphs::canonical_form(graphs::converse(g)));
    if (it == node_of.end() || it->second == node) continue;
    used[node] = used[it->second] = true;
    pairs.push_back({node, it->second});
  }
  // name a mate pair after its prime-level member
  auto level = [&](std::size_t node) { return r.mates[node - 1].level; };
  for (auto& pair : pairs) {
    if (pair.low == 0) continue;
    if (!exact::is_prime(level(pair.low)) && exact::is_prime(level(pair.high)))
      std::swap(pair.low, pair.high);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const PairIndex& a, const PairIndex& b) {
    if ((a.low == 0) != (b.low == 0)) return a.low == 0;
    if (a.low == 0) return false;
    return level(a.low) < level(b.low);
  });
  return pairs;
}

void name_nodes(MateReport& r, const std::vector<PairIndex>& pairs) {
  std::size_t delta = 0;
  for (const auto& pair : pairs) {
    if (pair.low == 0) {
      r.mates[pair.high - 1].name = "Sigma^T";
      continue;
    }
    ++delta;
    r.mates[pair.low - 1].name = "Delta" + std::to_string(delta);
    r.mates[pair.high - 1].name = "Delta" + std::to_string(delta) + "^T";
  }
  for (std::size_t i = 0; i < r.mates.size(); ++i)
    if (r.mates[i].name.empty()) r.mates[i].name = "Gamma" + std::to_string(i + 1);
}

void build_edges(MateReport& r, const std::vector<PairIndex>& pairs) {
  auto graph_of = [&](std::size_t node) -> const OrientedGraph& {
    return node == 0 ? r.subject : r.mates[node - 1].graph;
  };
  auto add = [&](std::size_t from, std::size_t to) {
    auto q = ortho::solve_transition(graph_of(from), graph_of(to));
    r.edges.push_back({from, to, q.level(), std::move(q)});
  };
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    if (a == 0) {
      add(pairs[a].low, pairs[a].high);
    } else {
      add(pairs[a].high, pairs[a].low);
    }
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      add(pairs[a].low, pairs[b].low);
      add(pairs[a].high, pairs[b].high);
      add(pairs[b].low, pairs[a].high);
      add(pairs[b].high, pairs[a].low);
    }
  }
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::DGSS: return "DGSS";
    case Verdict::WDGSS: return "WDGSS";
    case Verdict::NotWdgss: return "NOT_WDGSS";
    case Verdict::OutOfFamily: return "OUT_OF_FAMILY";
  }
  return "?";
}

const char* to_string(Origin o) noexcept {
  switch (o) {
    case Origin::Converse: return "converse";
    case Origin::Primitive: return "primitive";
    case Origin::Complement: return "complement";
  }
  return "?";
}

std::string MateReport::node_name(std::size_t index) const {
  return index == 0 ? std::string("Sigma") : mates.at(index - 1).name;
}

MateReport analyze(const OrientedGraph& g) {
  MateReport r;
  r.subject = g;
  r.family = spectral::family_membership(g);
  if (!r.family.controllable) throw Error(ErrorKind::NotControllable, "det W = 0");
  r.snf = exact::snf(spectral::walk_matrix(g)).d;
  r.q0 = ortho::solve_q0(g);
  r.ell0 = exact::factorize(r.q0->level());
  if (r.family.in_family) {
    for (const auto& [p, e] : exact::factorize(abs(r.family.reduced)).factors) {
      r.obstructions.push_back(level_obstruction_check(g, p));
    }
  }
  return r;
}

MateReport enumerate_mates(const OrientedGraph& g) {
  MateReport r = analyze(g);
  if (!r.family.in_family) {
    r.verdict = Verdict::OutOfFamily;
    return r;
  }
  if (r.ell0.distinct() > 3) {
    throw Error(ErrorKind::Capability, "level of Q0 has " + std::to_string(r.ell0.distinct()) +
                                           " prime factors; at most 3 are supported");
  }
  r.subject_canonical = graphs::canonical_form(g);
  const IntMatrix s = graphs::skew_adjacency(g);
  const RegularRationalOrthogonal& q0 = *r.q0;

  std::vector<Candidate> found;
  auto consider = [&](Discovery d) {
    if (d.graph) {
      std::string canon = graphs::canonical_form(*d.graph);
      if (canon != r.subject_canonical)
        found.push_back({d.q.level(), std::move(canon), d.q, *d.graph, d.origin});
    }
    r.discoveries.push_back(std::move(d));
  };

  if (!q0.is_permutation()) consider({q0, Origin::Converse, q0.level(), conjugate_graph(q0, s)});
  for (const auto& check : r.obstructions) {
    if (check.status != LevelStatus::Possible || !divides(check.prime, q0.level())) continue;
    for (const auto& q : primitive_matrices(check.generator, check.prime)) {
      auto mate = conjugate_graph(q, s);
      const bool valid = mate.has_value();
      consider({q, Origin::Primitive, check.prime, std::move(mate)});
      if (!valid) continue;
      RegularRationalOrthogonal comp = ortho::compose(q0, q);
      consider({comp, Origin::Complement, check.prime, conjugate_graph(comp, s)});
    }
  }

  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.canonical != b.canonical) return a.canonical < b.canonical;
    return a.q < b.q;
  });
  std::set<std::string> seen;
  for (auto& c : found) {
    if (!seen.insert(c.canonical).second) continue;
    r.mates.push_back({{}, c.level, std::move(c.q), std::move(c.graph), std::move(c.canonical), c.origin});
  }

  const auto pairs = converse_pairs(r);
  name_nodes(r, pairs);
  build_edges(r, pairs);

  if (r.mates.empty()) {
    r.verdict = Verdict::DGSS;
  } else if (r.mates.size() == 1 && r.mates.front().name == "Sigma^T") {
    r.verdict = Verdict::WDGSS;
  } else {
    r.verdict = Verdict::NotWdgss;
  }
  return r;
}

Factorization factorability(const MateReport& report) {
  Factorization f;
  if (!report.q0) return f;
  for (const auto& d : report.discoveries) {
    if (d.origin != Origin::Primitive || !d.graph || d.q.level() == report.q0->level()) continue;
    RegularRationalOrthogonal q2 = ortho::compose(d.q.transpose(), *report.q0);
    if (q2.is_permutation() || !(ortho::compose(d.q, q2) == *report.q0)) continue;
    f.factorable = true;
    f.q1 = d.q;
    f.q2 = std::move(q2);
    break;
  }
  return f;
}

Factorization factorability(const OrientedGraph& g) { return factorability(enumerate_mates(g)); }

bool AuditRecord::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

void AuditRecord::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

AuditRecord theorem_audit(const MateReport& r) {
  AuditRecord a;
  if (!r.q0 || r.verdict == Verdict::OutOfFamily) return a;
  const Integer& l0 = r.q0->level();
  const IntMatrix s = graphs::skew_adjacency(r.subject);

  for (const auto& check : r.obstructions) {
    if (divides(check.prime, l0)) {
      a.add("prime " + check.prime.get_str() + " of l0 not obstructed",
            check.status == LevelStatus::Possible);
    }
  }

  std::map<Integer, std::set<std::string>> classes_by_level;
  for (std::size_t i = 0; i < r.discoveries.size(); ++i) {
    const Discovery& d = r.discoveries[i];
    const Integer& l = d.q.level();
    const std::string tag = "Q#" + std::to_string(i) + " (" + to_string(d.origin) + ", level " +
                            l.get_str() + ")";
    a.add(tag + " level odd", mpz_odd_p(l.get_mpz_t()) != 0);
    a.add(tag + " level divides l0", divides(l, l0));
    a.add(tag + " level divides d_n", divides(l, r.dn()));
    if (d.origin == Origin::Primitive) {
      a.add(tag + " rank 1 mod p", exact::rank_mod_p(d.q.numerator(), d.prime) == 1);
    }
    if (d.origin == Origin::Complement) {
      a.add(tag + " level equals l0/p", l * d.prime == l0);
    }
    if (d.graph) classes_by_level[l].insert(graphs::canonical_form(*d.graph));
  }
  for (const auto& [l, classes] : classes_by_level) {
    a.add("valid Q's of level " + l.get_str() + " give isomorphic graphs", classes.size() == 1,
          std::to_string(classes.size()) + " class(es)");
  }

  const std::size_t t = r.ell0.distinct();
  const std::size_t bound = (std::size_t{1} << t) - 1;
  a.add("mate count within 2^t - 1", r.mates.size() <= bound,
        std::to_string(r.mates.size()) + " <= " + std::to_string(bound));

  std::set<std::string> names;
  for (const auto& m : r.mates) {
    a.add(m.name + " conjugation exact",
          ortho::verify_conjugation(m.q, s, graphs::skew_adjacency(m.graph)));
    a.add(m.name + " not isomorphic to subject", m.canonical != r.subject_canonical);
    names.insert(m.canonical);
  }
  a.add("mates pairwise non-isomorphic", names.size() == r.mates.size());

  // Q1: Sigma -> A and Q2: A -> Sigma^T give Q1 Q2 = Q0 and Q2 Q1: A^T -> A.
  for (const auto& m : r.mates) {
    if (m.name.rfind("Delta", 0) != 0 || m.name.back() == 'T') continue;
    const auto sigma_t = graphs::converse(r.subject);
    const auto q1 = ortho::solve_transition(r.subject, m.graph);
    const auto q2 = ortho::solve_transition(m.graph, sigma_t);
    a.add(m.name + ": Q1 Q2 = Q0", ortho::compose(q1, q2) == *r.q0);
    const auto hat = ortho::compose(q2, q1);
    const bool maps = ortho::verify_conjugation(hat, graphs::skew_adjacency(graphs::converse(m.graph)),
                                                graphs::skew_adjacency(m.graph));
    a.add(m.name + ": Q2 Q1 maps the converse to it at level l(Q1) l(Q2)",
          maps && hat.level() == q1.level() * q2.level(), "level " + hat.level().get_str());
  }
  return a;
}

AuditRecord theorem_audit(const OrientedGraph& g) { return theorem_audit(enumerate_mates(g)); }

AuditRecord structural_audit(const OrientedGraph& g) {
  AuditRecord a;
  const std::size_t n = g.order();
  const IntMatrix w = spectral::walk_matrix(g);
  const Integer det_w = exact::det(w);

  const exact::IntVector me = spectral::parity_matrix(g) * std::span<const Integer>(exact::ones(n));
  a.add("parity vector M e even",
        std::all_of(me.begin(), me.end(), [](const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }));

  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, n / 2);
  const Integer det_bar = spectral::modified_walk_matrix(g).det();
  a.add("det of half-integer walk matrix times 2^floor(n/2) equals det W", det_bar * power == det_w,
        det_bar.get_str() + " * " + power.get_str() + " vs " + det_w.get_str());

  const auto family = spectral::family_membership(g);
  if (!family.in_family) return a;

  const auto d = exact::snf(w).d;
  const std::size_t ones = (n + 1) / 2;
  bool shape = true;
  for (std::size_t i = 0; i + 1 < n; ++i) shape = shape && d[i] == (i < ones ? 1 : 2);
  const Integer b = d.back() / 2;
  shape = shape && d.back() == 2 * b && mpz_odd_p(b.get_mpz_t()) &&
          exact::factorize(abs(b)).square_free();
  a.add("SNF of W is (1,..,1,2,..,2,2b) with b odd square-free", shape);

  const auto q0 = ortho::solve_q0(g);
  const Integer& l0 = q0.level();
  a.add("l0 odd", mpz_odd_p(l0.get_mpz_t()) != 0, "l0 = " + l0.get_str());
  a.add("l0 divides d_n", divides(l0, d.back()));
  a.add("Q0 symmetric", ortho::q0_symmetry_check(q0));
  a.add("Q0 S^k e = (-1)^k S^k e for k < n", ortho::alternating_walk_identity(q0, g));
  a.add("Q0^T S Q0 = -S", ortho::verify_conjugation(q0, graphs::skew_adjacency(g),
                                                    -graphs::skew_adjacency(g)));
  return a;
}

}  // namespace skewspec::mates
