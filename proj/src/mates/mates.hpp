#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/factor.hpp"
#include "graphs/oriented_graph.hpp"
#include "mates/primitive.hpp"
#include "ortho/rational_orthogonal.hpp"
#include "spectral/spectral.hpp"

namespace skewspec::mates {

enum class Verdict { DGSS, WDGSS, NotWdgss, OutOfFamily };
const char* to_string(Verdict v) noexcept;

// How a candidate Q was obtained.
enum class Origin { Converse, Primitive, Complement };
const char* to_string(Origin o) noexcept;

// Any Q examined during enumeration, valid or not.
struct Discovery {
  RegularRationalOrthogonal q;
  Origin origin;
  Integer prime;                        // prime searched; level(Q0) for the converse
  std::optional<graphs::OrientedGraph> graph;  // set when Q^T S Q is an oriented graph
};

struct Mate {
  std::string name;
  Integer level;
  RegularRationalOrthogonal q;
  graphs::OrientedGraph graph;
  std::string canonical;
  Origin origin;
};

// Node 0 is the subject, node i+1 is mates[i].
struct RelationshipEdge {
  std::size_t from;
  std::size_t to;
  Integer level;
  RegularRationalOrthogonal q;
};

struct MateReport {
  graphs::OrientedGraph subject;
  std::string subject_canonical;
  spectral::FamilyVerdict family;
  Verdict verdict = Verdict::OutOfFamily;
  std::vector<Integer> snf;  // invariant factors of W
  std::optional<RegularRationalOrthogonal> q0;
  exact::PrimeFactorization ell0;
  std::vector<ObstructionResult> obstructions;  // every odd prime of det W
  std::vector<Discovery> discoveries;
  std::vector<Mate> mates;  // sorted by (level, canonical)
  std::vector<RelationshipEdge> edges;

  const Integer& dn() const { return snf.back(); }
  std::string node_name(std::size_t index) const;
};

/// Family verdict, SNF, Q0 and obstructions only. Throws NotControllable when
/// det W = 0; for graphs outside the family Q0 is still computed.
MateReport analyze(const graphs::OrientedGraph& g);

/// Full mate enumeration. Graphs outside the family get verdict
/// OUT_OF_FAMILY and no mates. Throws NotControllable when det W = 0 and
/// Capability when the level of Q0 has more than three prime factors.
MateReport enumerate_mates(const graphs::OrientedGraph& g);

struct Factorization {
  bool factorable = false;
  std::optional<RegularRationalOrthogonal> q1;  // Q0 = Q1 Q2, both levels > 1
  std::optional<RegularRationalOrthogonal> q2;
};

Factorization factorability(const MateReport& report);
Factorization factorability(const graphs::OrientedGraph& g);

struct AuditCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AuditRecord {
  std::vector<AuditCheck> checks;
  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Checks on every discovered Q and mate of an enumerated report: odd
/// levels dividing l0 and d_n, exact conjugation, equal levels giving
/// isomorphic mates, complement levels, the 2^t - 1 bound and the product
/// identity behind each converse pair.
AuditRecord theorem_audit(const MateReport& report);
AuditRecord theorem_audit(const graphs::OrientedGraph& g);

/// Structural checks that hold for every graph (parity vector, half-integer
/// walk determinant) plus, for controllable family members, SNF shape and
/// the Q0 identities.
AuditRecord structural_audit(const graphs::OrientedGraph& g);

}  // namespace skewspec::mates
