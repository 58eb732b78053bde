#pragma once

#include <vector>

#include "exact/int_matrix.hpp"
#include "graphs/oriented_graph.hpp"
#include "ortho/rational_orthogonal.hpp"

namespace skewspec::mates {

using exact::IntMatrix;
using exact::IntVector;
using exact::Integer;
using ortho::RegularRationalOrthogonal;

enum class LevelStatus { Obstructed, Possible };
const char* to_string(LevelStatus s) noexcept;

struct ObstructionResult {
  Integer prime;
  LevelStatus status = LevelStatus::Possible;
  IntVector generator;  // spans the nullspace of W^T over F_p, first nonzero entry 1
  Integer self_product;  // z^T z mod p
};

/// A nonzero z with W^T z = 0 (mod p) and z^T z != 0 (mod p) rules out every
/// Q with p | level(Q) turning S into an oriented graph. Throws Argument when
/// p is not an odd prime dividing det W, and Capability when the nullspace of
/// W^T mod p is not one-dimensional.
ObstructionResult level_obstruction_check(const graphs::OrientedGraph& g, const Integer& p);

/// Columns x of p*Q for primitive Q generated by v: x = c v (mod p) for some
/// residue c, x.e = p and x.x = p^2. Requires v.e = v.v = 0 (mod p). Sorted
/// lexicographically.
std::vector<IntVector> primitive_columns(const IntVector& v, const Integer& p);

/// All level-p regular rational orthogonal matrices generated by v, one per
/// class under column permutation: columns are mutually orthogonal members of
/// primitive_columns in increasing order, and at least one column is nonzero
/// mod p. Sorted by numerator.
std::vector<RegularRationalOrthogonal> primitive_matrices(const IntVector& v, const Integer& p);

struct PrimitiveCandidate {
  Integer prime;
  IntVector generator;
  std::vector<RegularRationalOrthogonal> matrices;
};

/// Primitive matrices of level p generated by the nullspace generator of
/// W^T mod p. Empty when the level is obstructed.
PrimitiveCandidate primitive_search(const graphs::OrientedGraph& g, const Integer& p);

}  // namespace skewspec::mates
