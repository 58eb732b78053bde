#pragma once

#include <vector>

#include "exact/int_matrix.hpp"

namespace skewspec::exact {

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

struct Adjugate {
  IntMatrix adjugate;
  Integer det;
};

/// Returns (adj m, det m) with m * adj = det * I. Throws Singular when det = 0.
Adjugate inverse_rational(const IntMatrix& m);

/// Rank of m over F_p. Throws Argument if p is not prime.
std::size_t rank_mod_p(const IntMatrix& m, const Integer& p);

/// Basis of { x : m x = 0 over F_p }, entries in [0, p), each vector scaled so
/// its first nonzero entry is 1. Basis order follows the free columns of the
/// reduced row echelon form.
std::vector<IntVector> nullspace_mod_p(const IntMatrix& m, const Integer& p);

}  // namespace skewspec::exact
