#pragma once

#include <vector>

#include "exact/int_matrix.hpp"

namespace skewspec::mates {

using exact::IntMatrix;
using exact::IntVector;
using exact::Integer;

/// Row-style basis of the lattice spanned by the rows of `generators`
/// (Hermite-style row reduction, zero rows dropped).
IntMatrix lattice_basis(const IntMatrix& generators);

/// LLL reduction (delta = 99/100) of a basis given as rows, in exact
/// rational arithmetic.
IntMatrix lll_reduce(const IntMatrix& basis);

/// Every nonzero lattice vector x with x.x <= bound, for a basis given as
/// rows. Schnorr-Euchner enumeration over the LLL-reduced basis; candidates
/// are re-checked in exact arithmetic.
std::vector<IntVector> short_vectors(const IntMatrix& basis, const Integer& bound);

}  // namespace skewspec::mates
