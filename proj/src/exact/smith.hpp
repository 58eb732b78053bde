#pragma once

#include "exact/int_matrix.hpp"

namespace skewspec::exact {

/// Smith normal form U * M * V = diag(d) with unimodular U, V,
/// d_i >= 0 and d_i | d_{i+1}.
struct SnfDecomposition {
  IntVector d;
  IntMatrix U;
  IntMatrix V;

  const Integer& last() const { return d.back(); }
};

SnfDecomposition snf(const IntMatrix& m);

}  // namespace skewspec::exact
