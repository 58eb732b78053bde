#pragma once

#include <vector>

#include "exact/int_matrix.hpp"
#include "graphs/oriented_graph.hpp"

namespace skewspec::spectral {

using exact::IntMatrix;
using exact::Integer;

/// W = [e, Se, ..., S^{n-1} e].
IntMatrix walk_matrix(const IntMatrix& s);
IntMatrix walk_matrix(const graphs::OrientedGraph& g);

/// Coefficients of det(xI - A) in descending powers; coeffs[0] == 1.
struct CharPoly {
  std::vector<Integer> coeffs;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
  friend auto operator<(const CharPoly& a, const CharPoly& b) { return a.coeffs < b.coeffs; }
};

/// Faddeev-LeVerrier recurrence; every division is exact over Z.
CharPoly char_poly(const IntMatrix& a);

enum class Obstruction { None, NotControllable, EvenReduced, NotSquareFree };
const char* to_string(Obstruction o) noexcept;

struct FamilyVerdict {
  Integer det_w;
  Integer reduced;  // det W / 2^{floor(n/2)} when that division is exact
  bool reduced_integral = false;
  bool controllable = false;
  bool in_family = false;
  Obstruction obstruction = Obstruction::None;
};

/// Membership in the family of graphs whose reduced walk determinant
/// det W / 2^{floor(n/2)} is an odd square-free integer.
FamilyVerdict family_membership(const graphs::OrientedGraph& g);

/// Equality of the characteristic polynomials of S and of J - I - S.
/// Throws Argument on differing orders.
bool generalized_cospectral(const graphs::OrientedGraph& g1, const graphs::OrientedGraph& g2);

/// J - I - S.
IntMatrix complement_matrix(const IntMatrix& s);

/// Parity matrix M built from the even-index characteristic coefficients:
/// n even: S^{n/2} + c2 S^{(n-2)/2} + ... + c_n I,
/// n odd:  S^{(n+1)/2} + c2 S^{(n-1)/2} + ... + c_{n-1} S.
IntMatrix parity_matrix(const graphs::OrientedGraph& g);

/// Modified walk matrix stored as twice its value, so entries stay integral.
struct HalfIntegerMatrix {
  IntMatrix twice;

  Integer det() const;  // det(twice) / 2^n, exact
};

/// [e, Se, ..., S^{k-1}e, Me/2, S Me/2, ..., S^{n-k-1} Me/2], k = ceil(n/2).
HalfIntegerMatrix modified_walk_matrix(const graphs::OrientedGraph& g);

}  // namespace skewspec::spectral
