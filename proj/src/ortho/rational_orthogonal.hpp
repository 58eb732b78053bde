#pragma once

#include <optional>

#include "exact/int_matrix.hpp"
#include "graphs/oriented_graph.hpp"

namespace skewspec::ortho {

using exact::IntMatrix;
using exact::Integer;

/// Regular rational orthogonal matrix Q = numerator / level, with
/// N^T N = level^2 I, N e = level e and the level minimal.
class RegularRationalOrthogonal {
 public:
  const IntMatrix& numerator() const noexcept { return numerator_; }
  const Integer& level() const noexcept { return level_; }
  std::size_t order() const noexcept { return numerator_.rows(); }

  RegularRationalOrthogonal transpose() const;
  bool is_permutation() const { return level_ == 1; }

  friend bool operator==(const RegularRationalOrthogonal&, const RegularRationalOrthogonal&) = default;
  friend bool operator<(const RegularRationalOrthogonal& a, const RegularRationalOrthogonal& b) {
    if (a.level_ != b.level_) return a.level_ < b.level_;
    return a.numerator_ < b.numerator_;
  }

 private:
  friend RegularRationalOrthogonal level_normalize(const IntMatrix& n, const Integer& k);
  RegularRationalOrthogonal(IntMatrix n, Integer level)
      : numerator_(std::move(n)), level_(std::move(level)) {}

  IntMatrix numerator_;
  Integer level_;
};

/// Validates N^T N = k^2 I and N e = k e, then divides out gcd(content(N), k).
/// Throws InvalidMatrix when either identity fails.
RegularRationalOrthogonal level_normalize(const IntMatrix& n, const Integer& k);

RegularRationalOrthogonal identity(std::size_t n);

/// The unique regular rational orthogonal Q0 with Q0^T S Q0 = -S, computed as
/// Q0^T = W D W^{-1} with D = diag(1,-1,1,...). Throws NotControllable when
/// det W = 0.
RegularRationalOrthogonal solve_q0(const graphs::OrientedGraph& g);

/// The unique Q with Q^T S(from) Q = S(to), from Q^T W(from) = W(to).
/// Throws NotControllable when W(from) is singular and InvalidMatrix when the
/// resulting matrix is not regular orthogonal.
RegularRationalOrthogonal solve_transition(const graphs::OrientedGraph& from,
                                           const graphs::OrientedGraph& to);

/// Exact test of N^T S_from N = level^2 S_to.
bool verify_conjugation(const RegularRationalOrthogonal& q, const IntMatrix& s_from,
                        const IntMatrix& s_to);

/// Product q1 * q2 at its minimal level.
RegularRationalOrthogonal compose(const RegularRationalOrthogonal& q1,
                                  const RegularRationalOrthogonal& q2);

bool q0_symmetry_check(const RegularRationalOrthogonal& q0);

/// N S^k e = (-1)^k level S^k e for k = 0..n-1.
bool alternating_walk_identity(const RegularRationalOrthogonal& q0, const graphs::OrientedGraph& g);

/// Q^T S Q as an integer matrix, or nothing when it is not integral.
std::optional<IntMatrix> conjugate(const RegularRationalOrthogonal& q, const IntMatrix& s);

}  // namespace skewspec::ortho
