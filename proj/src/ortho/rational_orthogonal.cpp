#include "ortho/rational_orthogonal.hpp"

#include "common/error.hpp"
#include "exact/linalg.hpp"
#include "spectral/spectral.hpp"

namespace skewspec::ortho {

namespace {

bool regular_orthogonal(const IntMatrix& n, const Integer& k) {
  if (!n.is_square()) return false;
  const std::size_t dim = n.rows();
  const Integer k2 = k * k;
  const IntMatrix gram = n.transpose() * n;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (gram(i, j) != (i == j ? k2 : Integer(0))) return false;
  for (std::size_t i = 0; i < dim; ++i) {
    Integer row_sum = 0;
    for (std::size_t j = 0; j < dim; ++j) row_sum += n(i, j);
    if (row_sum != k) return false;
  }
  return true;
}

// Q with Q^T = target * source^{-1}, scaled to an integer numerator.
RegularRationalOrthogonal from_walk_ratio(const IntMatrix& target, const IntMatrix& source) {
  if (sgn(exact::det(source)) == 0) {
    throw Error(ErrorKind::NotControllable, "walk matrix is singular");
  }
  auto [adj, d] = exact::inverse_rational(source);
  IntMatrix numerator = (target * adj).transpose();
  if (sgn(d) < 0) {
    numerator = -numerator;
    d = -d;
  }
  return level_normalize(numerator, d);
}

}  // namespace

RegularRationalOrthogonal RegularRationalOrthogonal::transpose() const {
  return RegularRationalOrthogonal(numerator_.transpose(), level_);
}

RegularRationalOrthogonal level_normalize(const IntMatrix& n, const Integer& k) {
  if (sgn(k) <= 0) throw Error(ErrorKind::InvalidMatrix, "level must be positive");
  if (!regular_orthogonal(n, k)) {
    throw Error(ErrorKind::InvalidMatrix, "matrix is not regular orthogonal at scale " + k.get_str());
  }
  Integer g = n.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
  if (g == 1) return RegularRationalOrthogonal(n, k);
  Integer level;
  mpz_divexact(level.get_mpz_t(), k.get_mpz_t(), g.get_mpz_t());
  return RegularRationalOrthogonal(n.divided_exactly(g), level);
}

RegularRationalOrthogonal identity(std::size_t n) {
  return level_normalize(IntMatrix::identity(n), Integer(1));
}

RegularRationalOrthogonal solve_q0(const graphs::OrientedGraph& g) {
  const IntMatrix s = graphs::skew_adjacency(g);
  const IntMatrix w = spectral::walk_matrix(s);
  // W(converse) = W D with D = diag(1, -1, 1, ...)
  IntMatrix wd = w;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 1; j < w.cols(); j += 2) wd(i, j) = -wd(i, j);
  RegularRationalOrthogonal q0 = from_walk_ratio(wd, w);
  if (!verify_conjugation(q0, s, -s)) {
    throw Error(ErrorKind::InvalidMatrix, "Q0 failed Q0^T S Q0 = -S");
  }
  return q0;
}

RegularRationalOrthogonal solve_transition(const graphs::OrientedGraph& from,
                                           const graphs::OrientedGraph& to) {
  if (from.order() != to.order()) throw Error(ErrorKind::Argument, "graphs of different order");
  const IntMatrix s_from = graphs::skew_adjacency(from);
  const IntMatrix s_to = graphs::skew_adjacency(to);
  RegularRationalOrthogonal q =
      from_walk_ratio(spectral::walk_matrix(s_to), spectral::walk_matrix(s_from));
  if (!verify_conjugation(q, s_from, s_to)) {
    throw Error(ErrorKind::InvalidMatrix, "transition matrix does not conjugate the skew matrices");
  }
  return q;
}

bool verify_conjugation(const RegularRationalOrthogonal& q, const IntMatrix& s_from,
                        const IntMatrix& s_to) {
  if (q.order() != s_from.rows() || q.order() != s_to.rows()) return false;
  const IntMatrix& n = q.numerator();
  return n.transpose() * s_from * n == s_to * (q.level() * q.level());
}

RegularRationalOrthogonal compose(const RegularRationalOrthogonal& q1,
                                  const RegularRationalOrthogonal& q2) {
  if (q1.order() != q2.order()) throw Error(ErrorKind::Dimension, "compose of mismatched orders");
  return level_normalize(q1.numerator() * q2.numerator(), q1.level() * q2.level());
}

bool q0_symmetry_check(const RegularRationalOrthogonal& q0) { return q0.numerator().is_symmetric(); }

bool alternating_walk_identity(const RegularRationalOrthogonal& q0, const graphs::OrientedGraph& g) {
  const IntMatrix s = graphs::skew_adjacency(g);
  exact::IntVector x = exact::ones(g.order());
  for (std::size_t k = 0; k < g.order(); ++k) {
    const exact::IntVector lhs = q0.numerator() * std::span<const Integer>(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Integer rhs = (k % 2 == 0 ? q0.level() : Integer(-q0.level())) * x[i];
      if (lhs[i] != rhs) return false;
    }
    x = s * std::span<const Integer>(x);
  }
  return true;
}

std::optional<IntMatrix> conjugate(const RegularRationalOrthogonal& q, const IntMatrix& s) {
  const IntMatrix& n = q.numerator();
  const IntMatrix t = n.transpose() * s * n;
  const Integer l2 = q.level() * q.level();
  if (!t.divisible_by(l2)) return std::nullopt;
  return t.divided_exactly(l2);
}

}  // namespace skewspec::ortho
