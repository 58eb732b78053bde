#include "spectral/spectral.hpp"

#include "common/error.hpp"
#include "exact/factor.hpp"
#include "exact/linalg.hpp"

namespace skewspec::spectral {

namespace {

IntMatrix matrix_power_sum(const IntMatrix& s, const std::vector<Integer>& coeffs,
                           std::size_t top_power, std::size_t count) {
  // sum_{j < count} coeffs[2j] * S^{top_power - j}
  const std::size_t n = s.rows();
  std::vector<IntMatrix> powers{IntMatrix::identity(n)};
  for (std::size_t k = 1; k <= top_power; ++k) powers.push_back(powers.back() * s);
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < count; ++j) m += powers[top_power - j] * coeffs[2 * j];
  return m;
}

}  // namespace

const char* to_string(Obstruction o) noexcept {
  switch (o) {
    case Obstruction::None: return "NONE";
    case Obstruction::NotControllable: return "NOT_CONTROLLABLE";
    case Obstruction::EvenReduced: return "EVEN_REDUCED";
    case Obstruction::NotSquareFree: return "NOT_SQUAREFREE";
  }
  return "?";
}

IntMatrix walk_matrix(const IntMatrix& s) {
  const std::size_t n = s.rows();
  std::vector<exact::IntVector> cols{exact::ones(n)};
  for (std::size_t k = 1; k < n; ++k) cols.push_back(s * std::span<const Integer>(cols.back()));
  return IntMatrix::from_columns(cols);
}

IntMatrix walk_matrix(const graphs::OrientedGraph& g) {
  return walk_matrix(graphs::skew_adjacency(g));
}

CharPoly char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::Dimension, "char_poly requires a square matrix");
  const std::size_t n = a.rows();
  CharPoly p;
  p.coeffs.assign(n + 1, Integer(0));
  p.coeffs[0] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += p.coeffs[k - 1];
    const IntMatrix am = a * m;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Integer c;
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    p.coeffs[k] = -c;
  }
  return p;
}

FamilyVerdict family_membership(const graphs::OrientedGraph& g) {
  FamilyVerdict v;
  const std::size_t n = g.order();
  v.det_w = exact::det(walk_matrix(g));
  v.controllable = sgn(v.det_w) != 0;
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, n / 2);
  v.reduced_integral = mpz_divisible_p(v.det_w.get_mpz_t(), power.get_mpz_t()) != 0;
  if (v.reduced_integral) mpz_divexact(v.reduced.get_mpz_t(), v.det_w.get_mpz_t(), power.get_mpz_t());

  if (!v.controllable) {
    v.obstruction = Obstruction::NotControllable;
  } else if (!v.reduced_integral || mpz_even_p(v.reduced.get_mpz_t())) {
    v.obstruction = Obstruction::EvenReduced;
  } else if (!exact::factorize(abs(v.reduced)).square_free()) {
    v.obstruction = Obstruction::NotSquareFree;
  }
  v.in_family = v.obstruction == Obstruction::None;
  return v;
}

IntMatrix complement_matrix(const IntMatrix& s) {
  const std::size_t n = s.rows();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = (i == j ? 0 : 1) - s(i, j);
  return c;
}

bool generalized_cospectral(const graphs::OrientedGraph& g1, const graphs::OrientedGraph& g2) {
  if (g1.order() != g2.order()) {
    throw Error(ErrorKind::Argument, "generalized_cospectral needs graphs of equal order");
  }
  const IntMatrix s1 = graphs::skew_adjacency(g1);
  const IntMatrix s2 = graphs::skew_adjacency(g2);
  return char_poly(s1) == char_poly(s2) &&
         char_poly(complement_matrix(s1)) == char_poly(complement_matrix(s2));
}

IntMatrix parity_matrix(const graphs::OrientedGraph& g) {
  const IntMatrix s = graphs::skew_adjacency(g);
  const std::size_t n = s.rows();
  const CharPoly phi = char_poly(s);
  if (n % 2 == 0) return matrix_power_sum(s, phi.coeffs, n / 2, n / 2 + 1);
  return matrix_power_sum(s, phi.coeffs, (n + 1) / 2, (n + 1) / 2);
}

Integer HalfIntegerMatrix::det() const {
  const Integer d = exact::det(twice);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, twice.rows());
  if (!mpz_divisible_p(d.get_mpz_t(), power.get_mpz_t())) {
    throw Error(ErrorKind::InvalidMatrix, "determinant of half-integer matrix is not integral");
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), d.get_mpz_t(), power.get_mpz_t());
  return out;
}

HalfIntegerMatrix modified_walk_matrix(const graphs::OrientedGraph& g) {
  const IntMatrix s = graphs::skew_adjacency(g);
  const std::size_t n = s.rows();
  const std::size_t k = (n + 1) / 2;
  std::vector<exact::IntVector> cols;
  exact::IntVector x = exact::ones(n);
  for (std::size_t j = 0; j < k; ++j) {
    exact::IntVector twice_x = x;
    for (auto& v : twice_x) v *= 2;
    cols.push_back(std::move(twice_x));
    x = s * std::span<const Integer>(x);
  }
  // columns S^j M e, whose halves are the remaining columns of the matrix
  exact::IntVector y = parity_matrix(g) * std::span<const Integer>(exact::ones(n));
  for (std::size_t j = k; j < n; ++j) {
    cols.push_back(y);
    y = s * std::span<const Integer>(y);
  }
  return {IntMatrix::from_columns(cols)};
}

}  // namespace skewspec::spectral
