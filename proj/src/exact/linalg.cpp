#include "exact/linalg.hpp"

#include <gmpxx.h>

#include "common/error.hpp"
#include "exact/factor.hpp"

namespace skewspec::exact {

namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::Dimension,
                std::string(op) + " requires a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_prime(const Integer& p) {
  if (p < 2 || !is_prime(p)) {
    throw Error(ErrorKind::Argument, "modulus " + p.get_str() + " is not prime");
  }
}

Integer mod(const Integer& x, const Integer& p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& p) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorKind::Argument, "no inverse of " + x.get_str() + " mod " + p.get_str());
  }
  return r;
}

struct Echelon {
  IntMatrix reduced;  // reduced row echelon form mod p
  std::vector<std::size_t> pivot_cols;
};

Echelon rref_mod_p(const IntMatrix& m, const Integer& p) {
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = mod(m(i, j), p);

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(row, pivot);
    const Integer inv = inverse_mod(a(row, col), p);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = mod(a(row, j) * inv, p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Integer f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a(i, j) = mod(a(i, j) - f * a(row, j), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

Integer det(const IntMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij <- (a_kk a_ij - a_ik a_kj) / prev, exact by Sylvester's identity
        Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Adjugate inverse_rational(const IntMatrix& m) {
  require_square(m, "inverse_rational");
  const std::size_t n = m.rows();
  Integer d = det(m);
  if (sgn(d) == 0) throw Error(ErrorKind::Singular, "matrix is singular");

  // Gauss-Jordan over Q on [m | I]; the scaled inverse d * m^{-1} is integral.
  std::vector<mpq_class> a(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (sgn(at(pivot, col)) == 0) ++pivot;
    if (pivot != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(pivot, j), at(col, j));
    const mpq_class inv = 1 / at(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) at(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(at(i, col)) == 0) continue;
      const mpq_class f = at(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
    }
  }
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = at(i, n + j) * d;
      v.canonicalize();
      if (v.get_den() != 1) {
        throw Error(ErrorKind::InvalidMatrix, "adjugate entry is not integral");
      }
      adj(i, j) = v.get_num();
    }
  }
  return {std::move(adj), std::move(d)};
}

std::size_t rank_mod_p(const IntMatrix& m, const Integer& p) {
  require_prime(p);
  return rref_mod_p(m, p).pivot_cols.size();
}

std::vector<IntVector> nullspace_mod_p(const IntMatrix& m, const Integer& p) {
  require_prime(p);
  const Echelon e = rref_mod_p(m, p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    IntVector x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      x[e.pivot_cols[r]] = mod(-e.reduced(r, free), p);
    }
    std::size_t lead = 0;
    while (sgn(x[lead]) == 0) ++lead;
    const Integer inv = inverse_mod(x[lead], p);
    for (auto& xi : x) xi = mod(xi * inv, p);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace skewspec::exact
