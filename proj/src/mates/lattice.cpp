#include "mates/lattice.hpp"

#include <cmath>
#include <optional>

#include "common/error.hpp"

namespace skewspec::mates {

namespace {

using Rational = mpq_class;

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;  // mu[i][j], j < i
  std::vector<Rational> norm;             // |b*_i|^2
};

GramSchmidt gram_schmidt(const IntMatrix& b) {
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  GramSchmidt gs;
  gs.mu.assign(m, std::vector<Rational>(m));
  gs.norm.assign(m, Rational(0));
  std::vector<std::vector<Rational>> star(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) star[i][k] = b(i, k);
    for (std::size_t j = 0; j < i; ++j) {
      Rational ip = 0;
      for (std::size_t k = 0; k < n; ++k) ip += Rational(b(i, k)) * star[j][k];
      gs.mu[i][j] = ip / gs.norm[j];
      for (std::size_t k = 0; k < n; ++k) star[i][k] -= gs.mu[i][j] * star[j][k];
    }
    for (std::size_t k = 0; k < n; ++k) gs.norm[i] += star[i][k] * star[i][k];
  }
  return gs;
}

Integer round_nearest(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

void row_axpy(IntMatrix& b, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t k = 0; k < b.cols(); ++k)
    mpz_submul(b(dst, k).get_mpz_t(), f.get_mpz_t(), b(src, k).get_mpz_t());
}

class Enumerator {
 public:
  Enumerator(const IntMatrix& basis, const Integer& bound)
      : basis_(basis), bound_(bound), m_(basis.rows()) {
    const GramSchmidt gs = gram_schmidt(basis);
    mu_.assign(m_, std::vector<long double>(m_, 0.0L));
    norm_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      norm_[i] = static_cast<long double>(gs.norm[i].get_d());
      for (std::size_t j = 0; j < i; ++j) mu_[i][j] = static_cast<long double>(gs.mu[i][j].get_d());
    }
    radius_ = static_cast<long double>(bound.get_d());
    // float slack; every hit is re-checked exactly
    radius_ = radius_ * (1.0L + 1e-9L) + 1e-6L;
    coeff_.assign(m_, 0);
  }

  std::vector<IntVector> run() {
    if (m_ > 0) recurse(m_ - 1, 0.0L);
    return std::move(found_);
  }

 private:
  void recurse(std::size_t i, long double partial) {
    long double center = 0.0L;
    for (std::size_t j = i + 1; j < m_; ++j) center -= mu_[j][i] * static_cast<long double>(coeff_[j]);
    const long double residual = radius_ - partial;
    if (residual < 0) return;
    const long double width = std::sqrt(residual / norm_[i]);
    const long lo = static_cast<long>(std::ceil(center - width - 1e-9L));
    const long hi = static_cast<long>(std::floor(center + width + 1e-9L));
    for (long u = lo; u <= hi; ++u) {
      const long double d = static_cast<long double>(u) - center;
      const long double next = partial + d * d * norm_[i];
      if (next > radius_) continue;
      coeff_[i] = u;
      if (i == 0) {
        record();
      } else {
        recurse(i - 1, next);
      }
    }
    coeff_[i] = 0;
  }

  void record() {
    bool zero = true;
    for (long c : coeff_) zero = zero && c == 0;
    if (zero) return;
    IntVector x(basis_.cols());
    for (std::size_t i = 0; i < m_; ++i) {
      if (coeff_[i] == 0) continue;
      const Integer c = coeff_[i];
      for (std::size_t k = 0; k < x.size(); ++k)
        mpz_addmul(x[k].get_mpz_t(), c.get_mpz_t(), basis_(i, k).get_mpz_t());
    }
    if (exact::dot(x, x) <= bound_) found_.push_back(std::move(x));
  }

  const IntMatrix& basis_;
  Integer bound_;
  std::size_t m_;
  std::vector<std::vector<long double>> mu_;
  std::vector<long double> norm_;
  long double radius_;
  std::vector<long> coeff_;
  std::vector<IntVector> found_;
};

}  // namespace

IntMatrix lattice_basis(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t k = 0;
  for (std::size_t c = 0; c < n && k < m; ++c) {
    for (;;) {
      std::optional<std::size_t> pivot;
      for (std::size_t i = k; i < m; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        if (!pivot || exact::cmp_abs(a(i, c), a(*pivot, c)) < 0) pivot = i;
      }
      if (!pivot) break;
      a.swap_rows(k, *pivot);
      bool cleared = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(k, c).get_mpz_t());
        row_axpy(a, i, k, q);
        if (sgn(a(i, c)) != 0) cleared = false;
      }
      if (cleared) {
        ++k;
        break;
      }
    }
  }
  IntMatrix out(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix lll_reduce(const IntMatrix& basis) {
  IntMatrix b = basis;
  const std::size_t m = b.rows();
  if (m < 2) return b;
  const Rational delta(99, 100);
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Integer q = round_nearest(gs.mu[k][jj]);
      if (sgn(q) == 0) continue;
      row_axpy(b, k, jj, q);
      gs.mu[k][jj] -= q;
      for (std::size_t i = 0; i < jj; ++i) gs.mu[k][i] -= Rational(q) * gs.mu[jj][i];
    }
    const Rational& mu = gs.mu[k][k - 1];
    if (gs.norm[k] >= (delta - mu * mu) * gs.norm[k - 1]) {
      ++k;
    } else {
      b.swap_rows(k, k - 1);
      gs = gram_schmidt(b);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

std::vector<IntVector> short_vectors(const IntMatrix& basis, const Integer& bound) {
  const IntMatrix reduced = lll_reduce(basis);
  return Enumerator(reduced, bound).run();
}

}  // namespace skewspec::mates
