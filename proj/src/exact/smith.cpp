#include "exact/smith.hpp"

#include <optional>
#include <utility>

#include "common/error.hpp"

namespace skewspec::exact {

namespace {

// Row and column operations are mirrored into U and V so that U * M * V
// stays equal to the working matrix.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    u_.swap_rows(i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    v_.swap_cols(i, j);
  }

  // row_dst += f * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      mpz_addmul(a_(dst, j).get_mpz_t(), f.get_mpz_t(), a_(src, j).get_mpz_t());
    for (std::size_t j = 0; j < u_.cols(); ++j)
      mpz_addmul(u_(dst, j).get_mpz_t(), f.get_mpz_t(), u_(src, j).get_mpz_t());
  }

  // col_dst += f * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      mpz_addmul(a_(i, dst).get_mpz_t(), f.get_mpz_t(), a_(i, src).get_mpz_t());
    for (std::size_t i = 0; i < v_.rows(); ++i)
      mpz_addmul(v_(i, dst).get_mpz_t(), f.get_mpz_t(), v_(i, src).get_mpz_t());
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (sgn(a_(i, j)) == 0) continue;
        if (!best || cmp_abs(a_(i, j), a_(best->first, best->second)) < 0) best = {{i, j}};
      }
    }
    return best;
  }

  // Clears row and column t against the pivot; true when both are zero.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const Integer pivot = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (sgn(a_(i, t)) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), pivot.get_mpz_t());
      add_row(i, t, -q);
      if (sgn(a_(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (sgn(a_(t, j)) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), pivot.get_mpz_t());
      add_col(j, t, -q);
      if (sgn(a_(t, j)) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> row_not_divisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) return i;
    return std::nullopt;
  }

  const IntMatrix& a() const { return a_; }
  IntMatrix take_u() { return std::move(u_); }
  IntMatrix take_v() { return std::move(v_); }

 private:
  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SnfDecomposition snf(const IntMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::Dimension, "snf requires a square matrix");
  }
  const std::size_t n = m.rows();
  Reducer r(m);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto pos = r.smallest_nonzero(t);
      if (!pos) break;  // trailing block is zero
      r.swap_rows(t, pos->first);
      r.swap_cols(t, pos->second);
      if (!r.clear_cross(t)) continue;
      if (auto i = r.row_not_divisible(t)) {
        r.add_row(t, *i, Integer(1));
        continue;
      }
      break;
    }
    if (sgn(r.a()(t, t)) < 0) r.negate_row(t);
  }
  SnfDecomposition out;
  out.d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.d.push_back(r.a()(i, i));
  out.U = r.take_u();
  out.V = r.take_v();
  return out;
}

}  // namespace skewspec::exact
