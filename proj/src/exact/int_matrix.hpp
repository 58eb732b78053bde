#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace skewspec::exact {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

inline int cmp_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> d);
  static IntMatrix from_columns(std::span<const IntVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Integer> entries() const noexcept { return data_; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;

  IntMatrix transpose() const;

  // gcd of all entries; zero for the zero matrix.
  Integer content() const;

  bool is_zero() const;
  bool is_symmetric() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  // Exact division of every entry; throws Argument if not divisible.
  IntMatrix divided_exactly(const Integer& divisor) const;
  bool divisible_by(const Integer& divisor) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(IntMatrix a, const Integer& scalar);
IntVector operator*(const IntMatrix& a, std::span<const Integer> x);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
IntVector ones(std::size_t n);

std::string to_string(const IntMatrix& m);

}  // namespace skewspec::exact
