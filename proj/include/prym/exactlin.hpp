#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "prym/intpoly.hpp"

namespace prym {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  IntMatrix operator-() const;
  bool is_zero() const;
  bool is_identity() const;

  IntMatrix submatrix(std::size_t r0, std::size_t rcount, std::size_t c0, std::size_t ccount) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<IntVector> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = D, D diagonal with non-negative entries d_1 | d_2 | ...
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> invariant_factors() const;  // the nonzero diagonal of D
};

SNFResult smith_normal_form(const IntMatrix& m);

/// Row Hermite normal form: upper echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis of {v in Z^cols : M v = 0}, a direct summand, in Hermite-reduced form.
std::vector<IntVector> saturated_kernel(const IntMatrix& m);

/// Coefficients of det(x I - M) via Berkowitz' division-free recurrence.
IntPoly char_poly(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

struct FixedLineReport {
  std::size_t plus_rank = 0;
  std::size_t minus_rank = 0;
  bool has_line() const { return plus_rank + minus_rank > 0; }
};

FixedLineReport fixed_line_report(const IntMatrix& m);

IntMatrix reduce_mod(const IntMatrix& m, unsigned long modulus);

}  // namespace prym
