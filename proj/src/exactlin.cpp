#include "prym/exactlin.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "prym/error.hpp"

namespace prym {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::InvalidArgument, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) fail(ErrorCode::InvalidArgument, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t rcount, std::size_t c0, std::size_t ccount) const {
  IntMatrix m(rcount, ccount);
  for (std::size_t i = 0; i < rcount; ++i)
    for (std::size_t j = 0; j < ccount; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  Integer t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::InvalidArgument, "matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) fail(ErrorCode::InvalidArgument, "matrix-vector dimension mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) mpz_addmul(out[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
  return out;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SNFResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Position of the smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || cmpabs(a(i, j), a(best->first, best->second)) < 0) best = {i, j};
    }
  return best;
}

// Floor quotient so that the remainder has the sign of the divisor; magnitude shrinks.
Integer quotient_toward_zero_remainder(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = smallest_entry(a, t);
    if (!pivot) break;
    a.swap_rows(t, pivot->first);
    u.swap_rows(t, pivot->first);
    a.swap_cols(t, pivot->second);
    v.swap_cols(t, pivot->second);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = quotient_toward_zero_remainder(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = quotient_toward_zero_remainder(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Bring the smallest remaining entry of row t / column t into the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SNFResult{std::move(u), std::move(a), std::move(v)};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    // Euclid on the column below pivot_row until a single nonzero remains.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < a.rows(); ++i)
        if (a(i, col) != 0 && (!best || cmpabs(a(i, col), a(*best, col)) < 0)) best = i;
      if (!best) break;
      a.swap_rows(pivot_row, *best);
      bool others = false;
      for (std::size_t i = pivot_row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(pivot_row, col).get_mpz_t());
        a.add_row_multiple(i, pivot_row, -q);
        if (a(i, col) != 0) others = true;
      }
      if (!others) break;
    }
    if (a(pivot_row, col) == 0) continue;
    if (a(pivot_row, col) < 0) a.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(pivot_row, col).get_mpz_t());
      a.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return a.submatrix(0, pivot_row, 0, a.cols());
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rows(); }

std::vector<IntVector> saturated_kernel(const IntMatrix& m) {
  SNFResult snf = smith_normal_form(m);
  std::size_t r = snf.rank();
  std::vector<IntVector> basis;
  for (std::size_t j = r; j < m.cols(); ++j) basis.push_back(snf.V.column(j));
  if (basis.empty()) return basis;
  return hermite_normal_form(IntMatrix::from_rows(basis, m.cols())).to_rows();
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::InvalidArgument, "char_poly needs a square matrix");
  const std::size_t n = m.rows();
  // Descending coefficients of the characteristic polynomial of the leading r x r block.
  std::vector<Integer> poly{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -S R, -S M R, ..., -S M^{r-1} R
    std::vector<Integer> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    std::vector<Integer> vec(r);  // M^k R
    for (std::size_t i = 0; i < r; ++i) vec[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) mpz_addmul(dot.get_mpz_t(), m(r, i).get_mpz_t(), vec[i].get_mpz_t());
      toeplitz[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<Integer> next(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) mpz_addmul(next[i].get_mpz_t(), m(i, j).get_mpz_t(), vec[j].get_mpz_t());
        vec = std::move(next);
      }
    }
    std::vector<Integer> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        mpz_addmul(next[i].get_mpz_t(), toeplitz[i - j].get_mpz_t(), poly[j].get_mpz_t());
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPoly(std::move(poly));
}

Integer determinant(const IntMatrix& m) {
  IntPoly p = char_poly(m);
  Integer c0 = p[0];
  return (m.rows() % 2 == 0) ? c0 : Integer(-c0);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) fail(ErrorCode::InvalidArgument, "singular matrix has no inverse");
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& x = a[i][n + j];
      if (x.get_den() != 1) fail(ErrorCode::InvalidArgument, "matrix is not unimodular");
      out(i, j) = x.get_num();
    }
  return out;
}

FixedLineReport fixed_line_report(const IntMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::InvalidArgument, "fixed_line_report needs a square matrix");
  Integer det = determinant(m);
  if (abs(det) != 1) fail(ErrorCode::InvalidArgument, "fixed_line_report needs |det| = 1");
  IntMatrix id = IntMatrix::identity(m.rows());
  return FixedLineReport{saturated_kernel(m - id).size(), saturated_kernel(m + id).size()};
}

IntMatrix reduce_mod(const IntMatrix& m, unsigned long modulus) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_fdiv_r_ui(out(i, j).get_mpz_t(), m(i, j).get_mpz_t(), modulus);
  return out;
}

}  // namespace prym
