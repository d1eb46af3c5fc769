#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace prym {

using Integer = mpz_class;

/// Dense univariate polynomial over Z, coefficients stored constant term first.
/// Always kept canonical: no trailing zero coefficients (the zero polynomial has none).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Integer& leading() const { return coeffs_.back(); }

  // Coefficient of x^i; zero outside the stored range.
  Integer operator[](int i) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer evaluate(const Integer& x) const;
  Integer content() const;  // non-negative gcd of coefficients
  IntPoly primitive_part() const;  // divided by content, leading coefficient made positive
  IntPoly derivative() const;
  IntPoly negate_variable() const;  // q(-x)
  IntPoly operator-() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Exact division in Z[x]; returns false (leaving quotient untouched) when
/// the divisor does not divide the dividend with integral quotient.
bool exact_divide(const IntPoly& dividend, const IntPoly& divisor, IntPoly& quotient);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd in Z[x] with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace prym
