#include "prym/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace prym {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negate_variable() const {
  std::vector<Integer> v = coeffs_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0) out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

bool exact_divide(const IntPoly& dividend, const IntPoly& divisor, IntPoly& quotient) {
  if (divisor.is_zero()) return false;
  if (dividend.is_zero()) {
    quotient = IntPoly();
    return true;
  }
  int n = dividend.degree();
  int d = divisor.degree();
  if (n < d) return false;
  std::vector<Integer> rem = dividend.coefficients();
  std::vector<Integer> q(static_cast<std::size_t>(n - d) + 1);
  const Integer& lc = divisor.leading();
  const auto& dc = divisor.coefficients();
  for (int k = n - d; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + d)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    q[static_cast<std::size_t>(k)] = factor;
    for (int j = 0; j <= d; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * dc[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < d; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  quotient = IntPoly(std::move(q));
  return true;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coefficients();
  int d = b.degree();
  const auto& bc = b.coefficients();
  const Integer& lc = b.leading();
  for (int k = a.degree(); k >= d; --k) {
    Integer top = rem[static_cast<std::size_t>(k)];
    for (auto& c : rem) c *= lc;
    for (int j = 0; j <= d; ++j) rem[static_cast<std::size_t>(k - d + j)] -= top * bc[static_cast<std::size_t>(j)];
    rem.pop_back();
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly f = a.primitive_part();
  IntPoly g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPoly r = pseudo_remainder(f, g);
    f = g;
    g = r.primitive_part();
  }
  return f.primitive_part();
}

}  // namespace prym
