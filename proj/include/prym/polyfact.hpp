#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prym/intpoly.hpp"

namespace prym {

struct Factor {
  IntPoly poly;  // primitive, positive leading coefficient, irreducible over Q
  int multiplicity = 1;
};

struct Factorization {
  Integer content;  // signed, so that content * prod(factors) == input
  std::vector<Factor> factors;

  IntPoly product() const;
};

inline constexpr int kMaxFactorDegree = 12;

/// Complete factorization over Z. Rejects the zero polynomial and degree > 12.
Factorization factor_over_Z(const IntPoly& q);

/// Exact irreducibility over Q for monic q of degree >= 1.
bool is_irreducible_Q(const IntPoly& q);

/// n-th cyclotomic polynomial.
IntPoly cyclotomic(int n);

/// All Phi_n with phi(n) <= d, ascending n.
std::vector<IntPoly> cyclotomic_list(int d);

/// Orders n with phi(n) <= d, ascending.
std::vector<int> cyclotomic_orders(int d);

bool has_root_of_unity_factor(const IntPoly& q);

/// Palindromic coefficients; q must be monic of even degree.
bool is_reciprocal(const IntPoly& q);

namespace modp {

// Dense polynomials over F_p, p < 2^31, ascending coefficients, trimmed.
using Poly = std::vector<std::uint64_t>;

Poly reduce(const IntPoly& f, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(const Poly& a, const Poly& b, std::uint64_t p);
bool is_squarefree(const Poly& f, std::uint64_t p);

/// (s, t) with s*a + t*b = 1 for coprime a, b.
std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree f: (product, degree) pairs.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p);

/// Full factorization of a monic squarefree f into monic irreducibles (p odd).
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p);

}  // namespace modp

}  // namespace prym
