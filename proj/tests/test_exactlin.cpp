#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prym/error.hpp"
#include "prym/exactlin.hpp"

using namespace prym;

namespace {

bool divisibility_chain(const SNFResult& r) {
  auto f = r.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i + 1] % f[i] != 0) return false;
  return true;
}

void check_snf(const IntMatrix& m) {
  SNFResult r = smith_normal_form(m);
  CHECK(r.U * m * r.V == r.D);
  CHECK(abs(determinant(r.U)) == 1);
  CHECK(abs(determinant(r.V)) == 1);
  for (std::size_t i = 0; i < r.D.rows(); ++i)
    for (std::size_t j = 0; j < r.D.cols(); ++j)
      if (i != j) CHECK(r.D(i, j) == 0);
      else CHECK(r.D(i, j) >= 0);
  CHECK(divisibility_chain(r));
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SNFResult r = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(r.D == (IntMatrix{{1, 0}, {0, 6}}));
  check_snf(IntMatrix{{2, 0}, {0, 3}});

  CHECK(smith_normal_form(IntMatrix(2, 2)).D == IntMatrix(2, 2));
  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors() ==
        std::vector<Integer>{2, 6, 12});
}

TEST_CASE("smith normal form reconstruction on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    IntMatrix m = oracle::random_matrix(rng, r, c, -10, 10);
    check_snf(m);
    CHECK(smith_normal_form(m).rank() == rank(m));
  }
}

TEST_CASE("smith normal form diagonal is unique under unimodular change") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m = oracle::random_matrix(rng, 3, 4, -6, 6);
    IntMatrix mixed = oracle::random_unimodular(rng, 3, 12) * m * oracle::random_unimodular(rng, 4, 12);
    CHECK(smith_normal_form(m).D == smith_normal_form(mixed).D);
  }
}

TEST_CASE("saturated kernel examples") {
  CHECK(saturated_kernel(IntMatrix{{1, 1}, {1, 1}}) == std::vector<IntVector>{{1, -1}});
  CHECK(saturated_kernel(IntMatrix::identity(3)).empty());
  CHECK(saturated_kernel(IntMatrix{{2, 4}}) == std::vector<IntVector>{{2, -1}});
}

TEST_CASE("saturated kernel is a primitive direct summand") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + rng() % 4, c = 2 + rng() % 5;
    IntMatrix m = oracle::random_matrix(rng, r, c, -10, 10);
    // Create dependencies now and then so kernels are not always generic.
    if (t % 3 == 0 && r > 1) m.add_row_multiple(r - 1, 0, Integer(2));
    auto basis = saturated_kernel(m);
    CHECK(basis.size() == c - rank(m));
    for (const auto& v : basis) {
      IntVector mv = m * v;
      for (const auto& x : mv) CHECK(x == 0);
    }
    if (basis.empty()) continue;
    IntMatrix stacked = IntMatrix::from_rows(basis, c);
    for (const auto& f : smith_normal_form(stacked).invariant_factors()) CHECK(f == 1);
    CHECK(hermite_normal_form(stacked) == stacked);
  }
}

TEST_CASE("char poly examples") {
  CHECK(char_poly(IntMatrix::identity(4)) == (IntPoly{1, -4, 6, -4, 1}));
  CHECK(char_poly(IntMatrix{{0, 1}, {-1, 0}}) == (IntPoly{1, 0, 1}));
  CHECK(char_poly(IntMatrix{{2, 0}, {0, 3}}) == (IntPoly{6, -5, 1}));
  CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), Error);
}

TEST_CASE("char poly agrees with cofactor expansion") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix m = oracle::random_matrix(rng, n, n, -2, 2);
    IntPoly p = char_poly(m);
    CHECK(p == oracle::char_poly_cofactor(m));
    CHECK(determinant(m) == oracle::integer_det(m));
    // char_poly(-M)(x) = (-1)^n char_poly(M)(-x)
    IntPoly q = p.negate_variable();
    if (n % 2) q = -q;
    CHECK(char_poly(-m) == q);
  }
}

TEST_CASE("unimodular matrices have constant term +-1") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + rng() % 5;
    IntMatrix m = oracle::random_unimodular(rng, n, 30);
    Integer c = char_poly(m)[0];
    CHECK((c == 1 || c == -1));
    IntMatrix inv = inverse_unimodular(m);
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
  }
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("fixed line report examples") {
  FixedLineReport a = fixed_line_report(IntMatrix{{1, 2}, {0, 1}});
  CHECK(a.plus_rank == 1);
  CHECK(a.minus_rank == 0);
  FixedLineReport b = fixed_line_report(-IntMatrix::identity(2));
  CHECK(b.plus_rank == 0);
  CHECK(b.minus_rank == 2);
  FixedLineReport c = fixed_line_report(IntMatrix{{2, 1}, {1, 1}});
  CHECK(!c.has_line());
  CHECK_THROWS_AS(fixed_line_report(IntMatrix(1, 2)), Error);
}

TEST_CASE("hermite normal form is canonical") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m = oracle::random_matrix(rng, 3, 5, -8, 8);
    IntMatrix h = hermite_normal_form(m);
    CHECK(hermite_normal_form(oracle::random_unimodular(rng, 3, 15) * m) == h);
    CHECK(h.rows() == rank(m));
  }
}
