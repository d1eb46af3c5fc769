#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prym/error.hpp"
#include "prym/polyfact.hpp"

using namespace prym;

namespace {

IntPoly pow(const IntPoly& p, int k) {
  IntPoly r{1};
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

IntPoly random_monic(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Integer> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(d(rng));
  c.emplace_back(1);
  return IntPoly(c);
}

}  // namespace

TEST_CASE("factor over Z examples") {
  Factorization f = factor_over_Z(IntPoly{1, 0, -2, 0, 1});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.content == 1);
  CHECK(f.factors[0].poly * f.factors[1].poly == (IntPoly{-1, 0, 1}));
  for (const auto& x : f.factors) {
    CHECK(x.multiplicity == 2);
    CHECK(x.poly.degree() == 1);
  }

  Factorization phi5 = factor_over_Z(IntPoly{1, 1, 1, 1, 1});
  REQUIRE(phi5.factors.size() == 1);
  CHECK(phi5.factors[0].poly == (IntPoly{1, 1, 1, 1, 1}));

  Factorization g = factor_over_Z(IntPoly{-1, -1, 0, 0, 1});
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].multiplicity == 1);

  Factorization h = factor_over_Z(IntPoly{-12, 0, 6});
  CHECK(h.content == 6);
  CHECK(h.product() == (IntPoly{-12, 0, 6}));

  CHECK_THROWS_AS(factor_over_Z(IntPoly{}), Error);
  CHECK_THROWS_AS(factor_over_Z(IntPoly::monomial(1, 13) - IntPoly{1}), Error);
}

TEST_CASE("factorizations multiply back") {
  const std::vector<IntPoly> small = {
      {-1, 1}, {1, 1}, {2, 1}, {1, 0, 1}, {-2, 0, 1}, {1, 1, 1}, {-1, -1, 0, 1}, {1, -3, 1}, {-1, 1, 0, 0, 1}, {3, 0, 0, 2},
  };
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    IntPoly q{1};
    int picks = 1 + static_cast<int>(rng() % 4);
    int degree = 0;
    std::vector<std::size_t> chosen;
    for (int i = 0; i < picks; ++i) {
      std::size_t k = rng() % small.size();
      if (degree + small[k].degree() > kMaxFactorDegree) continue;
      degree += small[k].degree();
      q = q * small[k];
      chosen.push_back(k);
    }
    if (rng() % 3 == 0) q = Integer(-5) * q;
    Factorization f = factor_over_Z(q);
    CHECK(f.product() == q);
    int total = 0;
    for (const auto& x : f.factors) {
      total += x.multiplicity;
      CHECK(x.poly.leading() > 0);
      CHECK(x.poly.content() == 1);
      if (x.poly.is_monic()) CHECK(is_irreducible_Q(x.poly));
    }
    CHECK(total == static_cast<int>(chosen.size()));
  }
}

TEST_CASE("irreducibility examples") {
  CHECK(is_irreducible_Q(IntPoly{1, 0, 1}));
  CHECK_FALSE(is_irreducible_Q(IntPoly{1, 0, -2, 0, 1}));
  CHECK(is_irreducible_Q(IntPoly{1, -3, 1, -3, 1}) == oracle::irreducible_bruteforce(IntPoly{1, -3, 1, -3, 1}));
  CHECK(is_irreducible_Q(IntPoly{1, -3, 1, -3, 1}));
  CHECK(is_irreducible_Q(IntPoly{-1, -1, 0, 0, 1}));
  CHECK_THROWS_AS(is_irreducible_Q(IntPoly{1, 2}), Error);
  // Swinnerton-Dyer style: irreducible over Q but reducible mod every prime.
  CHECK(is_irreducible_Q(IntPoly{1, 0, -10, 0, 1}));
  CHECK_FALSE(is_irreducible_Q(IntPoly{4, 0, 0, 0, 1}));  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
}

TEST_CASE("irreducibility matches brute force on random quintics and quartics") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1500; ++t) {
    IntPoly q = random_monic(rng, 4 + static_cast<int>(rng() % 2), 6);
    CHECK(is_irreducible_Q(q) == oracle::irreducible_bruteforce(q));
  }
  // Products of quadratics are the hard case for the sieve.
  for (int t = 0; t < 300; ++t) {
    IntPoly q = random_monic(rng, 2, 9) * random_monic(rng, 2, 9);
    CHECK_FALSE(is_irreducible_Q(q));
  }
}

TEST_CASE("cyclotomic list") {
  auto one = cyclotomic_list(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == (IntPoly{-1, 1}));
  CHECK(one[1] == (IntPoly{1, 1}));

  auto two = cyclotomic_list(2);
  REQUIRE(two.size() == 5);
  CHECK(two[2] == (IntPoly{1, 1, 1}));
  CHECK(two[3] == (IntPoly{1, 0, 1}));
  CHECK(two[4] == (IntPoly{1, -1, 1}));

  for (int d = 1; d <= 12; ++d) {
    std::vector<int> expected;
    for (int n = 1; n <= 2 * d * d + 2; ++n)
      if (oracle::euler_phi(n) <= d) expected.push_back(n);
    CHECK(cyclotomic_orders(d) == expected);
    auto list = cyclotomic_list(d);
    REQUIRE(list.size() == expected.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i].degree() == oracle::euler_phi(expected[i]));
      CHECK(is_irreducible_Q(list[i]));
    }
  }
  CHECK(cyclotomic_orders(4) == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 10, 12});
}

TEST_CASE("cyclotomic polynomials divide x^n - 1") {
  for (int n = 1; n <= 30; ++n) {
    IntPoly xn = IntPoly::monomial(1, n) - IntPoly{1};
    IntPoly q;
    CHECK(exact_divide(xn, cyclotomic(n), q));
  }
}

TEST_CASE("root of unity factor examples") {
  CHECK(has_root_of_unity_factor(IntPoly{1, 1, 1, 1, 1}));
  CHECK_FALSE(has_root_of_unity_factor(IntPoly{1, -3, 1}));
  CHECK(has_root_of_unity_factor(IntPoly{-1, 1} * IntPoly{1, -3, 1}));
  CHECK_FALSE(has_root_of_unity_factor(IntPoly{1, -3, 1, -3, 1}));
  CHECK(has_root_of_unity_factor(cyclotomic(12) * IntPoly{1, -5, 1}));
}

TEST_CASE("reciprocal examples") {
  CHECK(is_reciprocal(IntPoly{1, -3, 1, -3, 1}));
  CHECK_FALSE(is_reciprocal(IntPoly{-1, -1, 0, 0, 1}));
  CHECK(is_reciprocal(IntPoly{1, -5, 1}));
  CHECK_THROWS_AS(is_reciprocal(IntPoly{1, 1, 0, 1}), Error);
}

TEST_CASE("irreducible non-cyclotomic polynomials have no root of unity") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 800; ++t) {
    IntPoly q = random_monic(rng, 2 * (1 + static_cast<int>(rng() % 3)), 3);
    if (!is_irreducible_Q(q)) continue;
    bool cyclo = false;
    for (const auto& c : cyclotomic_list(q.degree())) cyclo = cyclo || c == q;
    CHECK(has_root_of_unity_factor(q) == cyclo);
  }
}

TEST_CASE("certificates are invariant under x -> -x") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 600; ++t) {
    IntPoly q = random_monic(rng, 2 * (1 + static_cast<int>(rng() % 4)), 4);
    IntPoly r = q.negate_variable();
    CHECK(is_irreducible_Q(q) == is_irreducible_Q(r));
    CHECK(has_root_of_unity_factor(q) == has_root_of_unity_factor(r));
  }
}

TEST_CASE("squarefree factorization mod p") {
  std::mt19937_64 rng(37);
  for (std::uint64_t p : {3u, 5u, 7u, 101u}) {
    for (int t = 0; t < 40; ++t) {
      IntPoly q = random_monic(rng, 6, 20);
      modp::Poly f = modp::reduce(q, p);
      if (!modp::is_squarefree(f, p)) continue;
      auto parts = modp::factor_squarefree(f, p);
      modp::Poly prod{1};
      int degree = 0;
      for (const auto& g : parts) {
        prod = modp::mul(prod, g, p);
        degree += static_cast<int>(g.size()) - 1;
      }
      CHECK(prod == f);
      CHECK(degree == 6);
      int dd = 0;
      for (const auto& [g, d] : modp::distinct_degree(f, p)) dd += static_cast<int>(g.size()) - 1;
      CHECK(dd == 6);
    }
  }
  CHECK_FALSE(modp::is_squarefree(modp::reduce(pow(IntPoly{1, 1}, 2), 5), 5));
}
