#include <doctest.h>

#include <random>

#include "prym/error.hpp"
#include "prym/polyfact.hpp"
#include "prym/twocover.hpp"

using namespace prym;

namespace {

// Composite images grow quickly with word length, so words that go through
// compose() stay short.

const GeneratorCatalog& cat() { return default_catalog(); }

std::vector<std::string> random_torelli_word(std::mt19937_64& rng, std::size_t len) {
  static const std::vector<std::string> names = torelli_generators(cat());
  std::vector<std::string> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(names[rng() % names.size()]);
  return w;
}

Word even_word(std::mt19937_64& rng, const SchreierData& sd, std::size_t len) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < len; ++i) {
    int g = static_cast<int>(rng() % static_cast<unsigned>(sd.base_rank())) + 1;
    letters.push_back(rng() % 2 ? g : -g);
  }
  Word w(letters);
  if (sd.sigma_of(w)) w = w * Word::generator(sd.transversal());
  return w;
}

}  // namespace

TEST_CASE("schreier data on the toy free group") {
  SchreierData sd(std::vector<int>{1, 0});
  REQUIRE(sd.rank() == 3);
  CHECK(sd.generator(0) == Word({2}));
  CHECK(sd.generator(1) == Word({1, 2, -1}));
  CHECK(sd.generator(2) == Word({1, 1}));
  CHECK(sd.rewrite(Word({1, 2, -1, 2})) == Word({2, 1}));
  CHECK(sd.rewrite(Word({1, 1})) == Word({3}));
  try {
    sd.rewrite(Word({1}));
    FAIL("expected ODD_WORD");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddWord);
  }
}

TEST_CASE("schreier data for genus 3 covers") {
  std::mt19937_64 rng(8);
  for (const auto& p : enumerate_covers(3)) {
    for (Transversal tr : {Transversal::FirstOdd, Transversal::LastOdd}) {
      SchreierData sd(p, tr);
      CHECK(sd.rank() == 11);
      for (const auto& g : sd.generators()) CHECK(sd.sigma_of(g) == 0);
      for (int t = 0; t < 5; ++t) {
        Word w = even_word(rng, sd, 9);
        // Substituting the generator words back reproduces w.
        Word back, rw = sd.rewrite(w);
        for (int x : rw.letters()) {
          const Word& g = sd.generator(std::abs(x) - 1);
          back = back * (x > 0 ? g : g.inverse());
        }
        CHECK(back == w);
        // Abelianized oracle through the base abelianization.
        IntVector sum(6);
        IntVector ab = sd.rewrite_abelianized(w);
        for (int i = 0; i < sd.rank(); ++i) {
          IntVector gi = abelianization_vector(sd.generator(i), 6);
          for (std::size_t k = 0; k < 6; ++k) sum[k] += ab[static_cast<std::size_t>(i)] * gi[k];
        }
        CHECK(sum == abelianization_vector(w, 6));
      }
    }
  }
}

TEST_CASE("cover homology structure") {
  for (int genus : {2, 3}) {
    for (const auto& h : cover_homologies(genus)) {
      CHECK(h.h1_rank() == 4 * genus - 2);
      CHECK(h.kp_rank() == 2 * genus - 2);
      CHECK(h.tau_is_minus_identity_on_kp());
      CHECK((h.p_star * h.kp_inclusion).is_zero());
      CHECK((h.kp_projection * h.kp_inclusion).is_identity());
      IntMatrix t2 = h.tau_star * h.tau_star;
      CHECK(t2.is_identity());
    }
  }
}

TEST_CASE("prym action basics") {
  const auto& covers = cover_homologies(3);
  MappingClass id = validate_mapping_class(EndoMap::identity(6));
  for (const auto& h : covers) {
    CHECK(prym_action(h, id).rep().is_identity());
    CHECK(h.raw_prym(EndoMap::identity(6)).is_identity());
  }
  CHECK_THROWS_AS(prym_action(covers[0], validate_mapping_class(cat().at("Ta1").map)), Error);
  try {
    prym_action(covers[0], validate_mapping_class(cat().at("Tb1").map));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLiftable);
  }
}

TEST_CASE("inner automorphisms act as the deck group") {
  std::mt19937_64 rng(10);
  for (const auto& h : cover_homologies(3)) {
    for (int t = 0; t < 4; ++t) {
      std::vector<int> letters;
      for (int i = 0; i < 5; ++i) letters.push_back(static_cast<int>(rng() % 6) + 1);
      Word w(letters);
      IntMatrix raw = h.raw_prym(inner_automorphism(6, w));
      if (sigma_of(h.cover, w)) CHECK((-raw).is_identity());
      else CHECK(raw.is_identity());
    }
  }
}

TEST_CASE("separating twists are unipotent or trivial") {
  // S1 cuts off handle 1.
  Splitting s = handle_splitting(3, 1, 1);
  MappingClass m = validate_mapping_class(cat().at("S1").map);
  for (const auto& h : cover_homologies(3)) {
    IntMatrix rep = prym_action(h, m).rep();
    if (separating_lifts_predicate(h.cover, s)) {
      CHECK(rep.is_identity());
      continue;
    }
    // The class is {M, -M}; the unipotent one need not be the canonical one.
    IntMatrix n = rep - IntMatrix::identity(4);
    if (!(n * n).is_zero()) n = -rep - IntMatrix::identity(4);
    CHECK_FALSE(n.is_zero());
    CHECK((n * n).is_zero());
    CHECK(rank(n) == 1);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(n(i, j) % 2 == 0);
    CHECK(invariant_line_check(prym_action(h, m)));
  }
}

TEST_CASE("canonical sign") {
  std::mt19937_64 rng(12);
  std::vector<std::string> w = random_torelli_word(rng, 3);
  MappingClass m = validate_mapping_class(compose(w, cat()));
  for (const auto& h : cover_homologies(3)) {
    IntMatrix raw = h.raw_prym(m.endo);
    PrymMatrix a(raw), b(-raw);
    CHECK(a == b);
    CHECK(determinant(a.rep()) == 1);
    CHECK(canonical_sign(raw) == a.rep());
    CHECK(prym_action(h, m) == a);
  }
  PrymMatrix minus(-IntMatrix::identity(4));
  CHECK(minus.rep().is_identity());
  CHECK(invariant_line_check(minus));
  PrymMatrix hyp(IntMatrix{{2, 1}, {1, 1}});
  CHECK_FALSE(invariant_line_check(hyp));
}

TEST_CASE("prym action is a homomorphism up to sign") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 10; ++t) {
    auto u = random_torelli_word(rng, 1 + rng() % 2), v = random_torelli_word(rng, 1 + rng() % 2);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    MappingClass mu = validate_mapping_class(compose(u, cat()));
    MappingClass mv = validate_mapping_class(compose(v, cat()));
    MappingClass muv = validate_mapping_class(compose(uv, cat()));
    for (const auto& h : cover_homologies(3)) {
      // Leftmost is applied first, so the product reads right to left.
      IntMatrix prod = prym_action(h, mv).rep() * prym_action(h, mu).rep();
      CHECK(prym_action(h, muv) == PrymMatrix(prod));
    }
  }
}

TEST_CASE("a second transversal changes the basis but not the polynomials") {
  std::mt19937_64 rng(16);
  std::vector<CoverHomology> other;
  for (const auto& p : enumerate_covers(3)) other.push_back(cover_homology(p, Transversal::LastOdd));
  const auto& base = cover_homologies(3);
  bool some_basis_differs = false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(other[i].tau_is_minus_identity_on_kp());
    some_basis_differs = some_basis_differs || other[i].kp_basis != base[i].kp_basis ||
                         other[i].schreier.generators() != base[i].schreier.generators();
  }
  CHECK(some_basis_differs);
  for (int t = 0; t < 8; ++t) {
    EndoMap f = compose(random_torelli_word(rng, 3), cat());
    for (std::size_t i = 0; i < base.size(); ++i) {
      IntPoly a = char_poly(canonical_sign(base[i].raw_prym(f)));
      IntPoly b = char_poly(canonical_sign(other[i].raw_prym(f)));
      CHECK(a == b);
    }
  }
}

TEST_CASE("symplectic shadow on the prym") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 6; ++t) {
    MappingClass m = validate_mapping_class(compose(random_torelli_word(rng, 3), cat()));
    for (const auto& h : cover_homologies(3)) {
      PrymMatrix pm = prym_action(h, m);
      IntPoly q = char_poly(pm.rep());
      CHECK(is_reciprocal(q));
      CHECK(q[0] == 1);
    }
  }
}
