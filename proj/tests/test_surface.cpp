#include <doctest.h>

#include <random>
#include <set>

#include "prym/error.hpp"
#include "prym/surface.hpp"

using namespace prym;

namespace {

ErrorCode code_of(const EndoMap& f) {
  try {
    validate_mapping_class(f);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Mod2Vector mod2_transvect(Mod2Vector v, Mod2Vector c, int genus) { return mod2_pairing(c, v, genus) ? v ^ c : v; }

}  // namespace

TEST_CASE("relator and intersection form") {
  CHECK(format_word(surface_relator(2)) == "a1 b1 A1 B1 a2 b2 A2 B2");
  IntMatrix j = symplectic_form(2);
  CHECK(j(0, 1) == 1);
  CHECK(j(1, 0) == -1);
  CHECK(j(2, 3) == 1);
  CHECK(j(0, 2) == 0);
  CHECK(intersection(IntVector{1, 0, 0, 0}, IntVector{0, 1, 0, 0}) == 1);
  CHECK(intersection(IntVector{0, 1, 0, 0}, IntVector{1, 0, 0, 0}) == -1);
  IntMatrix t = transvection(IntVector{1, 0, 1, 0});
  CHECK(is_symplectic(t));
  CHECK(t * IntVector{0, 1, 0, 0} == IntVector{1, 1, 1, 0});
  CHECK_FALSE(is_symplectic(IntMatrix{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("mapping class validation examples") {
  MappingClass id = validate_mapping_class(EndoMap::identity(6));
  CHECK(id.homology.is_identity());
  CHECK(torelli_level(id) == TorelliLevel::FullTorelli);

  std::vector<Word> images;
  for (int i = 0; i < 6; ++i) images.push_back(Word::generator(i));
  images[0] = parse_word("a1 a1", 6);
  CHECK(code_of(EndoMap(6, images)) == ErrorCode::RelatorNotPreserved);

  // a1 -> b2, b1 -> a2, a2 -> b1, b2 -> a1 sends r to [b2,a2][b1,a1] = r^-1.
  CHECK(code_of(EndoMap(4, {Word::generator(3), Word::generator(2), Word::generator(1), Word::generator(0)})) ==
        ErrorCode::OrientationReversing);
  CHECK(code_of(EndoMap::identity(2)) == ErrorCode::InvalidArgument);
}

TEST_CASE("default catalog elements") {
  const GeneratorCatalog& cat = default_catalog();
  CHECK(cat.genus() == 3);
  for (const auto& e : cat.entries()) {
    MappingClass m = validate_mapping_class(e.map);
    CHECK(is_symplectic(m.homology));
    CHECK(m.orientation == 1);
    if (e.curve) CHECK(m.homology == transvection(*e.curve));
  }
  CHECK(torelli_level(validate_mapping_class(cat.at("Ta1").map)) == TorelliLevel::None);
  CHECK(torelli_level(validate_mapping_class(cat.at("S1").map)) == TorelliLevel::FullTorelli);
  CHECK(torelli_level(validate_mapping_class(cat.at("B1").map)) == TorelliLevel::FullTorelli);
  CHECK(torelli_level(validate_mapping_class(compose({"Ta1", "Ta1"}, cat))) == TorelliLevel::Mod2Only);

  CatalogReport report = validate_catalog(cat);
  CHECK(report.ok());
  for (const auto& c : report.checks)
    if (!c.passed) CHECK(c.informational);
  auto tor = torelli_generators(cat);
  auto sep = separating_generators(cat);
  CHECK(std::find(tor.begin(), tor.end(), "S1") != tor.end());
  CHECK(std::find(tor.begin(), tor.end(), "Ta1") == tor.end());
  CHECK(std::find(sep.begin(), sep.end(), "K3^-1") != sep.end());
  CHECK(std::find(sep.begin(), sep.end(), "B1") == sep.end());
  CHECK(sep.size() % 2 == 0);
}

TEST_CASE("catalog validation flags broken entries") {
  std::string text =
      "genus 1\n"
      "gen T inverse U curve 0 1\nimage a1 = a1 b1\nimage b1 = b1\n"
      "gen U inverse T\nimage a1 = a1 b1\nimage b1 = b1\n";
  CatalogReport report = validate_catalog(parse_catalog(text));
  CHECK_FALSE(report.ok());
  bool inverse_failed = false;
  for (const auto& c : report.checks)
    if (c.check == "inverse" && !c.passed) inverse_failed = true;
  CHECK(inverse_failed);
  CHECK(report.to_json().find("\"ok\": false") != std::string::npos);
}

TEST_CASE("cover enumeration") {
  CHECK(enumerate_covers(3).size() == 63);
  CHECK(enumerate_covers(2).size() == 15);
  std::set<std::uint64_t> seen;
  auto covers = enumerate_covers(3);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    CHECK(covers[i].alpha == i + 1);
    CHECK(seen.insert(covers[i].alpha).second);
    CHECK(CoverSpec::from_bits(covers[i].bits()) == covers[i]);
  }
  CHECK(covers[0].bits() == "000001");
  CHECK_THROWS_AS(CoverSpec::from_bits("000000"), Error);
  CHECK_THROWS_AS(CoverSpec::from_bits("10100"), Error);
  CHECK_THROWS_AS(CoverSpec::from_bits("10x100"), Error);
}

TEST_CASE("sigma on words") {
  CoverSpec a1dual = CoverSpec::from_bits("100000");
  CHECK(a1dual.coordinate(0) == 1);
  CHECK(sigma_of(a1dual, parse_word("b1", 6)) == 1);
  CHECK(sigma_of(a1dual, parse_word("a1", 6)) == 0);
  std::mt19937_64 rng(4);
  for (const auto& p : enumerate_covers(3)) {
    CHECK(sigma_of(p, surface_relator(3)) == 0);
    for (int t = 0; t < 5; ++t) {
      std::vector<int> lu, lv;
      for (int i = 0; i < 7; ++i) lu.push_back(static_cast<int>(rng() % 6) + 1);
      for (int i = 0; i < 5; ++i) lv.push_back(-(static_cast<int>(rng() % 6) + 1));
      Word u(lu), v(lv);
      CHECK(sigma_of(p, u * v) == (sigma_of(p, u) + sigma_of(p, v)) % 2);
    }
  }
}

TEST_CASE("separating lift predicate") {
  // Genus 2, V1 = handle 1, alpha = the a1 coordinate. sigma is <alpha, .>,
  // nonzero on b1 in V1 and zero on a2, b2, so V2 lies in the kernel.
  Splitting s2 = handle_splitting(2, 1, 1);
  CoverSpec p = CoverSpec::from_bits("1000");
  CHECK(separating_lifts_predicate(p, s2));
  CHECK_FALSE(separating_lifts_predicate(CoverSpec::from_bits("1010"), s2));

  Splitting s3 = handle_splitting(3, 1, 2);
  CoverSpec w = witness_cover_for_splitting(s3);
  CHECK_FALSE(separating_lifts_predicate(w, s3));
  // The first cover in enumeration order that is nonzero on both sides.
  for (const auto& q : enumerate_covers(3)) {
    if (q.alpha == w.alpha) break;
    CHECK(separating_lifts_predicate(q, s3));
  }
  // sigma must be nonzero on both summands for nonseparating lifts.
  int count = 0;
  for (const auto& q : enumerate_covers(3)) {
    bool on_v1 = false, on_v2 = false;
    for (int i = 0; i < 6; ++i) {
      if (!q.sigma(i)) continue;
      (i < 4 ? on_v1 : on_v2) = true;
    }
    CHECK(separating_lifts_predicate(q, s3) == !(on_v1 && on_v2));
    count += on_v1 && on_v2;
  }
  CHECK(count == 45);  // (2^4 - 1)(2^2 - 1)

  Splitting bad = s3;
  bad.v1[0] = bad.v2[0];
  CHECK_THROWS_AS(separating_lifts_predicate(p, bad), Error);
}

TEST_CASE("every splitting has a witness cover") {
  std::mt19937_64 rng(6);
  for (int genus = 2; genus <= 4; ++genus) {
    for (int t = 0; t < 40; ++t) {
      int last = 1 + static_cast<int>(rng() % static_cast<unsigned>(genus - 1));
      Splitting s = handle_splitting(genus, 1, last);
      // Move the splitting by random mod-2 symplectic transvections.
      for (int k = 0; k < 20; ++k) {
        Mod2Vector c = rng() & ((Mod2Vector{1} << (2 * genus)) - 1);
        for (auto& v : s.v1) v = mod2_transvect(v, c, genus);
        for (auto& v : s.v2) v = mod2_transvect(v, c, genus);
      }
      validate_splitting(s);
      CHECK_FALSE(separating_lifts_predicate(witness_cover_for_splitting(s), s));
    }
  }
}

TEST_CASE("splitting json") {
  Splitting s = parse_splitting_json(R"({"genus": 2, "V1": ["1000", [0,1,0,0]], "V2": ["0010", "0001"]})");
  CHECK(s.genus == 2);
  CHECK(s.v1 == std::vector<Mod2Vector>{1, 2});
  CHECK(s.v2 == std::vector<Mod2Vector>{4, 8});
  validate_splitting(s);
  CHECK_THROWS_AS(parse_splitting_json("{"), Error);
  CHECK_THROWS_AS(parse_splitting_json(R"({"V1": ["10"], "V2": ["0100"]})"), Error);
}
