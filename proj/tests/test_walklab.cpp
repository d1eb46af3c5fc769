#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <map>

#include "prym/error.hpp"
#include "prym/walklab.hpp"

using namespace prym;

namespace {

const Certifier& certifier() {
  static const Certifier c(default_catalog());
  return c;
}

ErrorCode code_of_config(const std::string& text) {
  try {
    parse_walk_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("philox known answers") {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("philox streams") {
  Philox4x32 a(5, 1, 2, 3), b(5, 1, 2, 3), c(5, 1, 2, 4);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    std::uint32_t x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  Philox4x32 r(9);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
  CHECK_THROWS_AS(r.below(0), Error);
}

TEST_CASE("sample word") {
  const auto& cat = default_catalog();
  auto s = torelli_generators(cat);
  CHECK(sample_word(s, 0, 42, cat).empty());
  CHECK(sample_word(s, 30, 42, cat) == sample_word(s, 30, 42, cat));
  CHECK(sample_word(s, 30, 42, cat) != sample_word(s, 30, 43, cat));
  CHECK_THROWS_AS(sample_word({"S1"}, 3, 1, cat), Error);
  CHECK_THROWS_AS(sample_word({}, 3, 1, cat), Error);

  // Chi-square against uniform, within four standard deviations.
  std::vector<std::string> small{"S1", "S1^-1", "K1", "K1^-1", "B1", "B1^-1", "S2", "S2^-1"};
  auto w = sample_word(small, 100000, 7, cat);
  std::map<std::string, double> counts;
  for (const auto& x : w) counts[x] += 1;
  double expected = 100000.0 / small.size(), chi2 = 0;
  for (const auto& n : small) chi2 += (counts[n] - expected) * (counts[n] - expected) / expected;
  double df = static_cast<double>(small.size() - 1);
  CHECK(std::abs(chi2 - df) < 4 * std::sqrt(2 * df));
}

TEST_CASE("length ranges") {
  LengthRange r = LengthRange::parse("5:45:10");
  CHECK(r.values() == std::vector<int>{5, 15, 25, 35, 45});
  CHECK(r.to_string() == "5:45:10");
  CHECK(LengthRange::parse("3:9:4").values() == std::vector<int>{3, 7});
  CHECK_THROWS_AS(LengthRange::parse("5:45"), Error);
  CHECK_THROWS_AS(LengthRange::parse("5:4:1"), Error);
  CHECK_THROWS_AS(LengthRange::parse("1:4:0"), Error);
}

TEST_CASE("walk config text") {
  WalkConfig cfg = parse_walk_config("# comment\ncatalog = default\ngenerators = separating\nlengths = 5:25:10\n"
                                     "trials = 7\nseed = 99\ntier = irreducible\n");
  CHECK(cfg.generators == "separating");
  CHECK(cfg.trials == 7);
  CHECK(cfg.seed == 99);
  CHECK(cfg.tier == Tier::IrreducibleOnly);
  WalkConfig back = parse_walk_config(cfg.to_text());
  CHECK(back.to_text() == cfg.to_text());
  CHECK(code_of_config("colour = red\n") == ErrorCode::ParseError);
  CHECK(code_of_config("trials = 4\ntrials = 5\n") == ErrorCode::ParseError);
  CHECK(code_of_config("trials = four\n") == ErrorCode::ParseError);
  CHECK(code_of_config("trials = 0\n") == ErrorCode::InvalidArgument);
  CHECK(code_of_config("tier = maybe\n") == ErrorCode::ParseError);
  CHECK(code_of_config("seed = -3\n") == ErrorCode::ParseError);
}

TEST_CASE("wilson interval") {
  auto [lo, hi] = wilson95(0, 10);
  CHECK(lo == doctest::Approx(0.0));
  CHECK(hi == doctest::Approx(0.27753).epsilon(1e-4));
  auto [a, b] = wilson95(50, 100);
  CHECK(a == doctest::Approx(0.40383).epsilon(1e-4));
  CHECK(b == doctest::Approx(0.59617).epsilon(1e-4));
  auto w1 = wilson95(100, 500), w2 = wilson95(200, 1000);
  double ratio = (w1.second - w1.first) / (w2.second - w2.first);
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(0.01));
  for (int k = 0; k <= 20; ++k) {
    WalkRow r = make_row(1, 20, k);
    CHECK(r.wilson_lo <= r.rate());
    CHECK(r.rate() <= r.wilson_hi);
  }
}

TEST_CASE("walk experiment contracts") {
  WalkConfig cfg;
  cfg.lengths = LengthRange::parse("0:0:1");
  cfg.trials = 1;
  WalkStats s = walk_experiment(cfg, certifier(), 1);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0].rate() == 1.0);

  cfg.lengths = LengthRange::parse("15:35:10");
  cfg.trials = 60;
  cfg.seed = 4;
  WalkStats either = walk_experiment(cfg, certifier(), 1);
  CHECK(walk_experiment(cfg, certifier(), 3).to_csv() == either.to_csv());
  cfg.tier = Tier::IrreducibleOnly;
  WalkStats irr = walk_experiment(cfg, certifier(), 2);
  for (std::size_t i = 0; i < irr.rows.size(); ++i) CHECK(irr.rows[i].failures >= either.rows[i].failures);

  WalkConfig bad;
  bad.generators = "Ta1 Ta1^-1";
  try {
    walk_experiment(bad, certifier(), 1);
    FAIL("expected NOT_IN_SCOPE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInScope);
  }
  bad.generators = "S1";
  CHECK_THROWS_AS(walk_experiment(bad, certifier(), 1), Error);
}

TEST_CASE("csv layout") {
  WalkStats s;
  s.rows.push_back(make_row(5, 10, 3));
  std::string csv = s.to_csv("seed = 1\n");
  CHECK(csv.rfind("# seed = 1\nn,trials,failures,rate,wilson_lo,wilson_hi\n5,10,3,0.300000,", 0) == 0);
}

TEST_CASE("rivin baseline") {
  WalkStats id = rivin_baseline({IntMatrix::identity(4)}, {1, 5, 9}, 20, 3, 1);
  for (const auto& r : id.rows) CHECK(r.failures == r.trials);

  auto gens = standard_sp_generators(2);
  CHECK(gens.size() == 10);
  for (const auto& g : gens) CHECK(is_symplectic(g));
  WalkStats a = rivin_baseline(gens, {10, 40}, 400, 1, 1);
  CHECK(rivin_baseline(gens, {10, 40}, 400, 1, 4).to_csv() == a.to_csv());
  CHECK(a.rows[1].failures < a.rows[0].failures);

  // Relabeling the generators changes samples, not the distribution.
  std::vector<IntMatrix> shuffled(gens.rbegin(), gens.rend());
  WalkStats b = rivin_baseline(shuffled, {10, 40}, 400, 1, 1);
  CHECK(b.rows[1].failures < b.rows[0].failures);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a.rows[i].wilson_lo < b.rows[i].wilson_hi);
    CHECK(b.rows[i].wilson_lo < a.rows[i].wilson_hi);
  }

  CHECK_THROWS_AS(rivin_baseline({IntMatrix{{1, 1}, {0, 1}}}, {3}, 5, 1, 1), Error);
  CHECK_THROWS_AS(rivin_baseline({IntMatrix{{2, 0}, {0, 1}}}, {3}, 5, 1, 1), Error);
}

TEST_CASE("exponential fit") {
  // rate(n) = 0.4 * 0.4^((n - 10) / 10) on large counts.
  WalkStats s;
  const int m = 1000000000;
  for (int n : {10, 20, 30}) {
    double rate = 0.4 * std::pow(0.4, (n - 10) / 10.0);
    s.rows.push_back(make_row(n, m, static_cast<int>(std::llround(rate * m))));
  }
  DecayFit f = fit_exponential(s);
  CHECK(f.c_hat == doctest::Approx(std::pow(0.4, 0.1)).epsilon(0.01));
  CHECK(f.r2 == doctest::Approx(1.0));
  CHECK(f.lengths_used == std::vector<int>{10, 20, 30});

  WalkStats flat;
  for (int n : {10, 20, 30, 40}) flat.rows.push_back(make_row(n, 500, 100 + (n % 20 ? 3 : -3)));
  DecayFit g = fit_exponential(flat);
  CHECK(g.c_hat == doctest::Approx(1.0).epsilon(0.01));
  CHECK(g.ci_lo <= 1.0);
  CHECK(g.ci_hi >= 1.0);
  CHECK(g.r2 >= 0.0);
  CHECK(g.r2 <= 1.0);

  WalkStats two;
  two.rows.push_back(make_row(10, 50, 5));
  two.rows.push_back(make_row(20, 50, 2));
  try {
    fit_exponential(two);
    FAIL("expected INSUFFICIENT_DATA");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientData);
  }

  auto j = nlohmann::ordered_json::parse(f.to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"c_hat", "ci_lo", "ci_hi", "r2", "lengths_used"});
}
