#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prym/certifier.hpp"

namespace prym {

/// Philox4x32-10 counter-based generator. A stream is fixed by the 64-bit seed
/// (the key) and three 32-bit counter words; the fourth word counts blocks.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);

  Philox4x32(std::uint64_t seed, std::uint32_t s0 = 0, std::uint32_t s1 = 0, std::uint32_t s2 = 0);

  std::uint32_t next();
  /// Uniform on [0, bound) by rejection, bound >= 1.
  std::uint32_t below(std::uint32_t bound);

 private:
  Key key_;
  Counter counter_;
  Counter buffer_{};
  int used_ = 4;
};

/// The declared inverse of every name must also be in S.
void require_symmetric(const std::vector<std::string>& s, const GeneratorCatalog& catalog);

/// n i.i.d. uniform letters of S.
std::vector<std::string> sample_word(const std::vector<std::string>& s, std::size_t n, std::uint64_t seed,
                                     const GeneratorCatalog& catalog);

std::vector<std::size_t> sample_letters(std::size_t alphabet, std::size_t n, Philox4x32& rng);

struct LengthRange {
  int first = 5;
  int last = 45;
  int step = 10;

  std::vector<int> values() const;
  std::string to_string() const;  // first:last:step
  static LengthRange parse(std::string_view text);
};

struct WalkConfig {
  std::string catalog = "default";      // path, or "default" for the shipped catalog
  std::string generators = "torelli";   // torelli, separating, or explicit names
  LengthRange lengths;
  int trials = 500;
  std::uint64_t seed = 1;
  Tier tier = Tier::Either;

  std::string to_text() const;
};

WalkConfig parse_walk_config(std::string_view text);
WalkConfig load_walk_config(const std::string& path);

std::string_view tier_name(Tier t);

struct WalkRow {
  int n = 0;
  int trials = 0;
  int failures = 0;
  double wilson_lo = 0;
  double wilson_hi = 1;

  double rate() const { return trials ? static_cast<double>(failures) / trials : 0.0; }
};

struct WalkStats {
  std::vector<WalkRow> rows;

  /// Header comments (each line prefixed with "# "), then the column line.
  std::string to_csv(const std::string& comments = {}) const;
};

inline constexpr double kWilsonZ = 1.959963984540054;

/// Wilson score interval at 95%.
std::pair<double, double> wilson95(int failures, int trials);

WalkRow make_row(int n, int trials, int failures);

/// Resolves cfg.generators against the catalog.
std::vector<std::string> walk_generators(const WalkConfig& cfg, const GeneratorCatalog& catalog);

/// Per-trial words come from the stream (seed, 1, n, trial), so the result
/// does not depend on the thread count.
WalkStats walk_experiment(const WalkConfig& cfg, const Certifier& certifier, int threads = 0);
WalkStats walk_experiment(const WalkConfig& cfg, int threads = 0);

/// Transvections along e_1, ..., e_2k and a_i + a_{i+1}, with their inverses.
std::vector<IntMatrix> standard_sp_generators(int k);

/// Failure means the product has reducible characteristic polynomial.
WalkStats rivin_baseline(const std::vector<IntMatrix>& generators, const std::vector<int>& lengths, int trials,
                         std::uint64_t seed, int threads = 0);

struct DecayFit {
  double c_hat = 1;
  double intercept = 0;
  double r2 = 0;
  double ci_lo = 1;
  double ci_hi = 1;
  std::vector<int> lengths_used;

  std::string to_json() const;
};

/// Least squares of log((k + 1/2) / (m + 1)) against n; INSUFFICIENT_DATA
/// below three lengths.
DecayFit fit_exponential(const WalkStats& stats);

}  // namespace prym
