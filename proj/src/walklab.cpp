#include "prym/walklab.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "prym/error.hpp"
#include "prym/parallel.hpp"
#include "prym/polyfact.hpp"

namespace prym {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter c, Key k) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kPhiloxW0;
      k[1] += kPhiloxW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c[0], hi0, lo0);
    mulhilo(kPhiloxM1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
  return c;
}

Philox4x32::Philox4x32(std::uint64_t seed, std::uint32_t s0, std::uint32_t s1, std::uint32_t s2)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, counter_{0, s0, s1, s2} {}

std::uint32_t Philox4x32::next() {
  if (used_ == 4) {
    buffer_ = block(counter_, key_);
    ++counter_[0];
    used_ = 0;
  }
  return buffer_[static_cast<std::size_t>(used_++)];
}

std::uint32_t Philox4x32::below(std::uint32_t bound) {
  if (bound == 0) fail(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t span = std::uint64_t{1} << 32;
  const std::uint64_t limit = span - span % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return static_cast<std::uint32_t>(x % bound);
  }
}

void require_symmetric(const std::vector<std::string>& s, const GeneratorCatalog& catalog) {
  if (s.empty()) fail(ErrorCode::InvalidArgument, "generating set is empty");
  std::set<std::string> names(s.begin(), s.end());
  for (const auto& n : s) {
    const CatalogEntry& e = catalog.at(n);
    if (e.inverse.empty() || !names.count(e.inverse))
      fail(ErrorCode::InvalidArgument, "generating set is not symmetric: inverse of '" + n + "' missing");
  }
}

std::vector<std::size_t> sample_letters(std::size_t alphabet, std::size_t n, Philox4x32& rng) {
  std::vector<std::size_t> out(n);
  for (auto& x : out) x = rng.below(static_cast<std::uint32_t>(alphabet));
  return out;
}

std::vector<std::string> sample_word(const std::vector<std::string>& s, std::size_t n, std::uint64_t seed,
                                     const GeneratorCatalog& catalog) {
  require_symmetric(s, catalog);
  Philox4x32 rng(seed);
  std::vector<std::string> out;
  for (std::size_t i : sample_letters(s.size(), n, rng)) out.push_back(s[i]);
  return out;
}

std::vector<int> LengthRange::values() const {
  std::vector<int> v;
  for (int n = first; n <= last; n += step) v.push_back(n);
  return v;
}

std::string LengthRange::to_string() const {
  return std::to_string(first) + ":" + std::to_string(last) + ":" + std::to_string(step);
}

LengthRange LengthRange::parse(std::string_view text) {
  LengthRange r;
  std::string s(text);
  std::replace(s.begin(), s.end(), ':', ' ');
  std::istringstream in(s);
  std::string extra;
  if (!(in >> r.first >> r.last >> r.step) || (in >> extra))
    fail(ErrorCode::ParseError, "lengths must look like first:last:step");
  if (r.step < 1 || r.first < 0 || r.last < r.first) fail(ErrorCode::InvalidArgument, "invalid length range");
  return r;
}

std::string_view tier_name(Tier t) { return t == Tier::IrreducibleOnly ? "irreducible" : "either"; }

std::string WalkConfig::to_text() const {
  std::ostringstream out;
  out << "catalog = " << catalog << "\n"
      << "generators = " << generators << "\n"
      << "lengths = " << lengths.to_string() << "\n"
      << "trials = " << trials << "\n"
      << "seed = " << seed << "\n"
      << "tier = " << tier_name(tier) << "\n";
  return out.str();
}

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && ws(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

template <class T>
T parse_number(const std::string& value, const std::string& key) {
  std::istringstream in(value);
  T x{};
  std::string extra;
  if (!(in >> x) || (in >> extra)) fail(ErrorCode::ParseError, "bad value for " + key + ": '" + value + "'");
  return x;
}

}  // namespace

WalkConfig parse_walk_config(std::string_view text) {
  WalkConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) fail(ErrorCode::ParseError, "config key repeated: " + key);
    if (key == "catalog") {
      if (value.empty()) fail(ErrorCode::ParseError, "catalog must not be empty");
      cfg.catalog = value;
    } else if (key == "generators") {
      if (value.empty()) fail(ErrorCode::ParseError, "generators must not be empty");
      cfg.generators = value;
    } else if (key == "lengths") {
      cfg.lengths = LengthRange::parse(value);
    } else if (key == "trials") {
      cfg.trials = parse_number<int>(value, key);
      if (cfg.trials < 1) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
    } else if (key == "seed") {
      if (!value.empty() && value[0] == '-') fail(ErrorCode::ParseError, "seed must be non-negative");
      cfg.seed = parse_number<std::uint64_t>(value, key);
    } else if (key == "tier") {
      if (value == "irreducible") cfg.tier = Tier::IrreducibleOnly;
      else if (value == "either") cfg.tier = Tier::Either;
      else fail(ErrorCode::ParseError, "tier must be irreducible or either");
    } else {
      fail(ErrorCode::ParseError, "unknown config key: " + key);
    }
  }
  return cfg;
}

WalkConfig load_walk_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_walk_config(ss.str());
}

std::pair<double, double> wilson95(int failures, int trials) {
  if (trials <= 0) return {0.0, 1.0};
  const double m = trials;
  const double p = failures / m;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1 + z2 / m;
  const double centre = (p + z2 / (2 * m)) / denom;
  const double half = kWilsonZ * std::sqrt(p * (1 - p) / m + z2 / (4 * m * m)) / denom;
  // Rounding can push the ends just past the rate at p = 0 or 1.
  return {std::min(p, std::max(0.0, centre - half)), std::max(p, std::min(1.0, centre + half))};
}

WalkRow make_row(int n, int trials, int failures) {
  WalkRow r{n, trials, failures, 0, 1};
  std::tie(r.wilson_lo, r.wilson_hi) = wilson95(failures, trials);
  return r;
}

std::string WalkStats::to_csv(const std::string& comments) const {
  std::ostringstream out;
  std::istringstream in(comments);
  std::string line;
  while (std::getline(in, line)) out << "# " << line << "\n";
  out << "n,trials,failures,rate,wilson_lo,wilson_hi\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.6f,%.6f,%.6f\n", r.n, r.trials, r.failures, r.rate(), r.wilson_lo,
                  r.wilson_hi);
    out << buf;
  }
  return out.str();
}

std::vector<std::string> walk_generators(const WalkConfig& cfg, const GeneratorCatalog& catalog) {
  std::vector<std::string> names;
  if (cfg.generators == "torelli") names = torelli_generators(catalog);
  else if (cfg.generators == "separating") names = separating_generators(catalog);
  else names = split_names(cfg.generators);
  for (const auto& n : names)
    if (torelli_level(catalog.at(n).map.abelianization()) == TorelliLevel::None)
      fail(ErrorCode::NotInScope, "walk generator '" + n + "' acts nontrivially mod 2");
  require_symmetric(names, catalog);
  return names;
}

namespace {

WalkStats tally(const std::vector<int>& lengths, int trials, const std::vector<char>& failed) {
  WalkStats stats;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    int k = 0;
    for (int t = 0; t < trials; ++t) k += failed[i * static_cast<std::size_t>(trials) + static_cast<std::size_t>(t)];
    stats.rows.push_back(make_row(lengths[i], trials, k));
  }
  return stats;
}

}  // namespace

WalkStats walk_experiment(const WalkConfig& cfg, const Certifier& certifier, int threads) {
  if (cfg.trials < 1) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
  const std::vector<std::string> names = walk_generators(cfg, certifier.catalog());
  std::vector<std::size_t> alphabet;
  for (const auto& n : names) alphabet.push_back(certifier.lifting_index(n));
  const std::vector<int> lengths = cfg.lengths.values();
  if (lengths.empty()) fail(ErrorCode::InvalidArgument, "no lengths");

  const std::size_t trials = static_cast<std::size_t>(cfg.trials);
  std::vector<char> failed(lengths.size() * trials, 0);
  parallel_for(failed.size(), threads, [&](std::size_t job) {
    const int n = lengths[job / trials];
    const auto t = static_cast<std::uint32_t>(job % trials);
    Philox4x32 rng(cfg.seed, 1, static_cast<std::uint32_t>(n), t);
    std::vector<std::size_t> letters;
    for (std::size_t i : sample_letters(alphabet.size(), static_cast<std::size_t>(n), rng)) letters.push_back(alphabet[i]);
    failed[job] = !certifier.certified_indices(letters, cfg.tier);
  });
  return tally(lengths, cfg.trials, failed);
}

WalkStats walk_experiment(const WalkConfig& cfg, int threads) {
  GeneratorCatalog catalog = cfg.catalog == "default" ? default_catalog() : load_catalog(cfg.catalog);
  Certifier certifier(catalog, threads);
  return walk_experiment(cfg, certifier, threads);
}

std::vector<IntMatrix> standard_sp_generators(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  const std::size_t n = static_cast<std::size_t>(2 * k);
  std::vector<IntVector> curves;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector c(n);
    c[i] = 1;
    curves.push_back(c);
  }
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(k); ++i) {
    IntVector c(n);
    c[2 * i] = 1;
    c[2 * i + 2] = 1;
    curves.push_back(c);
  }
  std::vector<IntMatrix> out;
  for (const auto& c : curves) {
    IntMatrix t = transvection(c);
    out.push_back(t);
    out.push_back(inverse_unimodular(t));
  }
  return out;
}

WalkStats rivin_baseline(const std::vector<IntMatrix>& generators, const std::vector<int>& lengths, int trials,
                         std::uint64_t seed, int threads) {
  if (generators.empty()) fail(ErrorCode::InvalidArgument, "no generators");
  if (trials < 1) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (lengths.empty()) fail(ErrorCode::InvalidArgument, "no lengths");
  const std::size_t dim = generators.front().rows();
  if (dim == 0 || dim % 2) fail(ErrorCode::InvalidArgument, "dimension must be even and positive");
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim) fail(ErrorCode::InvalidArgument, "generators must share one square size");
    if (!is_symplectic(g)) fail(ErrorCode::InvalidArgument, "generator is not symplectic");
    IntMatrix inv = inverse_unimodular(g);
    if (std::find(generators.begin(), generators.end(), inv) == generators.end())
      fail(ErrorCode::InvalidArgument, "generating set is not symmetric");
  }
  const std::size_t per = static_cast<std::size_t>(trials);
  std::vector<char> failed(lengths.size() * per, 0);
  parallel_for(failed.size(), threads, [&](std::size_t job) {
    const int n = lengths[job / per];
    const auto t = static_cast<std::uint32_t>(job % per);
    Philox4x32 rng(seed, 2, static_cast<std::uint32_t>(n), t);
    IntMatrix m = IntMatrix::identity(dim);
    for (std::size_t i : sample_letters(generators.size(), static_cast<std::size_t>(n), rng)) m = generators[i] * m;
    failed[job] = !is_irreducible_Q(char_poly(m));
  });
  return tally(lengths, trials, failed);
}

DecayFit fit_exponential(const WalkStats& stats) {
  const std::size_t n = stats.rows.size();
  if (n < 3) fail(ErrorCode::InsufficientData, "at least three lengths are needed for a fit");
  std::vector<double> x, y;
  for (const auto& r : stats.rows) {
    x.push_back(r.n);
    y.push_back(std::log((r.failures + 0.5) / (r.trials + 1.0)));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) fail(ErrorCode::InsufficientData, "lengths must not all be equal");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = y[i] - (intercept + slope * x[i]);
    ssr += e * e;
  }
  DecayFit fit;
  fit.intercept = intercept;
  fit.c_hat = std::exp(slope);
  fit.r2 = syy > 0 ? std::clamp(1 - ssr / syy, 0.0, 1.0) : 1.0;
  const double se = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  boost::math::students_t dist(static_cast<double>(n - 2));
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  fit.ci_lo = std::exp(slope - t * se);
  fit.ci_hi = std::exp(slope + t * se);
  for (const auto& r : stats.rows) fit.lengths_used.push_back(r.n);
  return fit;
}

std::string DecayFit::to_json() const {
  nlohmann::ordered_json j;
  j["c_hat"] = c_hat;
  j["ci_lo"] = ci_lo;
  j["ci_hi"] = ci_hi;
  j["r2"] = r2;
  j["lengths_used"] = lengths_used;
  return j.dump();
}

}  // namespace prym
