#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "prym/certifier.hpp"
#include "prym/error.hpp"
#include "prym/walklab.hpp"

namespace pacert {

namespace {

using prym::ErrorCode;

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["message"] = message;
  err << j.dump() << "\n";
}

void warn_genus(std::ostream& err, int genus) {
  if (genus != 2) return;
  nlohmann::ordered_json j;
  j["warning"] = "the genus-2 Torelli group is not finitely generated; results only cover the given catalog";
  err << j.dump() << "\n";
}

prym::GeneratorCatalog catalog_from(const std::string& source) {
  return source == "default" ? prym::default_catalog() : prym::load_catalog(source);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) prym::fail(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
  if (!f) prym::fail(ErrorCode::InvalidArgument, "write failed for " + path);
}

int cmd_covers(int genus, std::ostream& out) {
  if (genus < 2 || genus > 6) prym::fail(ErrorCode::InvalidArgument, "genus must be between 2 and 6");
  for (const auto& h : prym::cover_homologies(genus))
    out << "alpha=" << h.cover.bits() << " h1_rank=" << h.h1_rank() << " kp_rank=" << h.kp_rank()
        << " tau_ok=" << (h.tau_is_minus_identity_on_kp() ? "true" : "false") << "\n";
  return 0;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  prym::GeneratorCatalog catalog = prym::load_catalog(path);
  prym::CatalogReport report = prym::validate_catalog(catalog);
  out << report.to_json() << "\n";
  return report.ok() ? 0 : 2;
}

int cmd_certify(int genus, const std::string& source, const std::string& word, int threads, std::ostream& out,
                std::ostream& err) {
  prym::GeneratorCatalog catalog = catalog_from(source);
  if (genus != 0 && genus != catalog.genus())
    prym::fail(ErrorCode::InvalidArgument, "catalog has genus " + std::to_string(catalog.genus()));
  warn_genus(err, catalog.genus());
  prym::Certifier certifier(catalog, threads);
  out << certifier.certify(prym::split_names(word)).to_json() << "\n";
  return 0;
}

int cmd_walk(const std::string& config, const std::string& csv, long long seed, int threads, std::ostream& out,
             std::ostream& err) {
  prym::WalkConfig cfg = prym::load_walk_config(config);
  if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
  prym::GeneratorCatalog catalog = catalog_from(cfg.catalog);
  warn_genus(err, catalog.genus());
  prym::Certifier certifier(catalog, threads);
  prym::WalkStats stats = prym::walk_experiment(cfg, certifier, threads);
  write_file(csv, stats.to_csv(cfg.to_text()));
  out << prym::fit_exponential(stats).to_json() << "\n";
  return 0;
}

int cmd_rivin(int dim, const std::string& lengths, int trials, long long seed, const std::string& csv, int threads,
              std::ostream& out) {
  if (dim < 2 || dim % 2) prym::fail(ErrorCode::InvalidArgument, "--dim must be even and at least 2");
  if (seed < 0) prym::fail(ErrorCode::InvalidArgument, "--seed must be non-negative");
  prym::LengthRange range = prym::LengthRange::parse(lengths);
  auto gens = prym::standard_sp_generators(dim / 2);
  prym::WalkStats stats = prym::rivin_baseline(gens, range.values(), trials, static_cast<std::uint64_t>(seed), threads);
  if (!csv.empty()) {
    std::string header = "rivin dim = " + std::to_string(dim) + "\nlengths = " + range.to_string() +
                         "\ntrials = " + std::to_string(trials) + "\nseed = " + std::to_string(seed) + "\n";
    write_file(csv, stats.to_csv(header));
  }
  out << prym::fit_exponential(stats).to_json() << "\n";
  return 0;
}

int cmd_modp(unsigned prime, const std::string& alpha, const std::string& source, const std::string& generators,
             unsigned long long bound, std::ostream& out) {
  prym::GeneratorCatalog catalog = catalog_from(source);
  prym::CoverSpec p = prym::CoverSpec::from_bits(alpha);
  if (p.genus != catalog.genus()) prym::fail(ErrorCode::InvalidArgument, "cover and catalog genus differ");
  prym::WalkConfig cfg;
  cfg.generators = generators;
  std::vector<std::string> names = prym::walk_generators(cfg, catalog);
  const auto& h = prym::cover_homologies(p.genus).at(static_cast<std::size_t>(p.alpha - 1));
  std::vector<prym::IntMatrix> mats;
  for (const auto& n : names) mats.push_back(prym::prym_action(h, prym::validate_mapping_class(catalog.at(n).map)).rep());
  std::uint64_t order = prym::projective_closure_order(mats, prime, bound);
  nlohmann::ordered_json j;
  j["alpha"] = p.bits();
  j["prime"] = prime;
  j["generators"] = names.size();
  j["order"] = order;
  out << j.dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-Anosov certificates for Torelli elements via double covers"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  // Subcommand flags are validated by CLI11 before anything runs.

  int cov_genus = 3;
  auto* covers = app.add_subcommand("covers", "list double covers with Prym kernel checks");
  covers->add_option("--genus", cov_genus, "surface genus")->required();

  std::string val_path;
  auto* validate = app.add_subcommand("catalog-validate", "run the catalog validation suite");
  validate->add_option("file", val_path, "catalog file")->required();

  int cert_genus = 0;
  std::string cert_catalog = "default", cert_word;
  auto* certify = app.add_subcommand("certify", "certify one word");
  certify->add_option("--genus", cert_genus, "expected genus");
  certify->add_option("--catalog", cert_catalog, "catalog file or 'default'");
  certify->add_option("--word", cert_word, "generator names separated by spaces")->required();
  certify->add_option("--threads", threads, "worker threads")->check(CLI::NonNegativeNumber);

  std::string walk_config, walk_out;
  long long walk_seed = -1;
  auto* walk = app.add_subcommand("walk", "random walk experiment");
  walk->add_option("--config", walk_config, "walk configuration file")->required();
  walk->add_option("--out", walk_out, "CSV output path")->required();
  walk->add_option("--seed", walk_seed, "override the configured seed")->check(CLI::NonNegativeNumber);
  walk->add_option("--threads", threads, "worker threads")->check(CLI::NonNegativeNumber);

  int rv_dim = 4, rv_trials = 500;
  long long rv_seed = 1;
  std::string rv_lengths = "10:50:10", rv_out;
  auto* rivin = app.add_subcommand("rivin", "random walk in Sp(2k, Z)");
  rivin->add_option("--dim", rv_dim, "matrix dimension 2k");
  rivin->add_option("--lengths", rv_lengths, "first:last:step");
  rivin->add_option("--trials", rv_trials, "trials per length")->check(CLI::PositiveNumber);
  rivin->add_option("--seed", rv_seed, "master seed")->check(CLI::NonNegativeNumber);
  rivin->add_option("--out", rv_out, "CSV output path");
  rivin->add_option("--threads", threads, "worker threads")->check(CLI::NonNegativeNumber);

  unsigned mp_prime = 2;
  unsigned long long mp_bound = 10'000'000;
  std::string mp_cover, mp_catalog = "default", mp_gens = "torelli";
  auto* modp = app.add_subcommand("modp", "order of the Prym image mod a prime");
  modp->add_option("--prime", mp_prime, "prime q")->required()->check(CLI::Range(2u, 251u));
  modp->add_option("--cover", mp_cover, "alpha bit string")->required();
  modp->add_option("--catalog", mp_catalog, "catalog file or 'default'");
  modp->add_option("--generators", mp_gens, "torelli, separating, or names");
  modp->add_option("--bound", mp_bound, "closure size limit")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, "INVALID_ARGUMENT", e.what());
    return 2;
  }

  try {
    if (*covers) return cmd_covers(cov_genus, out);
    if (*validate) return cmd_validate(val_path, out);
    if (*certify) return cmd_certify(cert_genus, cert_catalog, cert_word, threads, out, err);
    if (*walk) return cmd_walk(walk_config, walk_out, walk_seed, threads, out, err);
    if (*rivin) return cmd_rivin(rv_dim, rv_lengths, rv_trials, rv_seed, rv_out, threads, out);
    if (*modp) return cmd_modp(mp_prime, mp_cover, mp_catalog, mp_gens, mp_bound, out);
  } catch (const prym::Error& e) {
    print_error(err, prym::error_code_name(e.code()), e.what());
    return prym::is_internal(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    print_error(err, "INTERNAL", e.what());
    return 1;
  }
  return 2;
}

}  // namespace pacert
