#include "prym/certifier.hpp"

#include <array>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "prym/error.hpp"
#include "prym/parallel.hpp"
#include "prym/polyfact.hpp"

namespace prym {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedIrreducible: return "CERTIFIED_PA_IRREDUCIBLE";
    case Verdict::CertifiedNoRootOfUnity: return "CERTIFIED_PA_NO_ROU";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

CoverEvidence cover_evidence(const CoverSpec& cover, const IntMatrix& any_representative) {
  CoverEvidence ev;
  ev.cover = cover;
  ev.matrix = PrymMatrix(any_representative);
  ev.charpoly = char_poly(ev.matrix.rep());
  ev.irreducible = is_irreducible_Q(ev.charpoly);
  ev.root_of_unity = has_root_of_unity_factor(ev.charpoly);
  ev.invariant_line = invariant_line_check(ev.matrix);
  return ev;
}

Verdict decide(TorelliLevel level, const std::vector<CoverEvidence>& covers) {
  if (level == TorelliLevel::None) fail(ErrorCode::NotInScope, "word acts nontrivially on mod-2 homology");
  bool all_irreducible = !covers.empty();
  bool any_rou = false;
  for (const auto& c : covers) {
    all_irreducible = all_irreducible && c.irreducible;
    any_rou = any_rou || c.root_of_unity;
  }
  if (level == TorelliLevel::FullTorelli && all_irreducible) return Verdict::CertifiedIrreducible;
  if (!any_rou) return Verdict::CertifiedNoRootOfUnity;
  return Verdict::Inconclusive;
}

namespace {

void json_string(std::ostream& out, std::string_view s) {
  out << '"';
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out << '\\' << ch;
    else if (static_cast<unsigned char>(ch) < 0x20) out << "\\u00" << "0123456789abcdef"[(ch >> 4) & 0xf] << "0123456789abcdef"[ch & 0xf];
    else out << ch;
  }
  out << '"';
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

// Written by hand: coefficients are arbitrary-precision and must stay exact.
std::string CertReport::to_json() const {
  std::ostringstream out;
  out << "{\"word\":[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ',';
    json_string(out, word[i]);
  }
  out << "],\"genus\":" << genus << ",\"level\":";
  json_string(out, torelli_level_name(level));
  out << ",\"covers\":[";
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto& c = covers[i];
    if (i) out << ',';
    out << "{\"alpha\":";
    json_string(out, c.cover.bits());
    out << ",\"charpoly\":[";
    const auto& coeffs = c.charpoly.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) out << (j ? "," : "") << coeffs[j].get_str();
    out << "],\"irreducible\":" << json_bool(c.irreducible) << ",\"root_of_unity\":" << json_bool(c.root_of_unity)
        << ",\"invariant_line\":" << json_bool(c.invariant_line) << '}';
  }
  out << "],\"verdict\":";
  json_string(out, verdict_name(verdict));
  out << ",\"witnesses\":[";
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (i) out << ',';
    json_string(out, witnesses[i]);
  }
  out << "]}";
  return out.str();
}

Certifier::Certifier(const GeneratorCatalog& catalog, int threads)
    : catalog_(catalog), threads_(resolve_threads(threads)), homologies_(&cover_homologies(catalog.genus())) {
  const auto& entries = catalog_.entries();
  for (const auto& e : entries) {
    MappingClass m = validate_mapping_class(e.map);
    TorelliLevel lv = torelli_level(m);
    homology_.push_back(m.homology);
    if (lv == TorelliLevel::None) continue;
    lifting_names_.push_back(e.name);
    lifting_levels_.push_back(lv);
  }
  raw_.assign(lifting_names_.size(), std::vector<IntMatrix>(homologies_->size()));
  parallel_for(lifting_names_.size() * homologies_->size(), threads_, [&](std::size_t job) {
    std::size_t g = job / homologies_->size();
    std::size_t c = job % homologies_->size();
    raw_[g][c] = (*homologies_)[c].raw_prym(catalog_.at(lifting_names_[g]).map);
  });
}

std::size_t Certifier::lifting_index(std::string_view name) const {
  for (std::size_t i = 0; i < lifting_names_.size(); ++i)
    if (lifting_names_[i] == name) return i;
  fail(ErrorCode::InvalidArgument, "'" + std::string(name) + "' does not act trivially mod 2");
}

TorelliLevel Certifier::level(const std::vector<std::string>& word) const {
  const std::size_t n = static_cast<std::size_t>(catalog_.rank());
  IntMatrix h = IntMatrix::identity(n);
  for (const auto& name : word) {
    auto k = catalog_.find(name);
    if (!k) fail(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
    h = homology_[*k] * h;
  }
  return torelli_level(h);
}

bool Certifier::all_lifting(const std::vector<std::string>& word, std::vector<std::size_t>& letters) const {
  letters.clear();
  for (const auto& name : word) {
    if (!catalog_.find(name)) fail(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
    bool found = false;
    for (std::size_t i = 0; i < lifting_names_.size() && !found; ++i)
      if (lifting_names_[i] == name) {
        letters.push_back(i);
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

IntMatrix Certifier::word_matrix(std::size_t cover, const std::vector<std::string>& word) const {
  if (level(word) == TorelliLevel::None) fail(ErrorCode::NotInScope, "word acts nontrivially on mod-2 homology");
  std::vector<std::size_t> letters;
  if (all_lifting(word, letters)) {
    const std::size_t k = static_cast<std::size_t>(this->cover(cover).kp_rank());
    IntMatrix m = IntMatrix::identity(k);
    for (std::size_t x : letters) m = raw_[x][cover] * m;
    return m;
  }
  return this->cover(cover).raw_prym(compose(word, catalog_));
}

CertReport Certifier::certify(const std::vector<std::string>& word) const {
  CertReport report;
  report.word = word;
  report.genus = genus();
  report.level = level(word);
  if (report.level == TorelliLevel::None) fail(ErrorCode::NotInScope, "word acts nontrivially on mod-2 homology");

  std::vector<std::size_t> letters;
  const bool fast = all_lifting(word, letters);
  EndoMap composite;
  if (!fast) composite = compose(word, catalog_);

  report.covers.resize(cover_count());
  parallel_for(cover_count(), threads_, [&](std::size_t c) {
    IntMatrix m;
    if (fast) {
      m = IntMatrix::identity(static_cast<std::size_t>(cover(c).kp_rank()));
      for (std::size_t x : letters) m = raw_[x][c] * m;
    } else {
      m = cover(c).raw_prym(composite);
    }
    check_internal(abs(determinant(m)) == 1, "Prym representative is unimodular");
    report.covers[c] = cover_evidence(cover(c).cover, m);
  });

  report.verdict = decide(report.level, report.covers);
  for (const auto& c : report.covers) {
    if (report.verdict == Verdict::Inconclusive && c.root_of_unity) report.witnesses.push_back(c.cover.bits());
    if (report.verdict == Verdict::CertifiedNoRootOfUnity && !c.irreducible) report.witnesses.push_back(c.cover.bits());
  }
  return report;
}

bool Certifier::certified_indices(const std::vector<std::size_t>& letters, Tier tier) const {
  TorelliLevel lv = TorelliLevel::FullTorelli;
  for (std::size_t x : letters) {
    if (x >= lifting_names_.size()) fail(ErrorCode::InvalidArgument, "letter index out of range");
    if (lifting_levels_[x] != TorelliLevel::FullTorelli) lv = TorelliLevel::Mod2Only;
  }
  if (lv != TorelliLevel::FullTorelli) {
    const std::size_t n = static_cast<std::size_t>(catalog_.rank());
    IntMatrix h = IntMatrix::identity(n);
    for (std::size_t x : letters) h = homology_[*catalog_.find(lifting_names_[x])] * h;
    lv = torelli_level(h);
  }
  const bool irreducible_allowed = lv == TorelliLevel::FullTorelli;
  if (tier == Tier::IrreducibleOnly && !irreducible_allowed) return false;

  bool any_reducible = !irreducible_allowed;
  bool any_rou = false;
  for (std::size_t c = 0; c < cover_count(); ++c) {
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(cover(c).kp_rank()));
    for (std::size_t x : letters) m = raw_[x][c] * m;
    IntPoly q = char_poly(m);
    if (!any_reducible && !is_irreducible_Q(q)) {
      any_reducible = true;
      if (tier == Tier::IrreducibleOnly) return false;
    }
    if (tier == Tier::Either && !any_rou && has_root_of_unity_factor(q)) any_rou = true;
    if (any_reducible && any_rou) return false;
  }
  return true;
}

bool Certifier::certified(const std::vector<std::string>& word, Tier tier) const {
  std::vector<std::size_t> letters;
  if (all_lifting(word, letters)) return certified_indices(letters, tier);
  CertReport r = certify(word);
  if (tier == Tier::IrreducibleOnly) return r.verdict == Verdict::CertifiedIrreducible;
  return r.verdict != Verdict::Inconclusive;
}

namespace {

// Matrices over Z/q packed into 128 bits.
struct Packed {
  std::array<std::uint64_t, 2> w{0, 0};
  friend bool operator==(const Packed& a, const Packed& b) { return a.w == b.w; }
};

struct PackedHash {
  std::size_t operator()(const Packed& p) const {
    std::uint64_t h = p.w[0] * 0x9e3779b97f4a7c15ULL ^ (p.w[1] + 0x632be59bd9b4e019ULL + (p.w[0] << 6));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

class ModMatrices {
 public:
  ModMatrices(std::size_t n, unsigned q) : n_(n), q_(q) {
    while ((1u << bits_) < q) ++bits_;
    if (bits_ == 0) bits_ = 1;
    if (n * n * bits_ > 128) fail(ErrorCode::InvalidArgument, "matrix size and modulus too large for enumeration");
  }

  using Dense = std::vector<unsigned>;

  Dense reduce(const IntMatrix& m) const {
    Dense d(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        mpz_class r = m(i, j) % q_;
        if (r < 0) r += q_;
        d[i * n_ + j] = static_cast<unsigned>(r.get_ui());
      }
    return d;
  }

  Dense mul(const Dense& a, const Dense& b) const {
    Dense c(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const std::uint64_t aik = a[i * n_ + k];
        if (!aik) continue;
        for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] = static_cast<unsigned>((c[i * n_ + j] + aik * b[k * n_ + j]) % q_);
      }
    return c;
  }

  // The lexicographically smaller of M and -M.
  Dense projective(Dense d) const {
    Dense neg(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) neg[i] = d[i] == 0 ? 0 : q_ - d[i];
    return neg < d ? neg : d;
  }

  Packed pack(const Dense& d) const {
    Packed p;
    std::size_t bit = 0;
    for (unsigned x : d) {
      for (unsigned b = 0; b < bits_; ++b, ++bit)
        if ((x >> b) & 1u) p.w[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
    return p;
  }

  Dense identity() const {
    Dense d(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) d[i * n_ + i] = 1 % q_;
    return d;
  }

 private:
  std::size_t n_;
  unsigned q_;
  unsigned bits_ = 0;
};

}  // namespace

std::uint64_t projective_closure_order(const std::vector<IntMatrix>& generators, unsigned q, std::uint64_t bound) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "modulus must be at least 2");
  if (generators.empty()) return 1;
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n) fail(ErrorCode::InvalidArgument, "generators must be square of one size");
  ModMatrices mm(n, q);
  std::vector<ModMatrices::Dense> gens;
  for (const auto& g : generators) gens.push_back(mm.reduce(g));

  std::unordered_set<Packed, PackedHash> seen;
  std::deque<ModMatrices::Dense> queue;
  ModMatrices::Dense id = mm.projective(mm.identity());
  seen.insert(mm.pack(id));
  queue.push_back(id);
  while (!queue.empty()) {
    ModMatrices::Dense cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ModMatrices::Dense next = mm.projective(mm.mul(g, cur));
      if (seen.insert(mm.pack(next)).second) {
        if (seen.size() > bound) fail(ErrorCode::Explosion, "closure exceeds " + std::to_string(bound) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::uint64_t modp_image_order(const CoverSpec& p, const GeneratorCatalog& catalog, unsigned q, std::uint64_t bound) {
  if (p.genus != catalog.genus()) fail(ErrorCode::InvalidArgument, "cover and catalog genus differ");
  if (p.alpha == 0 || p.alpha >= (std::uint64_t{1} << (2 * p.genus))) fail(ErrorCode::InvalidArgument, "invalid cover");
  const CoverHomology& h = cover_homologies(p.genus).at(static_cast<std::size_t>(p.alpha - 1));
  std::vector<IntMatrix> gens;
  for (const auto& e : catalog.entries()) {
    MappingClass m = validate_mapping_class(e.map);
    if (torelli_level(m) == TorelliLevel::None) continue;
    gens.push_back(prym_action(h, m).rep());
  }
  return projective_closure_order(gens, q, bound);
}

}  // namespace prym
