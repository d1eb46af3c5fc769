#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prym/twocover.hpp"

namespace prym {

enum class Verdict { CertifiedIrreducible, CertifiedNoRootOfUnity, Inconclusive };

std::string_view verdict_name(Verdict v);

struct CoverEvidence {
  CoverSpec cover;
  PrymMatrix matrix;
  IntPoly charpoly;
  bool irreducible = false;
  bool root_of_unity = false;
  bool invariant_line = false;
};

/// Evidence for one cover from any representative; the sign is irrelevant.
CoverEvidence cover_evidence(const CoverSpec& cover, const IntMatrix& any_representative);

struct CertReport {
  std::vector<std::string> word;
  int genus = 0;
  TorelliLevel level = TorelliLevel::FullTorelli;
  std::vector<CoverEvidence> covers;
  Verdict verdict = Verdict::Inconclusive;
  /// Covers that block the reported certificate: for INCONCLUSIVE the covers
  /// with a root-of-unity eigenvalue, for CERTIFIED_PA_NO_ROU the covers whose
  /// polynomial is reducible, empty otherwise.
  std::vector<std::string> witnesses;

  std::string to_json() const;
};

/// The verdict rule. The irreducibility certificate needs an honest Torelli
/// element; MOD2_ONLY words can only earn the root-of-unity certificate.
Verdict decide(TorelliLevel level, const std::vector<CoverEvidence>& covers);

enum class Tier { IrreducibleOnly, Either };

/// Caches the Prym representative of every liftable catalog generator on every
/// cover and evaluates words as matrix products.
class Certifier {
 public:
  explicit Certifier(const GeneratorCatalog& catalog, int threads = 0);

  const GeneratorCatalog& catalog() const { return catalog_; }
  int genus() const { return catalog_.genus(); }
  std::size_t cover_count() const { return homologies_->size(); }
  const CoverHomology& cover(std::size_t index) const { return (*homologies_)[index]; }
  int threads() const { return threads_; }

  /// NOT_IN_SCOPE when the composite acts nontrivially mod 2.
  TorelliLevel level(const std::vector<std::string>& word) const;
  /// Raw representative of the word on one cover. Words made of liftable
  /// generators use cached matrices; anything else goes through the composite
  /// EndoMap.
  IntMatrix word_matrix(std::size_t cover, const std::vector<std::string>& word) const;

  CertReport certify(const std::vector<std::string>& word) const;

  /// Verdict only, serially; for callers that parallelise over words.
  bool certified(const std::vector<std::string>& word, Tier tier) const;

  /// Same, for a word given as indices into lifting_names().
  bool certified_indices(const std::vector<std::size_t>& letters, Tier tier) const;

  const std::vector<std::string>& lifting_names() const { return lifting_names_; }
  std::size_t lifting_index(std::string_view name) const;  // INVALID_ARGUMENT if absent

 private:
  std::vector<CoverEvidence> evidence_serial(const std::vector<std::size_t>& letters) const;
  bool all_lifting(const std::vector<std::string>& word, std::vector<std::size_t>& letters) const;

  GeneratorCatalog catalog_;
  int threads_ = 0;
  const std::vector<CoverHomology>* homologies_ = nullptr;
  std::vector<IntMatrix> homology_;          // per catalog entry
  std::vector<std::string> lifting_names_;   // entries acting trivially mod 2
  std::vector<TorelliLevel> lifting_levels_;
  std::vector<std::vector<IntMatrix>> raw_;  // [lifting index][cover]
};

/// Order of the subgroup of PSp(2g-2, Z/q) generated by the reductions of the
/// Prym images of the catalog's liftable generators on one cover. EXPLOSION
/// once more than `bound` elements are found.
std::uint64_t modp_image_order(const CoverSpec& p, const GeneratorCatalog& catalog, unsigned q,
                               std::uint64_t bound = 10'000'000);

/// The same closure for explicit matrices over Z/q, modulo the sign.
std::uint64_t projective_closure_order(const std::vector<IntMatrix>& generators, unsigned q,
                                       std::uint64_t bound = 10'000'000);

}  // namespace prym
