#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prym/exactlin.hpp"
#include "prym/freegrp.hpp"

namespace prym {

/// r = [a1,b1]...[ag,bg] with [a,b] = a b a^-1 b^-1.
Word surface_relator(int genus);

/// Gram matrix of the intersection form: <a_i, b_i> = 1.
IntMatrix symplectic_form(int genus);
Integer intersection(const IntVector& u, const IntVector& v);

/// v -> v + <c, v> c
IntMatrix transvection(const IntVector& c);

bool is_symplectic(const IntMatrix& m);

enum class TorelliLevel { FullTorelli, Mod2Only, None };

std::string_view torelli_level_name(TorelliLevel level);
TorelliLevel torelli_level(const IntMatrix& homology);

struct MappingClass {
  EndoMap endo;
  IntMatrix homology;
  int orientation = 1;
};

MappingClass validate_mapping_class(const EndoMap& f);
TorelliLevel torelli_level(const MappingClass& m);

/// A double cover, given by the nonzero class alpha in (Z/2)^{2g}. `alpha` is
/// read as a 2g-digit binary number whose leading digit is the a1 coordinate.
struct CoverSpec {
  int genus = 0;
  std::uint64_t alpha = 0;

  int coordinate(int generator) const {
    return static_cast<int>((alpha >> (2 * genus - 1 - generator)) & 1u);
  }
  /// sigma on generator i, i.e. <alpha, x_i> mod 2.
  int sigma(int generator) const;
  std::string bits() const;

  static CoverSpec from_bits(std::string_view bits);

  friend bool operator==(const CoverSpec& a, const CoverSpec& b) {
    return a.genus == b.genus && a.alpha == b.alpha;
  }
};

std::vector<CoverSpec> enumerate_covers(int genus);
int sigma_of(const CoverSpec& p, const Word& w);

/// Mod-2 vectors as bit masks, bit i = coordinate of generator i.
using Mod2Vector = std::uint64_t;

struct Splitting {
  int genus = 0;
  std::vector<Mod2Vector> v1;
  std::vector<Mod2Vector> v2;
};

int mod2_pairing(Mod2Vector u, Mod2Vector v, int genus);
int mod2_rank(std::vector<Mod2Vector> vectors);

/// INVALID_ARGUMENT unless V1 + V2 is everything and V1 is orthogonal to V2.
void validate_splitting(const Splitting& s);

bool separating_lifts_predicate(const CoverSpec& p, const Splitting& s);
CoverSpec witness_cover_for_splitting(const Splitting& s);

/// The splitting cut out by a contiguous block of handles [first, last] (1-based).
Splitting handle_splitting(int genus, int first, int last);

/// {"genus": g, "V1": [...], "V2": [...]}, vectors as bit strings or 0/1 arrays.
Splitting parse_splitting_json(std::string_view text);

struct ValidationCheck {
  std::string subject;
  std::string check;
  bool passed = true;
  bool informational = false;
  std::string detail;
};

struct CatalogReport {
  int genus = 0;
  std::vector<ValidationCheck> checks;
  std::vector<std::pair<std::string, TorelliLevel>> levels;

  bool ok() const;
  std::string to_json() const;
};

CatalogReport validate_catalog(const GeneratorCatalog& catalog);

/// Names whose composite acts trivially mod 2 (levels FULL_TORELLI or MOD2_ONLY).
std::vector<std::string> torelli_generators(const GeneratorCatalog& catalog);
/// Names declared as twists about null-homologous curves.
std::vector<std::string> separating_generators(const GeneratorCatalog& catalog);

/// Shipped genus-3 catalog.
const GeneratorCatalog& default_catalog();

}  // namespace prym
