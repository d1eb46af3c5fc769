#pragma once

#include <memory>
#include <vector>

#include "prym/exactlin.hpp"
#include "prym/freegrp.hpp"
#include "prym/surface.hpp"

namespace prym {

enum class Transversal { FirstOdd, LastOdd };

/// Index-2 Reidemeister-Schreier data for Ker(sigma) in a free group, with
/// transversal {1, t}. Subgroup generators are listed as (s, t s t^-1) for
/// sigma-even s in alphabet order, then s t^-1 and t s for sigma-odd s, with
/// the trivial t t^-1 dropped.
class SchreierData {
 public:
  SchreierData(std::vector<int> sigma, Transversal choice = Transversal::FirstOdd);
  explicit SchreierData(const CoverSpec& p, Transversal choice = Transversal::FirstOdd);

  int base_rank() const { return static_cast<int>(sigma_.size()); }
  int rank() const { return static_cast<int>(words_.size()); }
  int transversal() const { return t_; }
  int sigma(int generator) const { return sigma_[static_cast<std::size_t>(generator)]; }
  int sigma_of(const Word& w) const;

  const Word& generator(int i) const { return words_[static_cast<std::size_t>(i)]; }
  const std::vector<Word>& generators() const { return words_; }

  /// ODD_WORD unless sigma(w) = 0.
  Word rewrite(const Word& w) const;
  IntVector rewrite_abelianized(const Word& w) const;

 private:
  int gamma(int coset, int generator) const { return table_[static_cast<std::size_t>(2 * generator + coset)]; }

  std::vector<int> sigma_;
  int t_ = -1;
  std::vector<Word> words_;
  std::vector<int> table_;  // generator index per (generator, coset) or -1
};

struct CoverHomology {
  CoverSpec cover;
  SchreierData schreier;
  IntMatrix relators;    // 2 x (4g-1)
  IntMatrix quotient;    // (4g-2) x (4g-1): ambient -> H_1
  IntMatrix lift;        // (4g-1) x (4g-2), quotient * lift = I
  IntMatrix p_star;      // 2g x (4g-2)
  IntMatrix tau_star;    // (4g-2) x (4g-2)
  IntMatrix kp_inclusion;   // (4g-2) x (2g-2), columns = kp basis
  IntMatrix kp_projection;  // (2g-2) x (4g-2), left inverse of kp_inclusion
  std::vector<IntVector> kp_basis;

  int h1_rank() const { return static_cast<int>(quotient.rows()); }
  int kp_rank() const { return static_cast<int>(kp_basis.size()); }
  bool tau_is_minus_identity_on_kp() const;

  /// Induced action on H_1 of the cover of the restriction of f to Ker(sigma).
  IntMatrix cover_action(const EndoMap& f) const;
  /// Raw restriction to K_p in kp_basis, before sign normalisation.
  IntMatrix raw_prym(const EndoMap& f) const;
};

/// Builds and checks all invariants; INTERNAL on failure.
CoverHomology cover_homology(const CoverSpec& p, Transversal choice = Transversal::FirstOdd);

/// Cover homologies for every cover of the given genus, built once and shared.
const std::vector<CoverHomology>& cover_homologies(int genus);

/// Representative of a class {M, -M}, normalised to det +1 and a positive
/// first nonzero entry in row-major order.
class PrymMatrix {
 public:
  PrymMatrix() = default;
  explicit PrymMatrix(IntMatrix any_representative);

  const IntMatrix& rep() const { return rep_; }
  friend bool operator==(const PrymMatrix& a, const PrymMatrix& b) { return a.rep_ == b.rep_; }

 private:
  IntMatrix rep_;
};

IntMatrix canonical_sign(const IntMatrix& m);

/// NOT_LIFTABLE when the class acts nontrivially on mod-2 homology.
PrymMatrix prym_action(const CoverHomology& h, const MappingClass& m);
PrymMatrix prym_action(const CoverSpec& p, const MappingClass& m);

bool invariant_line_check(const PrymMatrix& pm);

}  // namespace prym
