#include "prym/twocover.hpp"

#include <map>
#include <mutex>

#include "prym/error.hpp"

namespace prym {

SchreierData::SchreierData(std::vector<int> sigma, Transversal choice) : sigma_(std::move(sigma)) {
  const int n = base_rank();
  for (int i = 0; i < n; ++i) {
    if (sigma_[static_cast<std::size_t>(i)] != 0 && sigma_[static_cast<std::size_t>(i)] != 1)
      fail(ErrorCode::InvalidArgument, "sigma values must be 0 or 1");
    if (sigma_[static_cast<std::size_t>(i)] == 1 && (t_ < 0 || choice == Transversal::LastOdd)) t_ = i;
  }
  if (t_ < 0) fail(ErrorCode::InvalidArgument, "sigma must be nonzero");

  table_.assign(static_cast<std::size_t>(2 * n), -1);
  const Word t = Word::generator(t_);
  auto push = [&](int s, int coset, Word w) {
    table_[static_cast<std::size_t>(2 * s + coset)] = static_cast<int>(words_.size());
    words_.push_back(std::move(w));
  };
  for (int s = 0; s < n; ++s) {
    if (sigma_[static_cast<std::size_t>(s)]) continue;
    push(s, 0, Word::generator(s));
    push(s, 1, Word::generator(s).conjugated_by(t));
  }
  for (int s = 0; s < n; ++s) {
    if (!sigma_[static_cast<std::size_t>(s)]) continue;
    if (s != t_) push(s, 0, Word::generator(s) * t.inverse());
    push(s, 1, t * Word::generator(s));
  }
  check_internal(rank() == 2 * n - 1, "Schreier generator count");
}

namespace {

std::vector<int> sigma_vector(const CoverSpec& p) {
  std::vector<int> s;
  for (int i = 0; i < 2 * p.genus; ++i) s.push_back(p.sigma(i));
  return s;
}

}  // namespace

SchreierData::SchreierData(const CoverSpec& p, Transversal choice) : SchreierData(sigma_vector(p), choice) {}

int SchreierData::sigma_of(const Word& w) const {
  int s = 0;
  for (int x : w.letters()) s ^= sigma(std::abs(x) - 1);
  return s;
}

Word SchreierData::rewrite(const Word& w) const {
  if (sigma_of(w)) fail(ErrorCode::OddWord, "word is not in the index-2 subgroup");
  std::vector<int> out;
  int coset = 0;
  for (int x : w.letters()) {
    int s = std::abs(x) - 1;
    if (s >= base_rank()) fail(ErrorCode::InvalidArgument, "letter outside the alphabet");
    if (x > 0) {
      int g = gamma(coset, s);
      if (g >= 0) out.push_back(g + 1);
      coset ^= sigma(s);
    } else {
      coset ^= sigma(s);
      int g = gamma(coset, s);
      if (g >= 0) out.push_back(-(g + 1));
    }
  }
  return Word(std::move(out));
}

IntVector SchreierData::rewrite_abelianized(const Word& w) const {
  if (sigma_of(w)) fail(ErrorCode::OddWord, "word is not in the index-2 subgroup");
  IntVector v(static_cast<std::size_t>(rank()));
  std::vector<long> counts(static_cast<std::size_t>(rank()), 0);
  int coset = 0;
  for (int x : w.letters()) {
    int s = std::abs(x) - 1;
    if (x > 0) {
      int g = gamma(coset, s);
      if (g >= 0) ++counts[static_cast<std::size_t>(g)];
      coset ^= sigma(s);
    } else {
      coset ^= sigma(s);
      int g = gamma(coset, s);
      if (g >= 0) --counts[static_cast<std::size_t>(g)];
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = counts[i];
  return v;
}

bool CoverHomology::tau_is_minus_identity_on_kp() const {
  return kp_projection * tau_star * kp_inclusion == -IntMatrix::identity(kp_basis.size());
}

IntMatrix CoverHomology::cover_action(const EndoMap& f) const {
  const int n = schreier.rank();
  std::vector<IntVector> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cols.push_back(schreier.rewrite_abelianized(f.apply(schreier.generator(i))));
  IntMatrix phi = IntMatrix::from_columns(cols, static_cast<std::size_t>(n));
  check_internal((quotient * phi * relators.transpose()).is_zero(), "induced map does not preserve the relator span");
  return quotient * phi * lift;
}

IntMatrix CoverHomology::raw_prym(const EndoMap& f) const {
  IntMatrix h = cover_action(f);
  IntMatrix m = kp_projection * h * kp_inclusion;
  check_internal(h * kp_inclusion == kp_inclusion * m, "induced map does not preserve K_p");
  return m;
}

CoverHomology cover_homology(const CoverSpec& p, Transversal choice) {
  if (p.genus < 1 || p.alpha == 0 || p.alpha >= (std::uint64_t{1} << (2 * p.genus)))
    fail(ErrorCode::InvalidArgument, "invalid cover");
  const int g = p.genus;
  SchreierData sd(p, choice);
  const int n = sd.rank();
  const Word r = surface_relator(g);
  const Word t = Word::generator(sd.transversal());

  IntMatrix rel = IntMatrix::from_rows({sd.rewrite_abelianized(r), sd.rewrite_abelianized(r.conjugated_by(t))},
                                       static_cast<std::size_t>(n));
  SNFResult snf = smith_normal_form(rel.transpose());
  const std::size_t rho = snf.rank();
  check_internal(rho == 1, "relator rank of the cover");
  for (const auto& d : snf.invariant_factors()) check_internal(d == 1, "cover homology is torsion-free");
  const std::size_t m = static_cast<std::size_t>(n) - rho;
  IntMatrix quotient = snf.U.submatrix(rho, m, 0, static_cast<std::size_t>(n));
  IntMatrix lift = inverse_unimodular(snf.U).submatrix(0, static_cast<std::size_t>(n), rho, m);
  check_internal((quotient * lift).is_identity(), "quotient section");
  check_internal((quotient * rel.transpose()).is_zero(), "quotient kills relators");

  std::vector<IntVector> base_cols, tau_cols;
  for (int i = 0; i < n; ++i) {
    base_cols.push_back(abelianization_vector(sd.generator(i), 2 * g));
    tau_cols.push_back(sd.rewrite_abelianized(sd.generator(i).conjugated_by(t)));
  }
  IntMatrix p_amb = IntMatrix::from_columns(base_cols, static_cast<std::size_t>(2 * g));
  IntMatrix tau_amb = IntMatrix::from_columns(tau_cols, static_cast<std::size_t>(n));
  check_internal((quotient * tau_amb * rel.transpose()).is_zero(), "deck action preserves relators");
  IntMatrix p_star = p_amb * lift;
  IntMatrix tau_star = quotient * tau_amb * lift;
  check_internal((tau_star * tau_star).is_identity(), "deck action is an involution");
  check_internal(p_star * tau_star == p_star, "projection is deck invariant");

  std::vector<IntVector> kp = saturated_kernel(p_star);
  check_internal(kp.size() == static_cast<std::size_t>(2 * g - 2), "Prym kernel rank");
  IntMatrix inc = IntMatrix::from_columns(kp, m);
  SNFResult ks = smith_normal_form(inc);
  for (const auto& d : ks.invariant_factors()) check_internal(d == 1, "Prym kernel is a direct summand");
  IntMatrix proj = ks.V * ks.U.submatrix(0, kp.size(), 0, m);
  check_internal((proj * inc).is_identity(), "Prym kernel projection");
  check_internal(tau_star * inc == -inc, "deck action is -1 on the Prym kernel");

  return CoverHomology{p,        sd,      std::move(rel), std::move(quotient), std::move(lift), std::move(p_star),
                       std::move(tau_star), std::move(inc), std::move(proj),  std::move(kp)};
}

const std::vector<CoverHomology>& cover_homologies(int genus) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<CoverHomology>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[genus];
  if (!slot) {
    auto v = std::make_unique<std::vector<CoverHomology>>();
    for (const auto& p : enumerate_covers(genus)) v->push_back(cover_homology(p));
    slot = std::move(v);
  }
  return *slot;
}

IntMatrix canonical_sign(const IntMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::InvalidArgument, "Prym representatives are square");
  Integer d = determinant(m);
  const bool odd = m.rows() % 2 == 1;
  if (odd) return d > 0 ? m : -m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return m(i, j) > 0 ? m : -m;
  return m;
}

PrymMatrix::PrymMatrix(IntMatrix any_representative) : rep_(canonical_sign(any_representative)) {}

PrymMatrix prym_action(const CoverHomology& h, const MappingClass& m) {
  if (torelli_level(m) == TorelliLevel::None) fail(ErrorCode::NotLiftable, "mapping class acts nontrivially mod 2");
  if (m.endo.rank() != 2 * h.cover.genus) fail(ErrorCode::InvalidArgument, "genus mismatch");
  PrymMatrix pm(h.raw_prym(m.endo));
  check_internal(determinant(pm.rep()) == 1, "Prym representative has determinant 1");
  return pm;
}

PrymMatrix prym_action(const CoverSpec& p, const MappingClass& m) {
  return prym_action(cover_homologies(p.genus)[static_cast<std::size_t>(p.alpha - 1)], m);
}

bool invariant_line_check(const PrymMatrix& pm) {
  return fixed_line_report(pm.rep()).has_line() || fixed_line_report(-pm.rep()).has_line();
}

}  // namespace prym
