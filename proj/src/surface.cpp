#include "prym/surface.hpp"

#include <algorithm>
#include <optional>

#include <json.hpp>

#include "prym/error.hpp"

namespace prym {

Word surface_relator(int genus) {
  std::vector<int> l;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    l.insert(l.end(), {a, b, -a, -b});
  }
  return Word(std::move(l));
}

IntMatrix symplectic_form(int genus) {
  IntMatrix j(static_cast<std::size_t>(2 * genus), static_cast<std::size_t>(2 * genus));
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Integer intersection(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size() || u.size() % 2) fail(ErrorCode::InvalidArgument, "intersection of mismatched vectors");
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

IntMatrix transvection(const IntVector& c) {
  const std::size_t n = c.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    IntVector e(n);
    e[col] = 1;
    Integer k = intersection(c, e);
    for (std::size_t row = 0; row < n; ++row) m(row, col) += k * c[row];
  }
  return m;
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2) return false;
  IntMatrix j = symplectic_form(static_cast<int>(m.rows() / 2));
  return m.transpose() * j * m == j;
}

std::string_view torelli_level_name(TorelliLevel level) {
  switch (level) {
    case TorelliLevel::FullTorelli: return "FULL_TORELLI";
    case TorelliLevel::Mod2Only: return "MOD2_ONLY";
    case TorelliLevel::None: return "NONE";
  }
  return "NONE";
}

TorelliLevel torelli_level(const IntMatrix& homology) {
  if (homology.is_identity()) return TorelliLevel::FullTorelli;
  if (reduce_mod(homology, 2).is_identity()) return TorelliLevel::Mod2Only;
  return TorelliLevel::None;
}

TorelliLevel torelli_level(const MappingClass& m) { return torelli_level(m.homology); }

MappingClass validate_mapping_class(const EndoMap& f) {
  if (f.rank() < 4 || f.rank() % 2) fail(ErrorCode::InvalidArgument, "mapping classes need rank 2g with g >= 2");
  const int genus = f.rank() / 2;
  const Word r = surface_relator(genus);
  const Word image = f.apply(r).cyclic_core();
  if (!is_cyclic_rotation(image, r)) {
    if (is_cyclic_rotation(image, r.inverse())) fail(ErrorCode::OrientationReversing, "relator is sent to a conjugate of its inverse");
    fail(ErrorCode::RelatorNotPreserved, "image of the surface relator is not conjugate to it");
  }
  MappingClass m{f, f.abelianization(), 1};
  if (!is_symplectic(m.homology)) fail(ErrorCode::NonSymplectic, "relator-preserving map with non-symplectic homology action");
  return m;
}

int CoverSpec::sigma(int generator) const {
  // <alpha, a_i> = -alpha_{b_i}, <alpha, b_i> = alpha_{a_i}; signs vanish mod 2.
  return coordinate(generator ^ 1);
}

std::string CoverSpec::bits() const {
  std::string s;
  for (int i = 0; i < 2 * genus; ++i) s += static_cast<char>('0' + coordinate(i));
  return s;
}

CoverSpec CoverSpec::from_bits(std::string_view bits) {
  if (bits.empty() || bits.size() % 2 || bits.size() > 62) fail(ErrorCode::InvalidArgument, "cover bit string must have even length 2g");
  CoverSpec p;
  p.genus = static_cast<int>(bits.size() / 2);
  for (char c : bits) {
    if (c != '0' && c != '1') fail(ErrorCode::InvalidArgument, "cover bit string must be binary");
    p.alpha = (p.alpha << 1) | static_cast<std::uint64_t>(c - '0');
  }
  if (p.alpha == 0) fail(ErrorCode::InvalidArgument, "cover class must be nonzero");
  return p;
}

std::vector<CoverSpec> enumerate_covers(int genus) {
  if (genus < 1 || genus > 15) fail(ErrorCode::InvalidArgument, "genus out of range for cover enumeration");
  std::vector<CoverSpec> out;
  const std::uint64_t count = std::uint64_t{1} << (2 * genus);
  for (std::uint64_t a = 1; a < count; ++a) out.push_back(CoverSpec{genus, a});
  return out;
}

int sigma_of(const CoverSpec& p, const Word& w) {
  int s = 0;
  for (int x : w.letters()) s ^= p.sigma(std::abs(x) - 1);
  return s;
}

int mod2_pairing(Mod2Vector u, Mod2Vector v, int genus) {
  int s = 0;
  for (int i = 0; i < genus; ++i) {
    int ua = (u >> (2 * i)) & 1, ub = (u >> (2 * i + 1)) & 1;
    int va = (v >> (2 * i)) & 1, vb = (v >> (2 * i + 1)) & 1;
    s ^= (ua & vb) ^ (ub & va);
  }
  return s;
}

int mod2_rank(std::vector<Mod2Vector> vectors) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    Mod2Vector mask = Mod2Vector{1} << bit;
    auto it = std::find_if(vectors.begin() + rank, vectors.end(), [&](Mod2Vector v) { return v & mask; });
    if (it == vectors.end()) continue;
    std::swap(*it, vectors[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && (vectors[i] & mask)) vectors[i] ^= vectors[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

void validate_splitting(const Splitting& s) {
  if (s.genus < 1) fail(ErrorCode::InvalidArgument, "splitting genus must be positive");
  const Mod2Vector full = (s.genus >= 32) ? ~Mod2Vector{0} : (Mod2Vector{1} << (2 * s.genus)) - 1;
  for (auto v : s.v1)
    if (v & ~full) fail(ErrorCode::InvalidArgument, "splitting vector outside (Z/2)^2g");
  for (auto v : s.v2)
    if (v & ~full) fail(ErrorCode::InvalidArgument, "splitting vector outside (Z/2)^2g");
  std::vector<Mod2Vector> all = s.v1;
  all.insert(all.end(), s.v2.begin(), s.v2.end());
  int r1 = mod2_rank(s.v1), r2 = mod2_rank(s.v2);
  if (r1 + r2 != 2 * s.genus || mod2_rank(all) != 2 * s.genus)
    fail(ErrorCode::InvalidArgument, "splitting is not a direct sum decomposition");
  for (auto u : s.v1)
    for (auto v : s.v2)
      if (mod2_pairing(u, v, s.genus)) fail(ErrorCode::InvalidArgument, "splitting summands are not orthogonal");
}

namespace {

Mod2Vector alpha_mask(const CoverSpec& p) {
  Mod2Vector m = 0;
  for (int i = 0; i < 2 * p.genus; ++i)
    if (p.coordinate(i)) m |= Mod2Vector{1} << i;
  return m;
}

bool inside_kernel(const CoverSpec& p, const std::vector<Mod2Vector>& v) {
  Mod2Vector a = alpha_mask(p);
  for (auto x : v)
    if (mod2_pairing(a, x, p.genus)) return false;
  return true;
}

}  // namespace

bool separating_lifts_predicate(const CoverSpec& p, const Splitting& s) {
  validate_splitting(s);
  if (p.genus != s.genus) fail(ErrorCode::InvalidArgument, "cover and splitting genus differ");
  return inside_kernel(p, s.v1) || inside_kernel(p, s.v2);
}

CoverSpec witness_cover_for_splitting(const Splitting& s) {
  validate_splitting(s);
  for (const auto& p : enumerate_covers(s.genus))
    if (!inside_kernel(p, s.v1) && !inside_kernel(p, s.v2)) return p;
  fail(ErrorCode::Internal, "no cover with nonseparating lifts for a valid splitting");
}

Splitting handle_splitting(int genus, int first, int last) {
  if (first < 1 || last < first || last > genus) fail(ErrorCode::InvalidArgument, "bad handle block");
  Splitting s;
  s.genus = genus;
  for (int i = 0; i < 2 * genus; ++i) {
    int handle = i / 2 + 1;
    (handle >= first && handle <= last ? s.v1 : s.v2).push_back(Mod2Vector{1} << i);
  }
  return s;
}

Splitting parse_splitting_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("splitting JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("V1") || !j.contains("V2")) fail(ErrorCode::ParseError, "splitting JSON needs V1 and V2");
  Splitting s;
  int width = -1;
  auto read = [&](const nlohmann::json& list, std::vector<Mod2Vector>& out) {
    if (!list.is_array()) fail(ErrorCode::ParseError, "splitting summand must be a list");
    for (const auto& v : list) {
      std::string bits;
      if (v.is_string()) {
        bits = v.get<std::string>();
      } else if (v.is_array()) {
        for (const auto& x : v) {
          if (!x.is_number_integer()) fail(ErrorCode::ParseError, "splitting entries must be integers");
          bits += static_cast<char>('0' + (((x.get<long>() % 2) + 2) % 2));
        }
      } else {
        fail(ErrorCode::ParseError, "splitting vector must be a bit string or list");
      }
      if (width < 0) width = static_cast<int>(bits.size());
      if (static_cast<int>(bits.size()) != width || width % 2 || width == 0 || width > 62)
        fail(ErrorCode::ParseError, "splitting vectors must share an even length 2g");
      Mod2Vector m = 0;
      for (int i = 0; i < width; ++i) {
        char c = bits[static_cast<std::size_t>(i)];
        if (c != '0' && c != '1') fail(ErrorCode::ParseError, "splitting bit strings must be binary");
        if (c == '1') m |= Mod2Vector{1} << i;
      }
      out.push_back(m);
    }
  };
  read(j["V1"], s.v1);
  read(j["V2"], s.v2);
  s.genus = j.contains("genus") ? j["genus"].get<int>() : width / 2;
  if (width >= 0 && width != 2 * s.genus) fail(ErrorCode::ParseError, "splitting vector length disagrees with genus");
  return s;
}

bool CatalogReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed && !c.informational) return false;
  return true;
}

std::string CatalogReport::to_json() const {
  nlohmann::ordered_json j;
  j["genus"] = genus;
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json x;
    x["subject"] = c.subject;
    x["check"] = c.check;
    x["passed"] = c.passed;
    x["informational"] = c.informational;
    x["detail"] = c.detail;
    arr.push_back(x);
  }
  j["checks"] = arr;
  nlohmann::ordered_json lv = nlohmann::ordered_json::object();
  for (const auto& [name, level] : levels) lv[name] = std::string(torelli_level_name(level));
  j["levels"] = lv;
  return j.dump(2);
}

CatalogReport validate_catalog(const GeneratorCatalog& catalog) {
  CatalogReport report;
  report.genus = catalog.genus();
  auto add = [&](std::string subject, std::string check, bool passed, std::string detail = {}, bool info = false) {
    report.checks.push_back({std::move(subject), std::move(check), passed, info, std::move(detail)});
  };
  const auto& entries = catalog.entries();
  std::vector<std::optional<MappingClass>> classes(entries.size());

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.inverse.empty()) {
      add(e.name, "inverse", false, "no inverse declared");
    } else if (auto k = catalog.find(e.inverse); !k) {
      add(e.name, "inverse", false, "inverse '" + e.inverse + "' is not in the catalog");
    } else if (entries[*k].inverse != e.name) {
      add(e.name, "inverse", false, "inverse declarations are not mutual");
    } else {
      bool ok = validate_inverse_pair(e.map, entries[*k].map);
      add(e.name, "inverse", ok, ok ? "" : "composites are not the identity");
    }
    try {
      classes[i] = validate_mapping_class(e.map);
      add(e.name, "relator", true);
    } catch (const Error& err) {
      add(e.name, "relator", false, std::string(error_code_name(err.code())) + ": " + err.what());
      continue;
    }
    const MappingClass& m = *classes[i];
    report.levels.emplace_back(e.name, torelli_level(m));
    if (e.curve) {
      bool ok = m.homology == transvection(*e.curve);
      add(e.name, "curve-transvection", ok, ok ? "" : "homology action differs from the declared transvection");
    }
  }

  // Relations between twists about nonseparating declared curves, one
  // representative per inverse pair. Null-homologous curves act trivially on
  // homology, so neither relation says anything there.
  std::vector<std::size_t> twists;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].curve || !classes[i]) continue;
    if (std::all_of(entries[i].curve->begin(), entries[i].curve->end(), [](const Integer& x) { return x == 0; })) continue;
    auto k = catalog.find(entries[i].inverse);
    if (k && *k < i) continue;
    twists.push_back(i);
  }
  for (std::size_t x = 0; x < twists.size(); ++x)
    for (std::size_t y = x + 1; y < twists.size(); ++y) {
      const auto& e = entries[twists[x]];
      const auto& f = entries[twists[y]];
      const IntMatrix& me = classes[twists[x]]->homology;
      const IntMatrix& mf = classes[twists[y]]->homology;
      Integer k = intersection(*e.curve, *f.curve);
      std::string subject = e.name + "," + f.name;
      if (abs(k) == 1) {
        bool hom = me * mf * me == mf * me * mf;
        add(subject, "braid-homology", hom);
        EndoMap lhs = e.map.then(f.map).then(e.map);
        EndoMap rhs = f.map.then(e.map).then(f.map);
        bool endo = conjugator(lhs, rhs).has_value();
        add(subject, "braid", endo, endo ? "" : "braid relation fails up to inner automorphisms");
      } else if (k == 0) {
        bool hom = me * mf == mf * me;
        add(subject, "commute-homology", hom);
        bool endo = conjugator(e.map.then(f.map), f.map.then(e.map)).has_value();
        // Disjointness is not implied by zero algebraic intersection, so this is reported only.
        add(subject, "commute", endo, endo ? "" : "curves may intersect geometrically", true);
      }
    }
  return report;
}

std::vector<std::string> torelli_generators(const GeneratorCatalog& catalog) {
  std::vector<std::string> out;
  for (const auto& e : catalog.entries())
    if (torelli_level(e.map.abelianization()) != TorelliLevel::None) out.push_back(e.name);
  return out;
}

std::vector<std::string> separating_generators(const GeneratorCatalog& catalog) {
  std::vector<std::string> out;
  for (const auto& e : catalog.entries()) {
    if (!e.curve) continue;
    bool zero = std::all_of(e.curve->begin(), e.curve->end(), [](const Integer& x) { return x == 0; });
    if (zero) out.push_back(e.name);
  }
  return out;
}

}  // namespace prym
