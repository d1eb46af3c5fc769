#include <algorithm>
#include <string>
#include <vector>

#include "prym/error.hpp"
#include "prym/surface.hpp"

namespace prym {

namespace {

constexpr int kGenus = 3;
constexpr int kRank = 2 * kGenus;

int a(int i) { return 2 * (i - 1); }
int b(int i) { return 2 * (i - 1) + 1; }

Word gen(int index) { return Word::generator(index); }

EndoMap with_images(const std::vector<std::pair<int, Word>>& changes) {
  std::vector<Word> images = EndoMap::identity(kRank).images();
  for (const auto& [i, img] : changes) images[static_cast<std::size_t>(i)] = img;
  return EndoMap(kRank, std::move(images));
}

IntVector unit(std::initializer_list<int> generators) {
  IntVector v(kRank);
  for (int i : generators) v[static_cast<std::size_t>(i)] += 1;
  return v;
}

// Twist about the curve a_i a_{i+1}, class a_i + a_{i+1}.
EndoMap twist_c(int i) {
  const int j = i + 1;
  Word ai = gen(a(i)), aj = gen(a(j)), bi = gen(b(i)), bj = gen(b(j));
  return with_images({{a(i), aj.inverse() * ai * aj},
                      {b(i), aj.inverse() * ai.inverse() * aj * ai * bi * ai * aj},
                      {a(j), aj.inverse() * ai.inverse() * aj * ai * aj},
                      {b(j), bj * ai * aj}});
}

EndoMap twist_c_inverse(int i) {
  const int j = i + 1;
  Word ai = gen(a(i)), aj = gen(a(j)), bi = gen(b(i)), bj = gen(b(j));
  Word c = ai * aj;
  return with_images({{a(i), ai.conjugated_by(c)},
                      {b(i), (ai.inverse() * aj.inverse() * bi).conjugated_by(c)},
                      {a(j), aj.conjugated_by(c)},
                      {b(j), (aj.inverse() * ai.inverse() * bj).conjugated_by(c)}});
}

// Partial conjugation of the handles first..last by the product of their
// commutators: the twist about the curve cutting those handles off.
EndoMap separating_twist(int first, int last, bool inverse) {
  Word gamma;
  for (int i = first; i <= last; ++i) gamma = gamma * gen(a(i)) * gen(b(i)) * gen(a(i)).inverse() * gen(b(i)).inverse();
  Word h = inverse ? gamma : gamma.inverse();
  std::vector<std::pair<int, Word>> changes;
  for (int i = first; i <= last; ++i) {
    changes.emplace_back(a(i), gen(a(i)).conjugated_by(h));
    changes.emplace_back(b(i), gen(b(i)).conjugated_by(h));
  }
  return with_images(changes);
}

std::vector<std::string> repeat(const std::vector<std::string>& block, int times) {
  std::vector<std::string> out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::vector<std::string> inverse_word(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    const std::string& n = *it;
    const std::string suffix = "^-1";
    if (n.size() > suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0)
      out.push_back(n.substr(0, n.size() - suffix.size()));
    else
      out.push_back(n + suffix);
  }
  return out;
}

class Builder {
 public:
  void pair(const std::string& name, EndoMap f, EndoMap f_inv, std::optional<IntVector> curve) {
    // The inverse of a twist about a nonseparating curve is a left twist, so
    // only null-homologous curve declarations carry over.
    std::optional<IntVector> inv_curve;
    if (curve && std::all_of(curve->begin(), curve->end(), [](const Integer& x) { return x == 0; })) inv_curve = curve;
    entries_.push_back({name, name + "^-1", curve, std::move(f)});
    entries_.push_back({name + "^-1", name, inv_curve, std::move(f_inv)});
  }

  // Entry with the composite of existing names, and its formal inverse.
  void derived(const std::string& name, const std::vector<std::string>& word, std::optional<IntVector> curve) {
    GeneratorCatalog partial(kGenus, entries_);
    pair(name, compose(word, partial), compose(inverse_word(word), partial), std::move(curve));
  }

  // h X h^-1 as a mapping class, for a word h over existing names.
  void conjugate(const std::string& name, const std::string& x, const std::string& h_names) {
    const std::vector<std::string> h = split_names(h_names);
    std::vector<std::string> word = inverse_word(h);
    word.push_back(x);
    word.insert(word.end(), h.begin(), h.end());
    std::optional<IntVector> curve;
    for (const auto& e : entries_)
      if (e.name == x && e.curve) curve = IntVector(kRank);  // only null-homologous curves are conjugated
    derived(name, word, curve);
  }

  GeneratorCatalog build() const { return GeneratorCatalog(kGenus, entries_); }

 private:
  std::vector<CatalogEntry> entries_;
};

GeneratorCatalog build_default() {
  Builder bld;
  for (int i = 1; i <= kGenus; ++i) {
    Word ai = gen(a(i)), bi = gen(b(i));
    bld.pair("Ta" + std::to_string(i), with_images({{b(i), bi * ai}}), with_images({{b(i), bi * ai.inverse()}}),
             unit({a(i)}));
    bld.pair("Tb" + std::to_string(i), with_images({{a(i), ai * bi.inverse()}}), with_images({{a(i), ai * bi}}),
             unit({b(i)}));
  }
  for (int i = 1; i < kGenus; ++i)
    bld.pair("Tc" + std::to_string(i), twist_c(i), twist_c_inverse(i), unit({a(i), a(i + 1)}));

  const IntVector null(kRank);
  bld.pair("S1", separating_twist(1, 1, false), separating_twist(1, 1, true), null);
  bld.pair("S2", separating_twist(2, 2, false), separating_twist(2, 2, true), null);
  bld.pair("S3", separating_twist(3, 3, false), separating_twist(3, 3, true), null);
  bld.pair("S12", separating_twist(1, 2, false), separating_twist(1, 2, true), null);
  bld.pair("S23", separating_twist(2, 3, false), separating_twist(2, 3, true), null);

  // Bounding pair maps from the 3-chain relation: the chain a_i, b_i, c_i has
  // one boundary curve isotopic to a_{i+1}.
  bld.derived("B1", [] {
    auto v = repeat({"Tc1^-1", "Tb1^-1", "Ta1^-1"}, 4);
    v.insert(v.end(), {"Ta2", "Ta2"});
    return v;
  }(), std::nullopt);
  bld.derived("B2", [] {
    auto v = repeat({"Tc2^-1", "Tb2^-1", "Ta2^-1"}, 4);
    v.insert(v.end(), {"Ta3", "Ta3"});
    return v;
  }(), std::nullopt);

  // Conjugates by products along the chain a1, b1, c1, b2, c2, b3. They make
  // the Prym images of the separating twists alone rich on every cover.
  const std::vector<std::pair<const char*, const char*>> separating = {
      {"S2", "Tc1"},
      {"S2", "Tc2 Tb2 Tc1 Tb1"},
      {"S1", "Tc1 Tb2 Tc2 Tb3"},
      {"S2", "Tc2"},
      {"S1", "Tc1 Tb1"},
      {"S2", "Tc1 Tb2 Tc2 Tb3"},
      {"S2", "Tc1 Tb1"},
      {"S3", "Tc2"},
      {"S1", "Tb1 Tc1 Tb2 Tc2 Tb3"},
      {"S2", "Tc2 Tb2"},
      {"S2", "Tc2 Tb3"},
      {"S2", "Tc1 Tb1 Ta1"},
      {"S3", "Tc2 Tb2 Tc1 Tb1"},
      {"S2", "Ta1 Tb1 Tc1 Tb2 Tc2"},
      {"S3", "Tc2 Tb2 Tc1"},
      {"S1", "Ta1 Tb1 Tc1 Tb2"},
      {"S2", "Tb3 Tc2 Tb2 Tc1 Tb1 Ta2"},
      {"S2", "Tb3^-1 Tc2^-1 Tb2^-1 Tc1^-1 Tb1^-1 Ta1^-1 Tb2"},
      {"S2", "Tb1 Tc1 Tb2 Tc2 Tb3 Tb1"},
      {"S2", "Tc2^-1 Tb2^-1 Tc1^-1 Tb3"},
      {"S2", "Tb3 Tc2 Tb2 Tc1 Tb1 Ta1 Tb2"},
      {"S2", "Tc2^-1 Tb2^-1 Tc1^-1 Tb1^-1 Ta1^-1 Tb3"},
  };
  for (std::size_t k = 0; k < separating.size(); ++k)
    bld.conjugate("K" + std::to_string(k + 1), separating[k].first, separating[k].second);

  const std::vector<std::pair<const char*, const char*>> bounding = {
      {"B1", "Tc2"}, {"B2", "Tc1"}, {"B1", "Tb2 Tc2 Tb3"}, {"B2", "Tb1 Tc1 Ta1"}};
  for (std::size_t k = 0; k < bounding.size(); ++k)
    bld.conjugate("B" + std::to_string(k + 3), bounding[k].first, bounding[k].second);

  return bld.build();
}

}  // namespace

const GeneratorCatalog& default_catalog() {
  static const GeneratorCatalog catalog = build_default();
  return catalog;
}

}  // namespace prym
