#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prym/exactlin.hpp"

namespace prym {

/// Letters are +(i+1) for generator i and -(i+1) for its inverse.
/// Generator 2k is a_{k+1}, generator 2k+1 is b_{k+1}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);  // freely reduces

  static Word generator(int index) { return Word(std::vector<int>{index + 1}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(long k) const;
  Word cyclic_core() const;                 // cyclically reduced part
  Word conjugated_by(const Word& h) const;  // h w h^-1

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v) { return u.letters_ == v.letters_; }
  friend bool operator<(const Word& u, const Word& v) { return u.letters_ < v.letters_; }

 private:
  friend Word reduce(const std::vector<int>& letters, bool cyclic);
  std::vector<int> letters_;
};

/// Free reduction, and cyclic reduction when requested.
Word reduce(const std::vector<int>& letters, bool cyclic = false);

/// w = prefix * core * prefix^-1 with core cyclically reduced.
void cyclic_decomposition(const Word& w, Word& prefix, Word& core);

/// True when u is a cyclic rotation of v (both taken literally).
bool is_cyclic_rotation(const Word& u, const Word& v);

std::string generator_token(int letter);
int parse_token(std::string_view token, int rank);
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& w);

IntVector abelianization_vector(const Word& w, int rank);

class EndoMap {
 public:
  EndoMap() = default;
  EndoMap(int rank, std::vector<Word> images);

  static EndoMap identity(int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const { return images_[static_cast<std::size_t>(generator)]; }

  Word apply(const Word& w) const;
  /// The composite that applies *this first and then g: x -> g(this(x)).
  EndoMap then(const EndoMap& g) const;
  /// Column j is the abelianized image of generator j.
  IntMatrix abelianization() const;
  std::size_t total_length() const;

  friend bool operator==(const EndoMap& f, const EndoMap& g) {
    return f.rank_ == g.rank_ && f.images_ == g.images_;
  }

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

/// x -> h x h^-1.
EndoMap inner_automorphism(int rank, const Word& h);

bool validate_inverse_pair(const EndoMap& f, const EndoMap& f_inv);

/// Returns h with f(x) = h g(x) h^-1 for every generator x, if one exists.
/// Only conjugators built from the cyclic reduction of the first nontrivial
/// image and bounded powers of its root are searched.
std::optional<Word> conjugator(const EndoMap& f, const EndoMap& g);

struct CatalogEntry {
  std::string name;
  std::string inverse;             // empty when not declared
  std::optional<IntVector> curve;  // homology class of the twist curve
  EndoMap map;
};

class GeneratorCatalog {
 public:
  GeneratorCatalog() = default;
  GeneratorCatalog(int genus, std::vector<CatalogEntry> entries);

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<std::size_t> find(std::string_view name) const;
  const CatalogEntry& at(std::string_view name) const;  // INVALID_ARGUMENT if unknown
  std::vector<std::string> names() const;

  friend bool operator==(const GeneratorCatalog& a, const GeneratorCatalog& b);

 private:
  int genus_ = 0;
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Composite of catalog generators, leftmost applied first.
EndoMap compose(const std::vector<std::string>& names, const GeneratorCatalog& catalog);

/// Splits a whitespace-separated list of names.
std::vector<std::string> split_names(std::string_view text);

GeneratorCatalog parse_catalog(std::string_view text);
std::string format_catalog(const GeneratorCatalog& catalog);
GeneratorCatalog load_catalog(const std::string& path);

}  // namespace prym
