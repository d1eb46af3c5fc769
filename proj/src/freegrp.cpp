#include "prym/freegrp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "prym/error.hpp"

namespace prym {

Word::Word(std::vector<int> letters) : letters_(reduce(letters).letters_) {}

Word reduce(const std::vector<int>& letters, bool cyclic) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  if (cyclic) {
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
      ++lo;
      --hi;
    }
    out = std::vector<int>(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::power(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::labs(k); ++i) out = out * base;
  return out;
}

Word Word::cyclic_core() const { return reduce(letters_, true); }

Word Word::conjugated_by(const Word& h) const { return h * *this * h.inverse(); }

Word operator*(const Word& u, const Word& v) {
  // Cancel across the junction only; both halves are already reduced.
  std::size_t cancel = 0;
  while (cancel < u.letters_.size() && cancel < v.letters_.size() &&
         u.letters_[u.letters_.size() - 1 - cancel] == -v.letters_[cancel])
    ++cancel;
  Word w;
  w.letters_.reserve(u.letters_.size() + v.letters_.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), u.letters_.begin(), u.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), v.letters_.end());
  return w;
}

void cyclic_decomposition(const Word& w, Word& prefix, Word& core) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  prefix = Word(std::vector<int>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(lo)));
  core = Word(std::vector<int>(l.begin() + static_cast<std::ptrdiff_t>(lo), l.begin() + static_cast<std::ptrdiff_t>(hi)));
}

namespace {

// Smallest r with u = rotation of v by r letters (u = v[r..] v[..r]), or -1.
long rotation_offset(const Word& u, const Word& v) {
  const auto& a = u.letters();
  const auto& b = v.letters();
  if (a.size() != b.size()) return -1;
  if (a.empty()) return 0;
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + r) % n];
    if (ok) return static_cast<long>(r);
  }
  return -1;
}

Word primitive_root(const Word& core) {
  const auto& l = core.letters();
  const std::size_t n = l.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = l[i] == l[i - d];
    if (periodic) return Word(std::vector<int>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(d)));
  }
  return core;
}

}  // namespace

bool is_cyclic_rotation(const Word& u, const Word& v) { return rotation_offset(u, v) >= 0; }

std::string generator_token(int letter) {
  int index = std::abs(letter) - 1;
  char c = (index % 2 == 0) ? 'a' : 'b';
  if (letter < 0) c = static_cast<char>(std::toupper(c));
  return std::string(1, c) + std::to_string(index / 2 + 1);
}

int parse_token(std::string_view token, int rank) {
  if (token.size() < 2) fail(ErrorCode::ParseError, "bad word token '" + std::string(token) + "'");
  char c = token[0];
  int parity;
  bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': parity = 0; break;
    case 'b': parity = 1; break;
    default: fail(ErrorCode::ParseError, "bad word token '" + std::string(token) + "'");
  }
  int handle = 0;
  for (char d : token.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(d))) fail(ErrorCode::ParseError, "bad word token '" + std::string(token) + "'");
    handle = handle * 10 + (d - '0');
    if (handle > 1000) break;
  }
  if (token[1] == '0' || handle < 1 || 2 * handle > rank)
    fail(ErrorCode::ParseError, "generator out of range '" + std::string(token) + "'");
  int letter = 2 * (handle - 1) + parity + 1;
  return inverse ? -letter : letter;
}

Word parse_word(std::string_view text, int rank) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) letters.push_back(parse_token(tok, rank));
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  for (int x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += generator_token(x);
  }
  return out;
}

IntVector abelianization_vector(const Word& w, int rank) {
  IntVector v(static_cast<std::size_t>(rank));
  for (int x : w.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(x) - 1);
    if (i >= v.size()) fail(ErrorCode::InvalidArgument, "letter outside the alphabet");
    v[i] += x > 0 ? 1 : -1;
  }
  return v;
}

EndoMap::EndoMap(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (rank_ < 0 || images_.size() != static_cast<std::size_t>(rank_))
    fail(ErrorCode::InvalidArgument, "endomorphism needs one image per generator");
  for (const auto& w : images_)
    for (int x : w.letters())
      if (std::abs(x) > rank_) fail(ErrorCode::InvalidArgument, "image uses a letter outside the alphabet");
}

EndoMap EndoMap::identity(int rank) {
  std::vector<Word> images;
  for (int i = 0; i < rank; ++i) images.push_back(Word::generator(i));
  return EndoMap(rank, std::move(images));
}

Word EndoMap::apply(const Word& w) const {
  std::vector<int> out;
  for (int x : w.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(x) - 1);
    if (i >= images_.size()) fail(ErrorCode::InvalidArgument, "rank mismatch in apply");
    const auto& img = images_[i].letters();
    if (x > 0)
      out.insert(out.end(), img.begin(), img.end());
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
  }
  return reduce(out);
}

EndoMap EndoMap::then(const EndoMap& g) const {
  if (g.rank_ != rank_) fail(ErrorCode::InvalidArgument, "rank mismatch in composition");
  std::vector<Word> images;
  images.reserve(images_.size());
  for (const auto& w : images_) images.push_back(g.apply(w));
  return EndoMap(rank_, std::move(images));
}

IntMatrix EndoMap::abelianization() const {
  std::vector<IntVector> cols;
  for (const auto& w : images_) cols.push_back(abelianization_vector(w, rank_));
  return IntMatrix::from_columns(cols, static_cast<std::size_t>(rank_));
}

std::size_t EndoMap::total_length() const {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.size();
  return n;
}

EndoMap inner_automorphism(int rank, const Word& h) {
  std::vector<Word> images;
  for (int i = 0; i < rank; ++i) images.push_back(Word::generator(i).conjugated_by(h));
  return EndoMap(rank, std::move(images));
}

bool validate_inverse_pair(const EndoMap& f, const EndoMap& f_inv) {
  if (f.rank() != f_inv.rank()) fail(ErrorCode::InvalidArgument, "rank mismatch in inverse check");
  EndoMap id = EndoMap::identity(f.rank());
  return f.then(f_inv) == id && f_inv.then(f) == id;
}

std::optional<Word> conjugator(const EndoMap& f, const EndoMap& g) {
  if (f.rank() != g.rank()) fail(ErrorCode::InvalidArgument, "rank mismatch in conjugator search");
  const int n = f.rank();
  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (!g.image(i).empty()) {
      pivot = i;
      break;
    }
  if (pivot < 0) return f == g ? std::optional<Word>(Word()) : std::nullopt;

  Word a, u_core, b, v_core;
  cyclic_decomposition(f.image(pivot), a, u_core);
  cyclic_decomposition(g.image(pivot), b, v_core);
  long r = rotation_offset(u_core, v_core);
  if (r < 0) return std::nullopt;
  Word c(std::vector<int>(v_core.letters().begin(), v_core.letters().begin() + r));
  Word h0 = a * c.inverse() * b.inverse();
  Word z = primitive_root(v_core).conjugated_by(b);

  auto matches = [&](const Word& h) {
    for (int i = 0; i < n; ++i)
      if (f.image(i) != g.image(i).conjugated_by(h)) return false;
    return true;
  };
  const long bound = static_cast<long>(f.total_length() + g.total_length()) + 2;
  Word up = h0, down = h0;
  Word z_inv = z.inverse();
  for (long k = 0; k <= bound; ++k) {
    if (matches(up)) return up;
    if (k > 0 && matches(down)) return down;
    up = up * z;
    down = down * z_inv;
  }
  return std::nullopt;
}

}  // namespace prym
