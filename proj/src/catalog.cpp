#include <fstream>
#include <sstream>

#include "prym/error.hpp"
#include "prym/freegrp.hpp"

namespace prym {

GeneratorCatalog::GeneratorCatalog(int genus, std::vector<CatalogEntry> entries)
    : genus_(genus), entries_(std::move(entries)) {
  if (genus_ < 1) fail(ErrorCode::InvalidArgument, "catalog genus must be positive");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.name.empty()) fail(ErrorCode::InvalidArgument, "catalog entry without a name");
    if (e.map.rank() != rank()) fail(ErrorCode::InvalidArgument, "generator '" + e.name + "' has the wrong rank");
    if (e.curve && e.curve->size() != static_cast<std::size_t>(rank()))
      fail(ErrorCode::InvalidArgument, "generator '" + e.name + "' curve has the wrong length");
    if (!index_.emplace(e.name, i).second) fail(ErrorCode::InvalidArgument, "duplicate generator '" + e.name + "'");
  }
}

std::optional<std::size_t> GeneratorCatalog::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const CatalogEntry& GeneratorCatalog::at(std::string_view name) const {
  auto i = find(name);
  if (!i) fail(ErrorCode::InvalidArgument, "unknown generator '" + std::string(name) + "'");
  return entries_[*i];
}

std::vector<std::string> GeneratorCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

bool operator==(const GeneratorCatalog& a, const GeneratorCatalog& b) {
  if (a.genus_ != b.genus_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.name != y.name || x.inverse != y.inverse || x.curve != y.curve || !(x.map == y.map)) return false;
  }
  return true;
}

EndoMap compose(const std::vector<std::string>& names, const GeneratorCatalog& catalog) {
  EndoMap h = EndoMap::identity(catalog.rank());
  for (const auto& n : names) h = h.then(catalog.at(n).map);
  return h;
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "catalog line " + std::to_string(line) + ": " + what);
}

struct PendingEntry {
  CatalogEntry entry;
  std::vector<std::optional<Word>> images;
  std::size_t line = 0;
};

}  // namespace

GeneratorCatalog parse_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int genus = 0;
  std::vector<PendingEntry> pending;

  auto finish = [&](PendingEntry& p) {
    for (std::size_t i = 0; i < p.images.size(); ++i)
      if (!p.images[i])
        parse_fail(p.line, "generator '" + p.entry.name + "' lacks an image for " + generator_token(static_cast<int>(i) + 1));
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "genus") {
      if (genus != 0) parse_fail(line_no, "genus declared twice");
      if (!(ls >> genus) || genus < 1) parse_fail(line_no, "bad genus");
      std::string extra;
      if (ls >> extra) parse_fail(line_no, "trailing tokens after genus");
    } else if (key == "gen") {
      if (genus == 0) parse_fail(line_no, "gen before genus");
      if (!pending.empty()) finish(pending.back());
      PendingEntry p;
      p.line = line_no;
      if (!(ls >> p.entry.name)) parse_fail(line_no, "gen without a name");
      p.images.resize(static_cast<std::size_t>(2 * genus));
      std::string field;
      while (ls >> field) {
        if (field == "inverse") {
          if (!(ls >> p.entry.inverse)) parse_fail(line_no, "inverse without a name");
        } else if (field == "curve") {
          IntVector v;
          for (int i = 0; i < 2 * genus; ++i) {
            std::string num;
            if (!(ls >> num)) parse_fail(line_no, "curve vector too short");
            Integer x;
            if (x.set_str(num, 10) != 0) parse_fail(line_no, "bad curve entry '" + num + "'");
            v.push_back(x);
          }
          p.entry.curve = std::move(v);
        } else {
          parse_fail(line_no, "unknown gen field '" + field + "'");
        }
      }
      pending.push_back(std::move(p));
    } else if (key == "image") {
      if (pending.empty()) parse_fail(line_no, "image before any gen");
      std::string tok, eq;
      if (!(ls >> tok >> eq) || eq != "=") parse_fail(line_no, "expected 'image <token> = <word>'");
      int letter = 0;
      try {
        letter = parse_token(tok, 2 * genus);
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
      if (letter < 0) parse_fail(line_no, "image target must be a positive generator");
      auto& slot = pending.back().images[static_cast<std::size_t>(letter - 1)];
      if (slot) parse_fail(line_no, "duplicate image for " + tok);
      std::vector<int> letters;
      std::string t;
      while (ls >> t) {
        try {
          letters.push_back(parse_token(t, 2 * genus));
        } catch (const Error& e) {
          parse_fail(line_no, e.what());
        }
      }
      Word w(letters);
      if (w.letters() != letters) parse_fail(line_no, "image word is not freely reduced");
      slot = std::move(w);
    } else {
      parse_fail(line_no, "unknown directive '" + key + "'");
    }
  }
  if (genus == 0) fail(ErrorCode::ParseError, "catalog has no genus line");
  if (!pending.empty()) finish(pending.back());

  std::vector<CatalogEntry> entries;
  for (auto& p : pending) {
    std::vector<Word> images;
    for (auto& w : p.images) images.push_back(std::move(*w));
    p.entry.map = EndoMap(2 * genus, std::move(images));
    entries.push_back(std::move(p.entry));
  }
  try {
    return GeneratorCatalog(genus, std::move(entries));
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

std::string format_catalog(const GeneratorCatalog& catalog) {
  std::ostringstream out;
  out << "genus " << catalog.genus() << "\n";
  for (const auto& e : catalog.entries()) {
    out << "\ngen " << e.name;
    if (!e.inverse.empty()) out << " inverse " << e.inverse;
    if (e.curve) {
      out << " curve";
      for (const auto& x : *e.curve) out << " " << x.get_str();
    }
    out << "\n";
    for (int i = 0; i < catalog.rank(); ++i) {
      out << "image " << generator_token(i + 1) << " =";
      const Word& w = e.map.image(i);
      if (!w.empty()) out << " " << format_word(w);
      out << "\n";
    }
  }
  return out.str();
}

GeneratorCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open catalog '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

}  // namespace prym
