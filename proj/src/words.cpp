#include "liegsb/words.hpp"

#include <algorithm>

namespace liegsb {

Ordering compare_lex(const Word& u, const Word& v) {
  size_t n = std::min(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    auto a = static_cast<unsigned char>(u[i]);
    auto b = static_cast<unsigned char>(v[i]);
    if (a != b) return a > b ? Ordering::Greater : Ordering::Less;
  }
  if (u.size() == v.size()) return Ordering::Equal;
  // Proper prefixes are greater: 1 > t for every nonempty t.
  return u.size() < v.size() ? Ordering::Greater : Ordering::Less;
}

Ordering compare_deglex(const Word& u, const Word& v) {
  if (u.size() != v.size())
    return u.size() > v.size() ? Ordering::Greater : Ordering::Less;
  return compare_lex(u, v);
}

bool lex_less(const Word& u, const Word& v) { return compare_lex(u, v) == Ordering::Less; }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 100) throw PreconditionError("alphabet too large (max 100 letters)");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw PreconditionError("empty letter name");
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
      throw PreconditionError("duplicate letter name: " + names_[i]);
  }
}

const std::string& Alphabet::name(Letter l) const {
  if (l >= names_.size()) throw PreconditionError("letter out of range");
  return names_[l];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view name) const {
  auto l = find(name);
  if (!l) throw PreconditionError("unknown letter: " + std::string(name));
  return *l;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    // Longest declared name matching at position i.
    size_t best = 0;
    Letter letter = 0;
    for (size_t l = 0; l < names_.size(); ++l) {
      const std::string& nm = names_[l];
      if (nm.size() > best && text.compare(i, nm.size(), nm) == 0) {
        best = nm.size();
        letter = static_cast<Letter>(l);
      }
    }
    if (best == 0)
      throw PreconditionError("unknown letter at '" + std::string(text.substr(i)) + "'");
    w.push_back(static_cast<char>(letter));
    i += best;
  }
  return w;
}

std::string Alphabet::str(const Word& w, std::string_view sep) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += name(static_cast<Letter>(static_cast<unsigned char>(w[i])));
  }
  return out;
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](char c) {
    return static_cast<unsigned char>(c) < names_.size();
  });
}

void Alphabet::require(const Word& w) const {
  if (!contains(w)) throw PreconditionError("word uses letters outside this alphabet");
}

}  // namespace liegsb
