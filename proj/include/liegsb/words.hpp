#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liegsb/errors.hpp"

namespace liegsb {

// A letter is an index into an Alphabet; a word is a sequence of letters
// packed into a std::string (small words stay inline).  The empty word is
// the monoid identity.  Letter values are capped well below CHAR_MAX so
// plain byte comparison agrees with the alphabet order.
using Letter = unsigned char;
using Word = std::string;

inline Word word_of(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<char>(l));
  return w;
}

enum class Ordering { Less, Equal, Greater };

// The lex order used throughout: comparing a word against one of its
// proper extensions makes the *shorter* word greater (the empty word is
// greater than every nonempty word).  Total on the free monoid.
Ordering compare_lex(const Word& u, const Word& v);

// Degree first, then the lex order above.  On equal lengths this is plain
// left-to-right letter comparison.
Ordering compare_deglex(const Word& u, const Word& v);

inline bool deglex_less(const Word& u, const Word& v) {
  return u.size() != v.size() ? u.size() < v.size() : u < v;
}
inline bool deglex_greater(const Word& u, const Word& v) { return deglex_less(v, u); }

// Strict weak order for containers keyed by words.
struct DegLexLess {
  bool operator()(const Word& u, const Word& v) const { return deglex_less(u, v); }
};

bool lex_less(const Word& u, const Word& v);
inline bool lex_greater(const Word& u, const Word& v) { return lex_less(v, u); }

// An ordered finite generator set.  Position in the list is the total
// order: later names are greater.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const;
  std::optional<Letter> find(std::string_view name) const;
  Letter at(std::string_view name) const;

  // Splits text into letters: whitespace separates tokens, and each token
  // is cut greedily into the longest declared letter names.
  Word parse_word(std::string_view text) const;

  std::string str(const Word& w, std::string_view sep = " ") const;

  bool contains(const Word& w) const;
  void require(const Word& w) const;  // throws PreconditionError on foreign letters

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Letter, std::less<>> index_;
};

}  // namespace liegsb
