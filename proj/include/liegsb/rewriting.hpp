#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liegsb/words.hpp"

namespace liegsb {

// A semigroup presentation sgp< alphabet | u_i = v_i >.  Rule words are
// nonempty (no identity-touching rules).
struct SgpPresentation {
  Alphabet alphabet;
  std::vector<std::pair<Word, Word>> rules;
};

struct RewriteRule {
  Word lhs, rhs;  // lhs > rhs in deg-lex
};

// A terminating string rewriting system: every rule is strictly decreasing
// under deg-lex.  `complete` is set by knuth_bendix when the system is
// confluent; normal forms are canonical only in that case.
class StringRS {
 public:
  StringRS() = default;
  explicit StringRS(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool complete() const { return complete_; }
  void mark_complete(bool v) { complete_ = v; }

  void add_rule(Word lhs, Word rhs);  // validates orientation and nonemptiness

  // One leftmost rewrite step (ties broken by rule order); nullopt when w
  // is irreducible.
  std::optional<Word> rewrite_once(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  bool complete_ = false;
};

// Orients each pair greater -> smaller under deg-lex; trivial pairs
// (u = v) and exact duplicates are dropped.
StringRS orient(const SgpPresentation& p);

// Exhaustive leftmost rewriting to an irreducible word.
Word sgp_normal_form(Word u, const StringRS& rs);

struct CriticalPair {
  Word superword;
  Word left, right;  // the two one-step reducts
};

// All critical pairs of the current rules: proper suffix/prefix overlaps
// and proper factor inclusions, in rule order.
std::vector<CriticalPair> critical_pairs(const StringRS& rs);

// True if every critical pair joins (both reducts share a normal form).
bool locally_confluent(const StringRS& rs);

struct KBResult {
  StringRS system;
  bool completed;
  std::vector<std::pair<Word, Word>> pending;  // surviving pairs if bounds hit
  size_t iterations;
};

// Standard critical-pair completion for string rewriting under deg-lex.
// max_len bounds the length of any rule side; max_iter bounds processed
// equations.  Bound exhaustion comes back as completed = false with the
// surviving pairs, never as silent success.
KBResult knuth_bendix(const StringRS& rs, size_t max_len, size_t max_iter);

// All pairs (u, v) with u > v in deg-lex, both of length <= max_len and
// with the same normal form: the congruence generated by the rules,
// truncated by length.  Requires a complete system.
std::vector<std::pair<Word, Word>> congruence_pairs(const StringRS& rs, size_t max_len);

// All words of length 1..max_len over the alphabet, deg-lex ascending.
std::vector<Word> all_words(const Alphabet& a, size_t max_len);

}  // namespace liegsb
