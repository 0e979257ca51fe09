#pragma once

#include <memory>
#include <vector>

#include "liegsb/words.hpp"

namespace liegsb {

// w is an associative Lyndon-Shirshov word iff w > vu for every proper
// split w = uv.  Degree-1 words qualify vacuously.
bool is_alsw(const Word& w);

// The unique factorization c = c1 c2 ... cn into ALSWs with
// c1 <= c2 <= ... <= cn in the lex order (empty word greatest).  Computed
// greedily from the right by stripping the longest ALSW suffix.
std::vector<Word> alsw_factorization(const Word& c);

// A fully parenthesized non-associative word.  Deep value semantics; trees
// here never exceed a few dozen nodes.
class BracketTree {
 public:
  explicit BracketTree(Letter l) : letter_(l) {}
  BracketTree(BracketTree left, BracketTree right)
      : left_(std::make_unique<BracketTree>(std::move(left))),
        right_(std::make_unique<BracketTree>(std::move(right))) {}

  BracketTree(const BracketTree& o) { *this = o; }
  BracketTree& operator=(const BracketTree& o);
  BracketTree(BracketTree&&) = default;
  BracketTree& operator=(BracketTree&&) = default;

  bool is_leaf() const { return !left_; }
  Letter letter() const { return letter_; }
  const BracketTree& left() const { return *left_; }
  const BracketTree& right() const { return *right_; }
  BracketTree* mutable_left() { return left_.get(); }
  BracketTree* mutable_right() { return right_.get(); }

  Word carrier() const;
  size_t degree() const;

  friend bool operator==(const BracketTree& a, const BracketTree& b);

 private:
  Letter letter_ = 0;
  std::unique_ptr<BracketTree> left_, right_;
};

std::string bracket_str(const BracketTree& t, const Alphabet& a);

// The canonical NLSW bracketing [w] of an ALSW w: a leaf in degree 1,
// otherwise [ [u][v] ] with v the longest proper ALSW suffix.
BracketTree standard_bracketing(const Word& w);

// Shirshov's special bracketing [w]_u of w = aub relative to the ALSW
// factor u.  `designated` points at the [u] subtree inside `tree`; this is
// the node a relation gets substituted into when forming special normal
// S-words.
struct SpecialBracketing {
  std::unique_ptr<BracketTree> tree;
  const BracketTree* designated;
};

SpecialBracketing special_bracketing(const Word& a, const Word& u, const Word& b);

// All ALSWs of degree 1..max_deg over letters {0, ..., num_letters-1},
// sorted deg-lex ascending.
std::vector<Word> alsw_list(size_t num_letters, size_t max_deg);

// Dimension of the degree-d component of the free Lie algebra on q
// generators: W(q,d) = (1/d) sum_{e|d} mu(e) q^{d/e}.
long long witt_dimension(long long q, long long d);

}  // namespace liegsb
