#include "liegsb/lyndon.hpp"

#include <algorithm>

#include "liegsb/coeff.hpp"

namespace liegsb {

bool is_alsw(const Word& w) {
  if (w.empty()) throw PreconditionError("is_alsw: empty word");
  // Compare against every proper rotation; equal length makes deg-lex plain
  // letter-by-letter comparison.
  for (size_t i = 1; i < w.size(); ++i) {
    Word rot = w.substr(i) + w.substr(0, i);
    if (w <= rot) return false;
  }
  return true;
}

std::vector<Word> alsw_factorization(const Word& c) {
  if (c.empty()) throw PreconditionError("alsw_factorization: empty word");
  std::vector<Word> factors;
  Word rest = c;
  while (!rest.empty()) {
    // Longest ALSW suffix of what is left; this is the greatest (and last)
    // factor of the remaining prefix.
    size_t best = 1;
    for (size_t len = rest.size(); len >= 1; --len) {
      if (is_alsw(rest.substr(rest.size() - len))) {
        best = len;
        break;
      }
    }
    factors.push_back(rest.substr(rest.size() - best));
    rest.resize(rest.size() - best);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

BracketTree& BracketTree::operator=(const BracketTree& o) {
  if (this == &o) return *this;
  letter_ = o.letter_;
  left_ = o.left_ ? std::make_unique<BracketTree>(*o.left_) : nullptr;
  right_ = o.right_ ? std::make_unique<BracketTree>(*o.right_) : nullptr;
  return *this;
}

Word BracketTree::carrier() const {
  if (is_leaf()) return Word(1, static_cast<char>(letter_));
  return left().carrier() + right().carrier();
}

size_t BracketTree::degree() const {
  if (is_leaf()) return 1;
  return left().degree() + right().degree();
}

bool operator==(const BracketTree& a, const BracketTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.letter_ == b.letter_;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

std::string bracket_str(const BracketTree& t, const Alphabet& a) {
  if (t.is_leaf()) return a.name(t.letter());
  return "[" + bracket_str(t.left(), a) + ", " + bracket_str(t.right(), a) + "]";
}

BracketTree standard_bracketing(const Word& w) {
  if (!is_alsw(w)) throw PreconditionError("standard_bracketing: not an ALSW");
  if (w.size() == 1) return BracketTree(static_cast<Letter>(static_cast<unsigned char>(w[0])));
  for (size_t i = 1; i < w.size(); ++i) {
    if (is_alsw(w.substr(i)))
      return BracketTree(standard_bracketing(w.substr(0, i)), standard_bracketing(w.substr(i)));
  }
  throw Error("standard_bracketing: no ALSW suffix (unreachable)");
}

namespace {

// Deepest node whose carrier starts at `start` and covers at least
// `min_len` letters.  Nodes starting at the same position are nested, so
// the last hit on the descent is the deepest.
BracketTree* find_designated(BracketTree* node, size_t node_start, size_t start, size_t min_len,
                             size_t* found_len) {
  BracketTree* found = nullptr;
  while (node) {
    size_t len = node->degree();
    if (node_start == start && len >= min_len) {
      found = node;
      *found_len = len;
    }
    if (node->is_leaf()) break;
    size_t left_len = node->left().degree();
    if (start < node_start + left_len) {
      node = node->mutable_left();
    } else {
      node_start += left_len;
      node = node->mutable_right();
    }
  }
  return found;
}

}  // namespace

SpecialBracketing special_bracketing(const Word& a, const Word& u, const Word& b) {
  Word w = a + u + b;
  if (!is_alsw(u)) throw PreconditionError("special_bracketing: u is not an ALSW");
  if (!is_alsw(w)) throw PreconditionError("special_bracketing: aub is not an ALSW");

  auto tree = std::make_unique<BracketTree>(standard_bracketing(w));
  size_t found_len = 0;
  BracketTree* spot = find_designated(tree.get(), 0, a.size(), u.size(), &found_len);
  if (!spot)
    throw PreconditionError("special_bracketing: u does not occur as the designated factor");

  // carrier(spot) = u c with c a prefix of b; replace [uc] by the
  // left-normed tree [...[[u][c1]]...[cn]] over the ALSW factorization of c.
  Word c = w.substr(a.size() + u.size(), found_len - u.size());
  BracketTree repl = standard_bracketing(u);
  size_t chain = 0;
  if (!c.empty()) {
    for (const Word& ci : alsw_factorization(c)) {
      repl = BracketTree(std::move(repl), standard_bracketing(ci));
      ++chain;
    }
  }
  *spot = std::move(repl);

  const BracketTree* designated = spot;
  for (size_t i = 0; i < chain; ++i) designated = &designated->left();
  return SpecialBracketing{std::move(tree), designated};
}

namespace {

// Duval's generation of Lyndon words, mirrored: ALSWs are Lyndon words
// under the reversed letter order, so generate over the mirror alphabet
// and map each letter l to q-1-l.
void duval_generate(size_t q, size_t max_deg, std::vector<Word>& out) {
  if (q == 0 || max_deg == 0) return;
  std::string w(1, '\0');
  while (!w.empty()) {
    Word mapped;
    for (char c : w)
      mapped.push_back(static_cast<char>(q - 1 - static_cast<unsigned char>(c)));
    out.push_back(mapped);
    std::string x;
    for (size_t i = 0; i < max_deg; ++i) x.push_back(w[i % w.size()]);
    while (!x.empty() && static_cast<unsigned char>(x.back()) == q - 1) x.pop_back();
    if (!x.empty()) x.back() = static_cast<char>(static_cast<unsigned char>(x.back()) + 1);
    w = x;
  }
}

}  // namespace

std::vector<Word> alsw_list(size_t num_letters, size_t max_deg) {
  // Desk-scale guard: refuse enumerations that could not be used anyway.
  long long expected = 0;
  for (size_t d = 1; d <= max_deg; ++d) {
    expected = detail::checked_add(expected,
                                   witt_dimension(static_cast<long long>(num_letters),
                                                  static_cast<long long>(d)));
    if (expected > 20'000'000)
      throw PreconditionError("alsw_list: enumeration too large (" +
                              std::to_string(num_letters) + " letters, degree " +
                              std::to_string(max_deg) + ")");
  }
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(expected));
  duval_generate(num_letters, max_deg, out);
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

long long witt_dimension(long long q, long long d) {
  if (d <= 0 || q <= 0) throw PreconditionError("witt_dimension: need q,d >= 1");
  auto mobius = [](long long n) -> long long {
    long long mu = 1;
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
      }
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  long long sum = 0;
  for (long long e = 1; e <= d; ++e) {
    if (d % e) continue;
    long long mu = mobius(e);
    if (mu == 0) continue;
    long long pw = 1;
    for (long long i = 0; i < d / e; ++i) pw = detail::checked_mul(pw, q);
    sum = detail::checked_add(sum, mu * pw);
  }
  return sum / d;
}

}  // namespace liegsb
