#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "liegsb/coeff.hpp"
#include "liegsb/lyndon.hpp"
#include "liegsb/words.hpp"

namespace liegsb {

// Finitely supported map Word -> coefficient in the free associative
// algebra.  Zero coefficients are never stored.
template <typename C>
struct AssocPoly {
  std::map<Word, C, DegLexLess> terms;

  bool zero() const { return terms.empty(); }

  void add(const Word& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  const std::pair<const Word, C>& leading() const {
    if (terms.empty()) throw PreconditionError("leading term of zero polynomial");
    return *terms.rbegin();
  }

  AssocPoly& operator+=(const AssocPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  AssocPoly& operator-=(const AssocPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }

  friend bool operator==(const AssocPoly& a, const AssocPoly& b) { return a.terms == b.terms; }
};

template <typename C>
AssocPoly<C> assoc_mul(const AssocPoly<C>& a, const AssocPoly<C>& b) {
  AssocPoly<C> r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add(wa + wb, ca * cb);
  return r;
}

// A Lie element in NLSW coordinates: finitely supported map ALSW ->
// coefficient.  Keys are ALSWs by construction everywhere in this library;
// the leading word is the deg-lex greatest key.
template <typename C>
struct LiePoly {
  std::map<Word, C, DegLexLess> terms;

  bool zero() const { return terms.empty(); }

  const Word& leading_word() const {
    if (terms.empty()) throw PreconditionError("leading word of zero polynomial");
    return terms.rbegin()->first;
  }
  const C& leading_coeff() const {
    if (terms.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return terms.rbegin()->second;
  }

  void add(const Word& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  LiePoly& operator+=(const LiePoly& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  LiePoly& operator-=(const LiePoly& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  LiePoly operator-() const {
    LiePoly r;
    for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
  }
  LiePoly& scale(const C& c) {
    if (c.is_zero()) {
      terms.clear();
      return *this;
    }
    for (auto& [w, coeff] : terms) coeff *= c;
    return *this;
  }

  friend bool operator==(const LiePoly& a, const LiePoly& b) { return a.terms == b.terms; }
  friend bool operator!=(const LiePoly& a, const LiePoly& b) { return !(a == b); }
};

template <typename C>
LiePoly<C> lie_monomial(const Word& w, const C& c = C(1)) {
  if (!is_alsw(w)) throw PreconditionError("lie_monomial: not an ALSW");
  LiePoly<C> p;
  p.add(w, c);
  return p;
}

// Recursive expansion of a bracketing into the free associative algebra:
// [u,v] = uv - vu.
template <typename C>
AssocPoly<C> expand(const BracketTree& t) {
  AssocPoly<C> r;
  if (t.is_leaf()) {
    r.add(Word(1, static_cast<char>(t.letter())), C(1));
    return r;
  }
  AssocPoly<C> l = expand<C>(t.left());
  AssocPoly<C> rr = expand<C>(t.right());
  r = assoc_mul(l, rr);
  r -= assoc_mul(rr, l);
  return r;
}

// Same, but the designated subtree contributes `sub` instead of its own
// expansion.  This is the substitution [a s b]_{lead(s)}|_{[lead(s)] -> s}.
template <typename C>
AssocPoly<C> expand_with(const BracketTree& t, const BracketTree* designated,
                         const AssocPoly<C>& sub) {
  if (&t == designated) return sub;
  AssocPoly<C> r;
  if (t.is_leaf()) {
    r.add(Word(1, static_cast<char>(t.letter())), C(1));
    return r;
  }
  AssocPoly<C> l = expand_with<C>(t.left(), designated, sub);
  AssocPoly<C> rr = expand_with<C>(t.right(), designated, sub);
  r = assoc_mul(l, rr);
  r -= assoc_mul(rr, l);
  return r;
}

namespace detail {

// Expansion of the NLSW [w], memoized for small degrees.  Coefficients of
// NLSW expansions are integers whatever the ambient ring, so one integer
// cache serves both modes.  Entries are immutable once inserted, so reads
// take the shared lock and misses compute outside any lock.
inline const AssocPoly<Zint>* nlsw_expansion_cached(const Word& w) {
  static constexpr size_t kCacheMaxDegree = 9;
  static std::map<Word, AssocPoly<Zint>, DegLexLess> cache;
  static std::shared_mutex mu;
  if (w.size() > kCacheMaxDegree) return nullptr;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return &it->second;
  }
  AssocPoly<Zint> fresh = expand<Zint>(standard_bracketing(w));
  std::unique_lock lock(mu);
  return &cache.emplace(w, std::move(fresh)).first->second;
}

}  // namespace detail

// dst += c * expand([w]) for an ALSW w.
template <typename C>
void add_scaled_nlsw_expansion(AssocPoly<C>& dst, const Word& w, const C& c) {
  if (c.is_zero()) return;
  if (const AssocPoly<Zint>* e = detail::nlsw_expansion_cached(w)) {
    for (const auto& [word, coeff] : e->terms) dst.add(word, c * C(coeff.value()));
    return;
  }
  AssocPoly<C> e = expand<C>(standard_bracketing(w));
  for (const auto& [word, coeff] : e.terms) dst.add(word, c * coeff);
}

// Linear extension of expand over the support: the image of a Lie element
// in the free associative algebra.
template <typename C>
AssocPoly<C> expand_lin(const LiePoly<C>& f) {
  AssocPoly<C> r;
  for (const auto& [w, c] : f.terms) add_scaled_nlsw_expansion(r, w, c);
  return r;
}

// Iterated leading-term elimination: writes an associative polynomial in
// NLSW coordinates, or throws NotLieElement if it is not the expansion of
// a Lie element.  Every NLSW expands with leading coefficient 1, so no
// division happens in either coefficient mode.
template <typename C>
LiePoly<C> lie_from_assoc(AssocPoly<C> p) {
  LiePoly<C> out;
  while (!p.zero()) {
    const auto& [w, c] = p.leading();
    if (!is_alsw(w))
      throw NotLieElement("not a Lie element: leading word is not an ALSW");
    Word word = w;
    C coeff = c;
    out.terms.emplace(word, coeff);
    add_scaled_nlsw_expansion(p, word, -coeff);
  }
  return out;
}

template <typename C>
LiePoly<C> bracket(const LiePoly<C>& f, const LiePoly<C>& g) {
  AssocPoly<C> ef = expand_lin(f);
  AssocPoly<C> eg = expand_lin(g);
  AssocPoly<C> h = assoc_mul(ef, eg);
  h -= assoc_mul(eg, ef);
  return lie_from_assoc(std::move(h));
}

// Left-normed bracketing |_z x1...xm_| = [...[[z,x1],x2]...,xm].
template <typename C>
LiePoly<C> left_normed(Letter z, const Word& u) {
  BracketTree t(z);
  for (char x : u) t = BracketTree(std::move(t), BracketTree(static_cast<Letter>(x)));
  return lie_from_assoc(expand<C>(t));
}

template <typename C>
std::string lie_poly_str(const LiePoly<C>& f, const Alphabet& a) {
  if (f.zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    C c = it->second;
    bool neg = false;
    std::string cs = c.str();
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      cs.erase(0, 1);
    }
    if (first) {
      if (neg) out += "- ";
    } else {
      out += neg ? " - " : " + ";
    }
    if (cs != "1") out += cs + " ";
    out += bracket_str(standard_bracketing(it->first), a);
    first = false;
  }
  return out;
}

}  // namespace liegsb
