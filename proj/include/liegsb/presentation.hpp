#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liegsb/liepoly.hpp"
#include "liegsb/rewriting.hpp"

namespace liegsb {

enum class PresKind { Lie, Semigroup, Kukin, DK };

const char* pres_kind_str(PresKind k);

// A parsed presentation file.  Relation lines keep their (whitespace
// normalized) source text so serialization round-trips; the semantic
// payload is parsed alongside.
struct PresentationFile {
  PresKind kind = PresKind::Lie;
  std::vector<std::string> letters;   // ascending order, as declared
  Alphabet alphabet;                  // Lie / Semigroup kinds
  std::vector<std::string> rule_lines;
  std::vector<std::pair<Word, Word>> rules;  // Semigroup kind
  std::vector<std::string> rel_lines;        // Lie kind
  char coeff_mode = 'Q';                     // 'Z' or 'Q'
  bool coeffs_declared = false;
  std::optional<size_t> bound;
  int dk_n = 0;            // DK kind
  std::string kukin_path;  // Kukin kind: referenced semigroup file
};

// Grammar (one declaration per line, '#' comments):
//   letters: a < b < c
//   rule: x y = y x
//   rel: [x, y] - (z ; x y)        (or  rel: expr = expr)
//   coeffs: Z | Q
//   bound: 8
//   dk: n=5
//   kukin: path.txt, bound=8
PresentationFile parse_presentation(std::string_view text);

std::string serialize_presentation(const PresentationFile& p);

// Lie expression AST: sums of integer-scaled factors, where a factor is a
// generator, a bracket of two expressions, or a left-normed word (z ; u).
struct LieExpr {
  struct Gen {
    Letter letter;
  };
  struct Bracket;
  struct LeftNormed {
    Letter z;
    Word u;
  };
  using Factor = std::variant<Gen, std::unique_ptr<Bracket>, LeftNormed>;
  struct Term {
    long long num;
    long long den;  // 1 unless the source wrote a fraction
    Factor factor;
  };
  std::vector<Term> terms;
};

struct LieExpr::Bracket {
  LieExpr a, b;
};

// Parses the expression syntax over a fixed alphabet; reports line/column
// on errors.
LieExpr parse_lie_expr(std::string_view text, const Alphabet& alphabet);

// Parses `expr` or `expr = expr` (the latter moves everything left).
std::pair<LieExpr, std::optional<LieExpr>> parse_lie_relation(std::string_view text,
                                                              const Alphabet& alphabet);

// Largest term degree an expression can produce; expansion work grows
// exponentially with it, so front ends cap this before evaluating.
size_t lie_expr_degree(const LieExpr& e);

template <typename C>
LiePoly<C> eval_factor(const LieExpr::Factor& f);

template <typename C>
C term_coeff(long long num, long long den) {
  if constexpr (C::is_field) {
    return C(num) / C(den);
  } else {
    if (num % den != 0)
      throw NonUnitCoefficient("fractional coefficient in Z mode: " + std::to_string(num) +
                               "/" + std::to_string(den));
    return C(num / den);
  }
}

template <typename C>
LiePoly<C> eval(const LieExpr& e) {
  LiePoly<C> out;
  for (const auto& t : e.terms) {
    if (t.num == 0) continue;
    LiePoly<C> p = eval_factor<C>(t.factor);
    p.scale(term_coeff<C>(t.num, t.den));
    out += p;
  }
  return out;
}

template <typename C>
LiePoly<C> eval_factor(const LieExpr::Factor& f) {
  if (std::holds_alternative<LieExpr::Gen>(f)) {
    return lie_monomial<C>(Word(1, static_cast<char>(std::get<LieExpr::Gen>(f).letter)));
  }
  if (std::holds_alternative<LieExpr::LeftNormed>(f)) {
    const auto& ln = std::get<LieExpr::LeftNormed>(f);
    return left_normed<C>(ln.z, ln.u);
  }
  const auto& br = *std::get<std::unique_ptr<LieExpr::Bracket>>(f);
  return bracket(eval<C>(br.a), eval<C>(br.b));
}

template <typename C>
LiePoly<C> parse_lie_poly(std::string_view text, const Alphabet& alphabet) {
  return eval<C>(parse_lie_expr(text, alphabet));
}

template <typename C>
LiePoly<C> parse_relation_poly(std::string_view text, const Alphabet& alphabet) {
  auto [lhs, rhs] = parse_lie_relation(text, alphabet);
  LiePoly<C> p = eval<C>(lhs);
  if (rhs) p -= eval<C>(*rhs);
  return p;
}

}  // namespace liegsb
