#include "liegsb/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace liegsb {

const char* pres_kind_str(PresKind k) {
  switch (k) {
    case PresKind::Lie: return "lie";
    case PresKind::Semigroup: return "semigroup";
    case PresKind::Kukin: return "kukin";
    case PresKind::DK: return "dk";
  }
  return "?";
}

namespace {

std::string squeeze_ws(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '.';
}

// Character scanner for the expression syntax, tracking line/column for
// error reports.
class Scanner {
 public:
  Scanner(std::string_view text, size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c || pos_ >= text_.size()) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::string name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  long long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    long long v = 0;
    for (size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > (1LL << 40)) fail("coefficient too large");
    }
    return v;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
  bool at_name() {
    char c = peek();
    return is_name_char(c) && !std::isdigit(static_cast<unsigned char>(c));
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, pos_ + 1); }

  size_t line() const { return line_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  size_t line_;
};

class ExprParser {
 public:
  ExprParser(Scanner& sc, const Alphabet& alphabet) : sc_(sc), alphabet_(alphabet) {}

  LieExpr expression() {
    LieExpr e;
    long long sign = 1;
    if (sc_.accept('-')) sign = -1;
    else sc_.accept('+');
    e.terms.push_back(term(sign));
    for (;;) {
      if (sc_.accept('+')) e.terms.push_back(term(1));
      else if (sc_.accept('-')) e.terms.push_back(term(-1));
      else break;
    }
    return e;
  }

 private:
  LieExpr::Term term(long long sign) {
    long long num = sign;
    long long den = 1;
    if (sc_.at_digit()) {
      num *= sc_.integer();
      if (sc_.accept('/')) {
        den = sc_.integer();
        if (den == 0) sc_.fail("zero denominator");
      }
      sc_.accept('*');
      // a bare 0 is the zero polynomial; no factor follows
      if (num == 0) {
        char c = sc_.peek();
        if (c == '\0' || c == '+' || c == '-' || c == ',' || c == ']' || c == ')' || c == '=')
          return LieExpr::Term{0, 1, LieExpr::Factor(LieExpr::Gen{0})};
      }
    }
    return LieExpr::Term{num, den, factor()};
  }

  LieExpr::Factor factor() {
    if (++depth_ > 200) sc_.fail("expression nested too deeply");
    struct Guard {
      int& d;
      ~Guard() { --d; }
    } guard{depth_};
    if (sc_.accept('[')) {
      auto br = std::make_unique<LieExpr::Bracket>();
      br->a = expression();
      sc_.expect(',', "',' between bracket arguments");
      br->b = expression();
      sc_.expect(']', "']'");
      return LieExpr::Factor(std::move(br));
    }
    if (sc_.accept('(')) {
      Letter z = letter();
      sc_.expect(';', "';' in left-normed bracketing");
      Word u;
      while (sc_.peek() != ')' && !sc_.done()) u.push_back(static_cast<char>(letter()));
      sc_.expect(')', "')'");
      return LieExpr::Factor(LieExpr::LeftNormed{z, std::move(u)});
    }
    return LieExpr::Factor(LieExpr::Gen{letter()});
  }

  Letter letter() {
    if (!sc_.at_name()) sc_.fail("expected a generator name");
    std::string nm = sc_.name();
    auto l = alphabet_.find(nm);
    if (!l) sc_.fail("unknown letter: " + nm);
    return *l;
  }

  Scanner& sc_;
  const Alphabet& alphabet_;
  int depth_ = 0;
};

Word line_word(Scanner& sc, const Alphabet& alphabet, std::string_view text) {
  try {
    return alphabet.parse_word(text);
  } catch (const PreconditionError& e) {
    sc.fail(e.what());
  }
}

}  // namespace

LieExpr parse_lie_expr(std::string_view text, const Alphabet& alphabet) {
  Scanner sc(text, 1);
  ExprParser p(sc, alphabet);
  LieExpr e = p.expression();
  if (!sc.done()) sc.fail("trailing input after expression");
  return e;
}

size_t lie_expr_degree(const LieExpr& e) {
  size_t deg = 0;
  for (const auto& t : e.terms) {
    size_t d = 0;
    if (std::holds_alternative<LieExpr::Gen>(t.factor)) {
      d = 1;
    } else if (std::holds_alternative<LieExpr::LeftNormed>(t.factor)) {
      d = 1 + std::get<LieExpr::LeftNormed>(t.factor).u.size();
    } else {
      const auto& br = *std::get<std::unique_ptr<LieExpr::Bracket>>(t.factor);
      d = lie_expr_degree(br.a) + lie_expr_degree(br.b);
    }
    deg = std::max(deg, d);
  }
  return deg;
}

std::pair<LieExpr, std::optional<LieExpr>> parse_lie_relation(std::string_view text,
                                                              const Alphabet& alphabet) {
  Scanner sc(text, 1);
  ExprParser p(sc, alphabet);
  LieExpr lhs = p.expression();
  std::optional<LieExpr> rhs;
  if (sc.accept('=')) rhs = p.expression();
  if (!sc.done()) sc.fail("trailing input after relation");
  return {std::move(lhs), std::move(rhs)};
}

PresentationFile parse_presentation(std::string_view text) {
  PresentationFile pf;
  bool saw_kind_line = false;
  bool saw_letters = false;
  bool saw_rule = false, saw_rel = false;

  size_t lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    std::string_view line = raw;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'keyword: ...'", lineno, 1);
    std::string key(trim(line.substr(0, colon)));
    std::string_view rest = trim(line.substr(colon + 1));
    Scanner sc(rest, lineno);

    if (key == "letters") {
      if (saw_letters) throw ParseError("duplicate letters declaration", lineno, 1);
      saw_letters = true;
      std::vector<std::string> names;
      names.push_back(sc.name());
      while (sc.accept('<')) names.push_back(sc.name());
      if (!sc.done()) sc.fail("trailing input in letters declaration");
      for (const std::string& nm : names)
        if (std::isdigit(static_cast<unsigned char>(nm[0])))
          throw ParseError("letter names may not start with a digit: " + nm, lineno, 1);
      try {
        pf.alphabet = Alphabet(names);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), lineno, 1);
      }
      pf.letters = std::move(names);
    } else if (key == "rule") {
      if (!saw_letters) throw ParseError("rule before letters declaration", lineno, 1);
      saw_rule = true;
      size_t eq = rest.find('=');
      if (eq == std::string_view::npos) sc.fail("expected '=' in rule");
      Word lhs = line_word(sc, pf.alphabet, trim(rest.substr(0, eq)));
      Word rhs = line_word(sc, pf.alphabet, trim(rest.substr(eq + 1)));
      if (lhs.empty() || rhs.empty()) sc.fail("semigroup rule sides must be nonempty");
      pf.rules.emplace_back(std::move(lhs), std::move(rhs));
      pf.rule_lines.push_back(squeeze_ws(rest));
    } else if (key == "rel") {
      if (!saw_letters) throw ParseError("rel before letters declaration", lineno, 1);
      saw_rel = true;
      // Validate now (against the declared alphabet); evaluation happens
      // when a coefficient mode is chosen.
      ExprParser p(sc, pf.alphabet);
      p.expression();
      if (sc.accept('=')) p.expression();
      if (!sc.done()) sc.fail("trailing input after relation");
      pf.rel_lines.push_back(squeeze_ws(rest));
    } else if (key == "coeffs") {
      std::string mode = sc.name();
      if (mode != "Z" && mode != "Q") sc.fail("coeffs must be Z or Q");
      pf.coeff_mode = mode[0];
      pf.coeffs_declared = true;
    } else if (key == "bound") {
      long long b = sc.integer();
      if (b < 1) sc.fail("bound must be >= 1");
      pf.bound = static_cast<size_t>(b);
    } else if (key == "dk") {
      if (saw_kind_line) throw ParseError("duplicate dk/kukin declaration", lineno, 1);
      saw_kind_line = true;
      pf.kind = PresKind::DK;
      std::string nname = sc.name();
      if (nname != "n") sc.fail("expected n=<int>");
      sc.expect('=', "'='");
      long long n = sc.integer();
      if (n <= 2) sc.fail("dk needs n > 2");
      if (n > 30) sc.fail("dk n too large");
      pf.dk_n = static_cast<int>(n);
      if (!sc.done()) sc.fail("trailing input in dk declaration");
    } else if (key == "kukin") {
      if (saw_kind_line) throw ParseError("duplicate dk/kukin declaration", lineno, 1);
      saw_kind_line = true;
      pf.kind = PresKind::Kukin;
      size_t comma = rest.find(',');
      std::string_view path = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
      if (path.empty()) sc.fail("kukin needs a semigroup file path");
      pf.kukin_path = std::string(path);
      if (comma != std::string_view::npos) {
        Scanner opt(rest.substr(comma + 1), lineno);
        std::string bname = opt.name();
        if (bname != "bound") opt.fail("expected bound=<int>");
        opt.expect('=', "'='");
        long long b = opt.integer();
        if (b < 1) opt.fail("bound must be >= 1");
        pf.bound = static_cast<size_t>(b);
        if (!opt.done()) opt.fail("trailing input in kukin declaration");
      }
    } else {
      throw ParseError("unknown declaration '" + key + "'", lineno, 1);
    }
  }

  if (!saw_kind_line) {
    if (saw_rule && saw_rel)
      throw ParseError("presentation mixes semigroup rules and Lie relations", lineno, 1);
    if (!saw_letters) throw ParseError("presentation has no letters declaration", lineno, 1);
    pf.kind = saw_rule ? PresKind::Semigroup : PresKind::Lie;
  } else if (saw_rule || saw_rel || saw_letters) {
    throw ParseError("dk/kukin declarations take no letters, rules or relations", lineno, 1);
  }
  return pf;
}

std::string serialize_presentation(const PresentationFile& p) {
  std::string out;
  switch (p.kind) {
    case PresKind::DK:
      out += "dk: n=" + std::to_string(p.dk_n) + "\n";
      break;
    case PresKind::Kukin:
      out += "kukin: " + p.kukin_path;
      if (p.bound) out += ", bound=" + std::to_string(*p.bound);
      out += "\n";
      break;
    case PresKind::Semigroup:
    case PresKind::Lie: {
      out += "letters: ";
      for (size_t i = 0; i < p.letters.size(); ++i) {
        if (i) out += " < ";
        out += p.letters[i];
      }
      out += "\n";
      for (const auto& r : p.rule_lines) out += "rule: " + r + "\n";
      for (const auto& r : p.rel_lines) out += "rel: " + r + "\n";
      break;
    }
  }
  if (p.coeffs_declared) out += std::string("coeffs: ") + p.coeff_mode + "\n";
  if (p.bound && p.kind != PresKind::Kukin)
    out += "bound: " + std::to_string(*p.bound) + "\n";
  return out;
}

}  // namespace liegsb
