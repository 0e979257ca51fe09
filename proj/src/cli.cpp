#include "liegsb/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "liegsb/drinfeld_kohno.hpp"
#include "liegsb/kukin.hpp"
#include "liegsb/presentation.hpp"

namespace liegsb {

namespace {

using Json = nlohmann::ordered_json;

std::string fnv1a_hex(std::string_view data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Loaded {
  PresentationFile file;
  SgpPresentation sgp;      // Semigroup and Kukin kinds
  std::string digest;       // over the main file bytes
  size_t bound = 8;         // resolved degree bound
};

size_t env_default_bound() {
  if (const char* v = std::getenv("LIEGSB_BOUND")) {
    char* end = nullptr;
    long b = std::strtol(v, &end, 10);
    if (end && *end == '\0' && b >= 1 && b <= 64) return static_cast<size_t>(b);
  }
  return 8;
}

Loaded load(const std::string& path, std::optional<size_t> bound_flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();

  Loaded ld;
  ld.digest = fnv1a_hex(text);
  ld.file = parse_presentation(text);

  if (ld.file.kind == PresKind::Semigroup) {
    ld.sgp = SgpPresentation{ld.file.alphabet, ld.file.rules};
  } else if (ld.file.kind == PresKind::Kukin) {
    std::filesystem::path ref(ld.file.kukin_path);
    if (ref.is_relative()) ref = std::filesystem::path(path).parent_path() / ref;
    std::ifstream rin(ref, std::ios::binary);
    if (!rin) throw Error("cannot open referenced file: " + ref.string());
    std::stringstream rss;
    rss << rin.rdbuf();
    PresentationFile sub = parse_presentation(rss.str());
    if (sub.kind != PresKind::Semigroup)
      throw Error("kukin reference must be a semigroup presentation: " + ref.string());
    ld.sgp = SgpPresentation{sub.alphabet, sub.rules};
  }

  ld.bound = bound_flag ? *bound_flag
                        : (ld.file.bound ? *ld.file.bound : env_default_bound());
  return ld;
}

constexpr size_t kMaxExprDegree = 16;

template <typename C>
LiePoly<C> parse_capped(std::string_view text, const Alphabet& alphabet) {
  auto [lhs, rhs] = parse_lie_relation(text, alphabet);
  size_t deg = lie_expr_degree(lhs);
  if (rhs) deg = std::max(deg, lie_expr_degree(*rhs));
  if (deg > kMaxExprDegree)
    throw Error("expression degree " + std::to_string(deg) + " exceeds the limit of " +
                std::to_string(kMaxExprDegree));
  LiePoly<C> p = eval<C>(lhs);
  if (rhs) p -= eval<C>(*rhs);
  return p;
}

template <typename C>
RelationSet<C> lie_relations(const PresentationFile& pf) {
  RelationSet<C> S(pf.alphabet);
  for (size_t i = 0; i < pf.rel_lines.size(); ++i)
    S.add("R" + std::to_string(i + 1), parse_capped<C>(pf.rel_lines[i], pf.alphabet));
  return S;
}

struct Output {
  std::ostream& out;
  bool json;
  Json doc;

  Output(std::ostream& o, bool j, const std::string& command, const std::string& digest)
      : out(o), json(j) {
    doc["command"] = command;
    doc["input-digest"] = digest;
    doc["verdict"] = "";
    doc["records"] = Json::array();
  }
  void line(const std::string& s) {
    if (!json) out << s << "\n";
  }
  void record(Json r, const std::string& text) {
    if (json) doc["records"].push_back(std::move(r));
    else out << text << "\n";
  }
  void finish(const std::string& verdict) {
    if (json) {
      doc["verdict"] = verdict;
      out << doc.dump(2) << "\n";
    } else {
      out << "verdict: " << verdict << "\n";
    }
  }
};

template <typename C>
void emit_check_records(Output& o, const CompositionReport<C>& rep, const Alphabet& a,
                        const std::vector<std::string>* family,
                        const std::vector<S1Class>* classes, const std::vector<bool>* censored) {
  for (size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    Json jr;
    jr["f"] = r.f_id;
    jr["g"] = r.g_id;
    jr["kind"] = ambiguity_kind_str(r.kind);
    jr["w"] = a.str(r.w, ".");
    jr["support"] = r.remainder.terms.size();
    jr["ok"] = r.ok();
    std::string text = record_line(r, a);
    if (family) {
      jr["family"] = (*family)[i];
      text += " family=" + (*family)[i];
    }
    if (classes) {
      jr["class"] = s1_class_str((*classes)[i]);
      text += std::string(" class=") + s1_class_str((*classes)[i]);
    }
    if (censored && (*censored)[i]) {
      jr["censored"] = true;
      text += " censored";
    }
    o.record(std::move(jr), text);
  }
}

int cmd_check(const Loaded& ld, Output& o, unsigned threads) {
  switch (ld.file.kind) {
    case PresKind::DK: {
      DKPresentation dk(ld.file.dk_n);
      DKCheckReport rep = dk_check(dk, threads);
      emit_check_records(o, rep.base, dk.alphabet(), &rep.family, nullptr, nullptr);
      o.line("ambiguities: " + std::to_string(rep.base.records.size()) +
             ", unclassified: " + std::to_string(rep.unclassified));
      o.finish(rep.pass ? "pass" : "fail");
      return rep.pass ? 0 : 1;
    }
    case PresKind::Kukin: {
      KukinContext<Rational> ctx(ld.sgp, ld.bound);
      S1Report<Rational> rep = verify_s1(ctx, threads);
      emit_check_records(o, rep.base, ctx.lie_alphabet(), nullptr, &rep.classes, &rep.censored);
      o.line("ambiguities: " + std::to_string(rep.base.records.size()) +
             ", bound-censored: " + std::to_string(rep.censored_count));
      o.finish(rep.pass ? "pass" : "fail");
      return rep.pass ? 0 : 1;
    }
    case PresKind::Lie: {
      int code = 0;
      std::string verdict;
      if (ld.file.coeff_mode == 'Z') {
        RelationSet<Zint> S = lie_relations<Zint>(ld.file);
        CompositionReport<Zint> rep = check_gsb(S, threads);
        emit_check_records(o, rep, S.alphabet(), nullptr, nullptr, nullptr);
        verdict = rep.pass() ? "pass" : "fail";
        code = rep.pass() ? 0 : 1;
      } else {
        RelationSet<Rational> S = lie_relations<Rational>(ld.file);
        CompositionReport<Rational> rep = check_gsb(S, threads);
        emit_check_records(o, rep, S.alphabet(), nullptr, nullptr, nullptr);
        verdict = rep.pass() ? "pass" : "fail";
        code = rep.pass() ? 0 : 1;
      }
      o.finish(verdict);
      return code;
    }
    case PresKind::Semigroup: {
      StringRS rs = orient(ld.sgp);
      bool confluent = true;
      for (const CriticalPair& cp : critical_pairs(rs)) {
        Word l = sgp_normal_form(cp.left, rs);
        Word r = sgp_normal_form(cp.right, rs);
        bool joins = l == r;
        confluent = confluent && joins;
        Json jr;
        jr["w"] = rs.alphabet().str(cp.superword, ".");
        jr["left"] = rs.alphabet().str(l, ".");
        jr["right"] = rs.alphabet().str(r, ".");
        jr["ok"] = joins;
        o.record(std::move(jr),
                 "cp w=" + rs.alphabet().str(cp.superword, ".") + (joins ? " joins" : " splits"));
      }
      o.finish(confluent ? "pass" : "fail");
      return confluent ? 0 : 1;
    }
  }
  return 2;
}

int cmd_nf(const Loaded& ld, const std::string& expr, Output& o) {
  switch (ld.file.kind) {
    case PresKind::Semigroup: {
      StringRS rs = orient(ld.sgp);
      KBResult kb = knuth_bendix(rs, 32, 1000);
      const StringRS& sys = kb.completed ? kb.system : rs;
      Word w = ld.sgp.alphabet.parse_word(expr);
      Word nf = sgp_normal_form(w, sys);
      std::string rendered = ld.sgp.alphabet.str(nf);
      Json jr;
      jr["expr"] = expr;
      jr["normal-form"] = rendered;
      jr["canonical"] = kb.completed;
      o.record(std::move(jr),
               rendered + (kb.completed ? "" : "   (reduced only: system incomplete)"));
      o.finish(kb.completed ? "ok" : "reduced-only");
      return 0;
    }
    case PresKind::DK: {
      DKPresentation dk(ld.file.dk_n);
      LiePoly<Zint> p = parse_capped<Zint>(expr, dk.alphabet());
      LiePoly<Zint> nf = reduce(p, dk.relations());
      std::string rendered = lie_poly_str(nf, dk.alphabet());
      Json jr;
      jr["expr"] = expr;
      jr["normal-form"] = rendered;
      o.record(std::move(jr), rendered);
      o.finish("ok");
      return 0;
    }
    case PresKind::Kukin: {
      KukinContext<Rational> ctx(ld.sgp, ld.bound);
      LiePoly<Rational> p = parse_capped<Rational>(expr, ctx.lie_alphabet());
      LiePoly<Rational> nf = reduce(p, ctx.relations());
      std::string rendered = lie_poly_str(nf, ctx.lie_alphabet());
      Json jr;
      jr["expr"] = expr;
      jr["normal-form"] = rendered;
      o.record(std::move(jr), rendered);
      o.finish("ok");
      return 0;
    }
    case PresKind::Lie: {
      std::string rendered;
      if (ld.file.coeff_mode == 'Z') {
        RelationSet<Zint> S = lie_relations<Zint>(ld.file);
        rendered = lie_poly_str(reduce(parse_capped<Zint>(expr, S.alphabet()), S),
                                S.alphabet());
      } else {
        RelationSet<Rational> S = lie_relations<Rational>(ld.file);
        rendered = lie_poly_str(reduce(parse_capped<Rational>(expr, S.alphabet()), S),
                                S.alphabet());
      }
      Json jr;
      jr["expr"] = expr;
      jr["normal-form"] = rendered;
      o.record(std::move(jr), rendered);
      o.finish("ok");
      return 0;
    }
  }
  return 2;
}

void emit_basis(Output& o, const std::vector<Word>& words, const Alphabet& a) {
  for (const Word& w : words) {
    Json jr;
    jr["degree"] = w.size();
    jr["word"] = a.str(w, ".");
    o.record(std::move(jr), a.str(w));
  }
}

int cmd_basis(const Loaded& ld, size_t max_deg, Output& o, bool ranks_only) {
  std::vector<Word> words;
  Alphabet alphabet;
  switch (ld.file.kind) {
    case PresKind::DK: {
      DKPresentation dk(ld.file.dk_n);
      words = irr_enumerate(dk.relations(), max_deg);
      alphabet = dk.alphabet();
      break;
    }
    case PresKind::Kukin: {
      KukinContext<Rational> ctx(ld.sgp, ld.bound);
      words = irr_enumerate(ctx.relations(), max_deg);
      alphabet = ctx.lie_alphabet();
      break;
    }
    case PresKind::Lie: {
      RelationSet<Rational> S = lie_relations<Rational>(ld.file);
      words = irr_enumerate(S, max_deg);
      alphabet = S.alphabet();
      break;
    }
    case PresKind::Semigroup: {
      // Irreducible words of the rewriting system, the semigroup analogue.
      StringRS rs = orient(ld.sgp);
      for (const Word& w : all_words(ld.sgp.alphabet, max_deg))
        if (!rs.rewrite_once(w)) words.push_back(w);
      alphabet = ld.sgp.alphabet;
      break;
    }
  }
  if (ranks_only) {
    std::vector<long long> counts(max_deg, 0);
    for (const Word& w : words) ++counts[w.size() - 1];
    for (size_t d = 1; d <= max_deg; ++d) {
      Json jr;
      jr["degree"] = d;
      jr["count"] = counts[d - 1];
      o.record(std::move(jr), "degree " + std::to_string(d) + ": " + std::to_string(counts[d - 1]));
    }
  } else {
    emit_basis(o, words, alphabet);
  }
  o.finish("ok");
  return 0;
}

int cmd_wp(const Loaded& ld, const std::string& us, const std::string& vs, Output& o) {
  if (ld.file.kind != PresKind::Semigroup && ld.file.kind != PresKind::Kukin)
    throw Error("wp needs a semigroup or kukin presentation");
  KukinContext<Rational> ctx(ld.sgp, ld.bound);
  Word u = ctx.base_alphabet().parse_word(us);
  Word v = ctx.base_alphabet().parse_word(vs);
  bool lie_eq = lie_word_equal(u, v, ctx);
  Word unf = sgp_normal_form(u, ctx.rewriting());
  Word vnf = sgp_normal_form(v, ctx.rewriting());
  bool sgp_eq = unf == vnf;
  if (lie_eq != sgp_eq)
    throw Error("internal error: Lie and semigroup word problems disagree");
  Json jr;
  jr["u"] = us;
  jr["v"] = vs;
  jr["equal"] = lie_eq;
  jr["u-normal-form"] = ctx.base_alphabet().str(unf);
  jr["v-normal-form"] = ctx.base_alphabet().str(vnf);
  o.record(std::move(jr), lie_eq ? "EQUAL" : "UNEQUAL");
  o.finish(lie_eq ? "equal" : "unequal");
  return lie_eq ? 0 : 1;
}

int cmd_complete(const Loaded& ld, size_t max_len, size_t max_iter, Output& o) {
  if (ld.file.kind != PresKind::Semigroup)
    throw Error("complete needs a semigroup presentation");
  KBResult kb = knuth_bendix(orient(ld.sgp), max_len, max_iter);
  const Alphabet& a = ld.sgp.alphabet;
  for (const RewriteRule& r : kb.system.rules()) {
    Json jr;
    jr["lhs"] = a.str(r.lhs, ".");
    jr["rhs"] = a.str(r.rhs, ".");
    o.record(std::move(jr), a.str(r.lhs) + " -> " + a.str(r.rhs));
  }
  if (!kb.completed)
    for (const auto& [u, v] : kb.pending)
      o.line("pending: " + a.str(u) + " = " + a.str(v));
  o.finish(kb.completed ? "complete" : "incomplete");
  return kb.completed ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grobner-Shirshov bases for free Lie algebras"};
  app.require_subcommand(1);

  std::string file, expr, word_u, word_v;
  bool json = false, parallel = false;
  std::optional<size_t> bound_flag;
  size_t max_deg = 4;
  if (const char* v = std::getenv("LIEGSB_BOUND")) {
    char* end = nullptr;
    long b = std::strtol(v, &end, 10);
    if (end && *end == '\0' && b >= 1 && b <= 64) max_deg = static_cast<size_t>(b);
  }
  size_t max_len = 64, max_iter = 100000;

  auto add_common = [&](CLI::App* sub, bool with_bound = true) {
    sub->add_option("file", file, "presentation file")->required();
    sub->add_flag("--json", json, "machine-readable report");
    if (with_bound) sub->add_option("--bound", bound_flag, "Kukin degree bound");
  };

  CLI::App* check = app.add_subcommand("check", "verify the Grobner-Shirshov property");
  add_common(check);
  check->add_flag("--parallel", parallel, "check ambiguities in parallel");

  CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
  add_common(nf);
  nf->add_option("expr", expr, "expression (Lie syntax, or a word for semigroups)")->required();

  CLI::App* basis = app.add_subcommand("basis", "enumerate the Irr basis up to a degree");
  add_common(basis);
  basis->add_option("--max-deg", max_deg, "maximum degree");

  CLI::App* ranks = app.add_subcommand("ranks", "per-degree Irr counts");
  add_common(ranks);
  ranks->add_option("--max-deg", max_deg, "maximum degree");

  CLI::App* wp = app.add_subcommand("wp", "Kukin word problem for two semigroup words");
  add_common(wp);
  wp->add_option("u", word_u, "first word")->required();
  wp->add_option("v", word_v, "second word")->required();

  CLI::App* complete = app.add_subcommand("complete", "Knuth-Bendix completion");
  add_common(complete, false);
  complete->add_option("--max-len", max_len, "maximum rule side length");
  complete->add_option("--max-iter", max_iter, "maximum processed equations");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Loaded ld = load(file, bound_flag);
    std::string cmd = app.get_subcommands().front()->get_name();
    Output o(out, json, cmd, ld.digest);
    unsigned threads = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (check->parsed()) return cmd_check(ld, o, threads);
    if (nf->parsed()) return cmd_nf(ld, expr, o);
    if (basis->parsed()) return cmd_basis(ld, max_deg, o, false);
    if (ranks->parsed()) return cmd_basis(ld, max_deg, o, true);
    if (wp->parsed()) return cmd_wp(ld, word_u, word_v, o);
    if (complete->parsed()) return cmd_complete(ld, max_len, max_iter, o);
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liegsb
