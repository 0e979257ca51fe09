#include "liegsb/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace liegsb {

void StringRS::add_rule(Word lhs, Word rhs) {
  if (lhs.empty() || rhs.empty())
    throw PreconditionError("rewrite rule with an empty side");
  alphabet_.require(lhs);
  alphabet_.require(rhs);
  if (!deglex_greater(lhs, rhs))
    throw PreconditionError("rewrite rule is not decreasing under deg-lex");
  rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
  complete_ = false;
}

std::optional<Word> StringRS::rewrite_once(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (const RewriteRule& r : rules_) {
      if (pos + r.lhs.size() > w.size()) continue;
      if (w.compare(pos, r.lhs.size(), r.lhs) != 0) continue;
      return w.substr(0, pos) + r.rhs + w.substr(pos + r.lhs.size());
    }
  }
  return std::nullopt;
}

StringRS orient(const SgpPresentation& p) {
  StringRS rs(p.alphabet);
  for (const auto& [u, v] : p.rules) {
    if (u == v) continue;
    Word l = u, r = v;
    if (deglex_less(l, r)) std::swap(l, r);
    bool dup = false;
    for (const RewriteRule& existing : rs.rules())
      if (existing.lhs == l && existing.rhs == r) dup = true;
    if (!dup) rs.add_rule(l, r);
  }
  return rs;
}

Word sgp_normal_form(Word u, const StringRS& rs) {
  for (;;) {
    auto next = rs.rewrite_once(u);
    if (!next) return u;
    u = std::move(*next);
  }
}

std::vector<CriticalPair> critical_pairs(const StringRS& rs) {
  std::vector<CriticalPair> out;
  const auto& rules = rs.rules();
  for (size_t i = 0; i < rules.size(); ++i) {
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& li = rules[i].lhs;
      const Word& lj = rules[j].lhs;
      // Proper overlap: nonempty proper suffix of li equals proper prefix
      // of lj; superword = li + tail(lj).
      size_t max_o = std::min(li.size(), lj.size()) - 1;
      for (size_t o = 1; o <= max_o; ++o) {
        if (li.compare(li.size() - o, o, lj, 0, o) != 0) continue;
        Word super = li + lj.substr(o);
        Word left = rules[i].rhs + lj.substr(o);
        Word right = li.substr(0, li.size() - o) + rules[j].rhs;
        out.push_back(CriticalPair{std::move(super), std::move(left), std::move(right)});
      }
      // Inclusion: lj a proper factor of li (identical rules are skipped;
      // distinct rules with equal lhs still clash at offset 0).
      if (lj.size() <= li.size()) {
        for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
          if (i == j && pos == 0 && lj.size() == li.size()) continue;
          if (li.compare(pos, lj.size(), lj) != 0) continue;
          Word right = li.substr(0, pos) + rules[j].rhs + li.substr(pos + lj.size());
          out.push_back(CriticalPair{li, rules[i].rhs, std::move(right)});
        }
      }
    }
  }
  return out;
}

bool locally_confluent(const StringRS& rs) {
  for (const CriticalPair& cp : critical_pairs(rs))
    if (sgp_normal_form(cp.left, rs) != sgp_normal_form(cp.right, rs)) return false;
  return true;
}

KBResult knuth_bendix(const StringRS& input, size_t max_len, size_t max_iter) {
  if (max_len == 0 || max_iter == 0)
    throw PreconditionError("knuth_bendix: bounds must be positive");
  StringRS rs(input.alphabet());
  std::deque<std::pair<Word, Word>> eqs;
  for (const RewriteRule& r : input.rules()) eqs.emplace_back(r.lhs, r.rhs);

  size_t iterations = 0;
  auto give_up = [&](std::pair<Word, Word> head) {
    KBResult res{std::move(rs), false, {}, iterations};
    res.pending.push_back(std::move(head));
    for (auto& e : eqs) res.pending.push_back(std::move(e));
    return res;
  };

  while (!eqs.empty()) {
    auto [u, v] = eqs.front();
    eqs.pop_front();
    u = sgp_normal_form(u, rs);
    v = sgp_normal_form(v, rs);
    if (u == v) continue;
    if (++iterations > max_iter) return give_up({u, v});
    if (deglex_less(u, v)) std::swap(u, v);
    if (u.size() > max_len || v.size() > max_len) return give_up({u, v});

    // Interreduce: pull out every rule the new one touches and requeue it.
    StringRS next(rs.alphabet());
    next.add_rule(u, v);
    for (const RewriteRule& r : rs.rules()) {
      if (r.lhs.find(u) != Word::npos) {
        eqs.emplace_back(r.lhs, r.rhs);
      } else {
        next.add_rule(r.lhs, sgp_normal_form(r.rhs, next));
      }
    }
    // Keep rule order stable: previous rules first, the new rule last.
    StringRS rebuilt(rs.alphabet());
    for (size_t k = 1; k < next.rules().size(); ++k)
      rebuilt.add_rule(next.rules()[k].lhs, next.rules()[k].rhs);
    rebuilt.add_rule(u, v);
    rs = std::move(rebuilt);

    for (const CriticalPair& cp : critical_pairs(rs)) {
      Word l = sgp_normal_form(cp.left, rs);
      Word r = sgp_normal_form(cp.right, rs);
      if (l != r) eqs.emplace_back(std::move(l), std::move(r));
    }
  }

  rs.mark_complete(true);
  KBResult res{std::move(rs), true, {}, iterations};
  return res;
}

std::vector<Word> all_words(const Alphabet& a, size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> level;
  for (size_t l = 0; l < a.size(); ++l) level.push_back(Word(1, static_cast<char>(l)));
  for (size_t len = 1; len <= max_len; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Word> next;
    next.reserve(level.size() * a.size());
    for (const Word& w : level)
      for (size_t l = 0; l < a.size(); ++l) next.push_back(w + static_cast<char>(l));
    level = std::move(next);
  }
  return out;
}

std::vector<std::pair<Word, Word>> congruence_pairs(const StringRS& rs, size_t max_len) {
  if (!rs.complete())
    throw IncompleteSystem("congruence_pairs needs a complete rewriting system");
  std::map<Word, std::vector<Word>, DegLexLess> classes;
  for (const Word& w : all_words(rs.alphabet(), max_len))
    classes[sgp_normal_form(w, rs)].push_back(w);
  std::vector<std::pair<Word, Word>> pairs;
  for (auto& [nf, members] : classes) {
    // members are generated deg-lex ascending
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        pairs.emplace_back(members[j], members[i]);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return deglex_less(a.first, b.first);
    return deglex_less(a.second, b.second);
  });
  return pairs;
}

}  // namespace liegsb
