#pragma once

#include <algorithm>
#include <atomic>
#include <future>
#include <shared_mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "liegsb/liepoly.hpp"

namespace liegsb {

template <typename C>
struct Relation {
  std::string id;
  LiePoly<C> poly;  // monic
  Word lead;
  bool sign_flipped = false;  // Z mode: stored as -input to make it monic
};

// An ordered set of monic Lie relations over one alphabet, with the lookup
// structures reduction needs.  Immutable once populated (adding relations
// after a check would invalidate the verified flag, so add() resets it).
template <typename C>
class RelationSet {
 public:
  explicit RelationSet(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  RelationSet(const RelationSet& o)
      : alphabet_(o.alphabet_), rels_(o.rels_), id_rank_(o.id_rank_), rank_of_(o.rank_of_),
        by_lead_(o.by_lead_), lead_lengths_(o.lead_lengths_) {
    verified_.store(o.verified_.load());
  }
  RelationSet& operator=(const RelationSet&) = delete;

  const Alphabet& alphabet() const { return alphabet_; }
  size_t size() const { return rels_.size(); }
  const Relation<C>& operator[](size_t i) const { return rels_[i]; }

  // Normalizes the polynomial to be monic.  In field mode this divides by
  // the leading coefficient; in ring mode only +-1 leads are accepted
  // (a -1 lead flips the sign and records the flip).
  void add(std::string id, LiePoly<C> poly) {
    if (poly.zero()) throw PreconditionError("relation '" + id + "' is zero");
    for (const auto& [w, c] : poly.terms) alphabet_.require(w);
    bool flipped = false;
    C lc = poly.leading_coeff();
    if (!lc.is_one()) {
      if constexpr (C::is_field) {
        for (auto& [w, c] : poly.terms) c = c / lc;
      } else {
        if (!lc.is_unit())
          throw NonUnitCoefficient("non-unit leading coefficient in relation '" + id + "'");
        poly = -poly;
        flipped = true;
      }
    }
    Relation<C> r{std::move(id), std::move(poly), Word(), flipped};
    r.lead = r.poly.leading_word();
    for (const auto& other : rels_)
      if (other.id == r.id) throw PreconditionError("duplicate relation id '" + r.id + "'");
    size_t idx = rels_.size();
    by_lead_[r.lead].push_back(idx);
    lead_lengths_.insert(r.lead.size());
    rels_.push_back(std::move(r));
    rebuild_ranks();
    verified_.store(false);
  }

  const std::vector<size_t>& id_sorted() const { return id_rank_; }

  struct Occurrence {
    size_t rel;     // relation index
    size_t offset;  // position of lead(rel) inside the scanned word
  };

  // The reduction step the deterministic strategy picks inside t: the
  // relation with the lexicographically least id whose lead occurs in t,
  // at its leftmost occurrence.  Empty if t is irreducible.
  std::optional<Occurrence> find_reduction(const Word& t) const {
    std::optional<Occurrence> best;
    size_t best_rank = 0;
    for (size_t off = 0; off < t.size(); ++off) {
      for (size_t len : lead_lengths_) {
        if (off + len > t.size()) break;
        auto it = by_lead_.find(t.substr(off, len));
        if (it == by_lead_.end()) continue;
        for (size_t rel : it->second) {
          size_t rank = rank_of_[rel];
          if (!best || rank < best_rank || (rank == best_rank && off < best->offset)) {
            best = Occurrence{rel, off};
            best_rank = rank;
          }
        }
      }
    }
    return best;
  }

  std::vector<Occurrence> all_reductions(const Word& t) const {
    std::vector<Occurrence> out;
    for (size_t off = 0; off < t.size(); ++off)
      for (size_t len : lead_lengths_) {
        if (off + len > t.size()) break;
        auto it = by_lead_.find(t.substr(off, len));
        if (it == by_lead_.end()) continue;
        for (size_t rel : it->second) out.push_back(Occurrence{rel, off});
      }
    return out;
  }

  // Special normal S-word [a s b]_{lead(s)}: the Shirshov special
  // bracketing of a*lead(s)*b with the relation polynomial substituted for
  // the designated subtree.  Monic with leading word a*lead(s)*b.
  LiePoly<C> special_normal_sword(size_t rel, const Word& a, const Word& b) const {
    bool cacheable = a.size() + rels_[rel].lead.size() + b.size() <= kNswordCacheDegree;
    if (cacheable) {
      std::shared_lock lock(cache_mu_);
      auto it = nsword_cache_.find(std::tie(rel, a, b));
      if (it != nsword_cache_.end()) return it->second;
    }
    LiePoly<C> result = build_nsword(rel, a, b);
    if (cacheable) {
      std::unique_lock lock(cache_mu_);
      nsword_cache_.emplace(std::make_tuple(rel, a, b), result);
    }
    return result;
  }

  bool verified() const { return verified_.load(); }
  void mark_verified(bool v) const { verified_.store(v); }

 private:
  void rebuild_ranks() {
    id_rank_.resize(rels_.size());
    for (size_t i = 0; i < rels_.size(); ++i) id_rank_[i] = i;
    std::sort(id_rank_.begin(), id_rank_.end(),
              [&](size_t a, size_t b) { return rels_[a].id < rels_[b].id; });
    rank_of_.assign(rels_.size(), 0);
    for (size_t r = 0; r < id_rank_.size(); ++r) rank_of_[id_rank_[r]] = r;
  }

  LiePoly<C> build_nsword(size_t rel, const Word& a, const Word& b) const {
    const Relation<C>& s = rels_[rel];
    SpecialBracketing sb = special_bracketing(a, s.lead, b);
    if (s.poly.terms.size() == 1)  // the relation is the bare NLSW [lead]
      return lie_from_assoc(expand<C>(*sb.tree));
    AssocPoly<C> sub = expand_lin(s.poly);
    return lie_from_assoc(expand_with<C>(*sb.tree, sb.designated, sub));
  }

  static constexpr size_t kNswordCacheDegree = 9;

  Alphabet alphabet_;
  std::vector<Relation<C>> rels_;
  std::vector<size_t> id_rank_;  // indices sorted by id
  std::vector<size_t> rank_of_;  // inverse of id_rank_
  std::map<Word, std::vector<size_t>> by_lead_;
  std::set<size_t> lead_lengths_;
  mutable std::atomic<bool> verified_{false};
  mutable std::map<std::tuple<size_t, Word, Word>, LiePoly<C>> nsword_cache_;
  mutable std::shared_mutex cache_mu_;
};

enum class AmbiguityKind { Inclusion, Intersection };

inline const char* ambiguity_kind_str(AmbiguityKind k) {
  return k == AmbiguityKind::Inclusion ? "inclusion" : "intersection";
}

struct Ambiguity {
  AmbiguityKind kind;
  Word w;
  // Inclusion: offset of lead(g) inside lead(f).  Intersection: length of
  // the shared overlap between a suffix of lead(f) and a prefix of lead(g).
  size_t pos;
};

// All ambiguities of the ordered pair (f, g): every proper occurrence of
// lead(g) inside lead(f) (the self-inclusion of a relation in itself is
// excluded), then every proper suffix/prefix overlap.  Deterministic order:
// inclusions by offset, intersections by increasing overlap.
template <typename C>
std::vector<Ambiguity> find_ambiguities(const Relation<C>& f, const Relation<C>& g) {
  std::vector<Ambiguity> out;
  const Word& fl = f.lead;
  const Word& gl = g.lead;
  bool same = f.id == g.id;
  if (gl.size() <= fl.size()) {
    for (size_t off = 0; off + gl.size() <= fl.size(); ++off) {
      if (fl.compare(off, gl.size(), gl) != 0) continue;
      if (same && off == 0 && gl.size() == fl.size()) continue;  // f - f is identically 0
      out.push_back(Ambiguity{AmbiguityKind::Inclusion, fl, off});
    }
  }
  size_t max_overlap = std::min(fl.size(), gl.size()) - 1;
  for (size_t o = 1; o <= max_overlap; ++o) {
    if (fl.compare(fl.size() - o, o, gl, 0, o) != 0) continue;
    Word w = fl + gl.substr(o);
    out.push_back(Ambiguity{AmbiguityKind::Intersection, std::move(w), o});
  }
  return out;
}

// The composition polynomial (f,g)_w.  Leading words w cancel, so the
// result sits strictly below w in deg-lex.
template <typename C>
LiePoly<C> composition(const RelationSet<C>& S, size_t f, size_t g, const Ambiguity& amb) {
  const Word& fl = S[f].lead;
  const Word& gl = S[g].lead;
  if (amb.kind == AmbiguityKind::Inclusion) {
    Word a = amb.w.substr(0, amb.pos);
    Word b = amb.w.substr(amb.pos + gl.size());
    LiePoly<C> r = S[f].poly;
    r -= S.special_normal_sword(g, a, b);
    return r;
  }
  Word b = gl.substr(amb.pos);             // w = lead(f) b
  Word a = amb.w.substr(0, fl.size() - amb.pos);  // w = a lead(g)
  LiePoly<C> r = S.special_normal_sword(f, Word(), b);
  r -= S.special_normal_sword(g, a, Word());
  return r;
}

namespace detail {

template <typename C>
bool reduce_step(LiePoly<C>& h, const RelationSet<C>& S, const Word& t,
                 typename RelationSet<C>::Occurrence occ) {
  const Word& lead = S[occ.rel].lead;
  Word a = t.substr(0, occ.offset);
  Word b = t.substr(occ.offset + lead.size());
  C coeff = h.terms.at(t);
  LiePoly<C> ns = S.special_normal_sword(occ.rel, a, b);
  ns.scale(coeff);
  h -= ns;
  return true;
}

}  // namespace detail

// Canonical normal form: repeatedly eliminate the greatest reducible
// support word.  Deterministic (greatest word, least relation id, leftmost
// occurrence) and terminating because every step replaces a word by
// strictly smaller ones under the deg-lex well-order.
template <typename C>
LiePoly<C> reduce(LiePoly<C> h, const RelationSet<C>& S) {
  std::set<Word, DegLexLess> irreducible;
  for (;;) {
    bool stepped = false;
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it) {
      const Word& t = it->first;
      if (irreducible.count(t)) continue;
      auto occ = S.find_reduction(t);
      if (!occ) {
        irreducible.insert(t);
        continue;
      }
      detail::reduce_step(h, S, t, *occ);
      stepped = true;
      break;
    }
    if (!stepped) return h;
  }
}

// Reduction with a randomized choice of word, relation and occurrence.
// Ends at the same normal form as reduce() whenever S is a GSB; used to
// exercise confluence.
template <typename C>
LiePoly<C> reduce(LiePoly<C> h, const RelationSet<C>& S, std::mt19937_64& rng) {
  for (;;) {
    struct Hit {
      Word t;
      typename RelationSet<C>::Occurrence occ;
    };
    std::vector<Hit> hits;
    for (const auto& [t, c] : h.terms)
      for (auto occ : S.all_reductions(t)) hits.push_back(Hit{t, occ});
    if (hits.empty()) return h;
    size_t pick = std::uniform_int_distribution<size_t>(0, hits.size() - 1)(rng);
    detail::reduce_step(h, S, hits[pick].t, hits[pick].occ);
  }
}

template <typename C>
struct CompositionRecord {
  std::string f_id, g_id;
  AmbiguityKind kind;
  Word w;
  size_t pos;
  LiePoly<C> remainder;
  bool ok() const { return remainder.zero(); }
};

template <typename C>
struct CompositionReport {
  std::vector<CompositionRecord<C>> records;
  bool pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CompositionRecord<C>& r) { return r.ok(); });
  }
  size_t failures() const {
    return static_cast<size_t>(
        std::count_if(records.begin(), records.end(),
                      [](const CompositionRecord<C>& r) { return !r.ok(); }));
  }
};

// Computes and reduces every composition of every ordered pair.  Failures
// are data, not errors.  Marks S verified iff every remainder vanishes.
// Records are sorted by (f id, g id, ambiguity word, kind, position).
template <typename C>
CompositionReport<C> check_gsb(const RelationSet<C>& S, unsigned threads = 1) {
  struct Job {
    size_t f, g;
    Ambiguity amb;
  };
  std::vector<Job> jobs;
  for (size_t f = 0; f < S.size(); ++f)
    for (size_t g = 0; g < S.size(); ++g)
      for (Ambiguity& amb : find_ambiguities(S[f], S[g]))
        jobs.push_back(Job{f, g, std::move(amb)});

  CompositionReport<C> report;
  report.records.resize(jobs.size());
  auto run = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const Job& job = jobs[i];
      LiePoly<C> rem = reduce(composition(S, job.f, job.g, job.amb), S);
      report.records[i] = CompositionRecord<C>{S[job.f].id, S[job.g].id, job.amb.kind,
                                               job.amb.w, job.amb.pos, std::move(rem)};
    }
  };
  if (threads <= 1 || jobs.size() < 2) {
    run(0, jobs.size());
  } else {
    size_t n = jobs.size();
    size_t workers = std::min<size_t>(threads, n);
    std::vector<std::future<void>> futs;
    for (size_t w = 0; w < workers; ++w) {
      size_t begin = n * w / workers, end = n * (w + 1) / workers;
      futs.push_back(std::async(std::launch::async, run, begin, end));
    }
    for (auto& f : futs) f.get();
  }

  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CompositionRecord<C>& a, const CompositionRecord<C>& b) {
                     return std::tie(a.f_id, a.g_id, a.w, a.kind, a.pos) <
                            std::tie(b.f_id, b.g_id, b.w, b.kind, b.pos);
                   });
  S.mark_verified(report.pass());
  return report;
}

// All ALSWs of degree <= max_deg whose carrier avoids every leading word;
// their NLSWs are the degree-truncated Irr(S).  Sorted deg-lex ascending.
template <typename C>
std::vector<Word> irr_enumerate(const RelationSet<C>& S, size_t max_deg) {
  if (max_deg < 1) throw PreconditionError("irr_enumerate: max_deg must be >= 1");
  std::vector<Word> out;
  for (const Word& w : alsw_list(S.alphabet().size(), max_deg)) {
    bool hit = false;
    for (size_t i = 0; i < S.size() && !hit; ++i) hit = w.find(S[i].lead) != Word::npos;
    if (!hit) out.push_back(w);
  }
  return out;
}

// Membership in Id(S), valid only after check_gsb passed on S.
template <typename C>
bool ideal_member(const LiePoly<C>& f, const RelationSet<C>& S) {
  if (!S.verified())
    throw UnverifiedBasis("ideal_member needs a relation set with a passing composition check");
  return reduce(f, S).zero();
}

template <typename C>
struct CompletionOutcome {
  RelationSet<C> relations;
  bool completed;
  size_t added;
};

// Bounded Knuth-Bendix-style completion: append reduced nonzero
// compositions as fresh relations until none remain or a bound is hit.
// Experimental plumbing for exploring non-confluent inputs.
template <typename C>
CompletionOutcome<C> lie_complete_bounded(const RelationSet<C>& S, size_t max_deg,
                                          size_t max_iter) {
  RelationSet<C> work(S.alphabet());
  for (size_t i = 0; i < S.size(); ++i) work.add(S[i].id, S[i].poly);
  size_t added = 0;
  for (size_t iter = 0; iter < max_iter; ++iter) {
    CompositionReport<C> rep = check_gsb(work);
    const CompositionRecord<C>* bad = nullptr;
    for (const auto& r : rep.records)
      if (!r.ok()) {
        bad = &r;
        break;
      }
    if (!bad) return CompletionOutcome<C>{std::move(work), true, added};
    if (bad->remainder.leading_word().size() > max_deg)
      return CompletionOutcome<C>{std::move(work), false, added};
    work.add("C" + std::to_string(++added), bad->remainder);
  }
  return CompletionOutcome<C>{std::move(work), false, added};
}

template <typename C>
std::string record_line(const CompositionRecord<C>& r, const Alphabet& a) {
  std::string line = "f=" + r.f_id + " g=" + r.g_id + " kind=";
  line += ambiguity_kind_str(r.kind);
  line += " w=" + a.str(r.w, ".");
  line += " nsupp=" + std::to_string(r.remainder.terms.size());
  line += r.ok() ? " pass" : " fail";
  return line;
}

template <typename C>
std::vector<std::string> report_lines(const CompositionReport<C>& rep, const Alphabet& a) {
  std::vector<std::string> lines;
  lines.reserve(rep.records.size());
  for (const auto& r : rep.records) lines.push_back(record_line(r, a));
  return lines;
}

}  // namespace liegsb
