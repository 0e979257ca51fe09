#include <doctest.h>

#include <map>
#include <set>

#include "liegsb/kukin.hpp"
#include "oracles.hpp"

using namespace liegsb;

namespace {
Word W(std::initializer_list<int> ls) { return word_of(ls); }
constexpr int y = 0, x = 1;  // base alphabet y < x

SgpPresentation commutative() {
  return SgpPresentation{Alphabet({"y", "x"}), {{W({x, y}), W({y, x})}}};
}
SgpPresentation idempotent() {
  return SgpPresentation{Alphabet({"y", "x"}), {{W({x, x}), W({x})}}};
}
SgpPresentation free_sgp() { return SgpPresentation{Alphabet({"y", "x"}), {}}; }
}  // namespace

TEST_CASE("context alphabet and order: hatted > z > unhatted, hats like originals") {
  KukinContext<Rational> ctx(commutative(), 3);
  const Alphabet& la = ctx.lie_alphabet();
  REQUIRE(la.size() == 5);
  CHECK(la.name(0) == "y");
  CHECK(la.name(1) == "x");
  CHECK(la.name(2) == "z");
  CHECK(la.name(3) == "y^");
  CHECK(la.name(4) == "x^");
  CHECK(ctx.z() == 2);
  CHECK(ctx.hat(x) == 4);
  CHECK(ctx.hat(y) == 3);
  CHECK(ctx.hat(x) > ctx.hat(y));
  CHECK(ctx.hat(y) > ctx.z());
  CHECK(ctx.z() > x);
  CHECK_THROWS_AS(ctx.hat(ctx.z()), PreconditionError);
  SUBCASE("reserved names are rejected") {
    SgpPresentation bad{Alphabet({"z", "x"}), {}};
    CHECK_THROWS_AS(KukinContext<Rational>(bad, 3), PreconditionError);
  }
}

TEST_CASE("build_s1") {
  SUBCASE("free semigroup: only families (1) and (2)") {
    KukinContext<Rational> ctx(free_sgp(), 4);
    CHECK(ctx.relations().size() == 6);  // 4 of family (1), 2 of family (2)
    size_t k1 = 0, k2 = 0, k3 = 0;
    for (size_t i = 0; i < ctx.relations().size(); ++i) {
      const std::string& id = ctx.relations()[i].id;
      k1 += id.rfind("K1", 0) == 0;
      k2 += id.rfind("K2", 0) == 0;
      k3 += id.rfind("K3", 0) == 0;
    }
    CHECK(k1 == 4);
    CHECK(k2 == 2);
    CHECK(k3 == 0);
  }
  SUBCASE("commutative with bound 2: exactly one (3)' instance") {
    KukinContext<Rational> ctx(commutative(), 2);
    REQUIRE(ctx.relations().size() == 7);
    const Relation<Rational>* k3 = nullptr;
    for (size_t i = 0; i < ctx.relations().size(); ++i)
      if (ctx.relations()[i].id.rfind("K3", 0) == 0) k3 = &ctx.relations()[i];
    REQUIRE(k3 != nullptr);
    LiePoly<Rational> expect = left_normed<Rational>(ctx.z(), W({x, y}));
    expect -= left_normed<Rational>(ctx.z(), W({y, x}));
    CHECK(k3->poly == expect);
    CHECK(k3->lead == W({ctx.z(), x, y}));
  }
  SUBCASE("relation (2) for x has leading word x^ z") {
    KukinContext<Rational> ctx(commutative(), 2);
    for (size_t i = 0; i < ctx.relations().size(); ++i) {
      if (ctx.relations()[i].id == "K2[x]") {
        CHECK(ctx.relations()[i].lead == W({ctx.hat(x), ctx.z()}));
        return;
      }
    }
    FAIL("missing K2[x]");
  }
}

TEST_CASE("leading word of |_z u_| is z u") {
  KukinContext<Rational> ctx(commutative(), 6);
  oracles::Rng rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = rng.word(2, 1, 6);
    LiePoly<Rational> p = left_normed<Rational>(ctx.z(), u);
    CHECK(p.leading_word() == Word(1, static_cast<char>(ctx.z())) + u);
    CHECK(p.leading_coeff().is_one());
  }
}

TEST_CASE("verify_s1") {
  SUBCASE("free semigroup: passes with zero ambiguities") {
    KukinContext<Rational> ctx(free_sgp(), 4);
    S1Report<Rational> rep = verify_s1(ctx);
    CHECK(rep.pass);
    CHECK(rep.base.records.empty());
    CHECK(rep.censored_count == 0);
  }
  SUBCASE("commutative, bound 4: passes, both expected kinds only") {
    KukinContext<Rational> ctx(commutative(), 4);
    S1Report<Rational> rep = verify_s1(ctx);
    CHECK(rep.pass);
    CHECK(rep.unexpected_kind == 0);
    CHECK(!rep.base.records.empty());
    bool saw_23 = false, saw_33 = false;
    for (size_t i = 0; i < rep.classes.size(); ++i) {
      saw_23 |= rep.classes[i] == S1Class::HatZWithZWord;
      saw_33 |= rep.classes[i] == S1Class::ZWordInZWord;
      if (!rep.base.records[i].ok()) CHECK(rep.censored[i]);
    }
    CHECK(saw_23);
    CHECK(saw_33);
  }
  SUBCASE("idempotent, bound 4: passes") {
    KukinContext<Rational> ctx(idempotent(), 4);
    S1Report<Rational> rep = verify_s1(ctx);
    CHECK(rep.pass);
    CHECK(rep.unexpected_kind == 0);
  }
  SUBCASE("censored ambiguities sit at the instantiation boundary") {
    KukinContext<Rational> ctx(commutative(), 3);
    S1Report<Rational> rep = verify_s1(ctx);
    CHECK(rep.pass);
    for (size_t i = 0; i < rep.base.records.size(); ++i) {
      if (!rep.censored[i]) continue;
      CHECK(rep.classes[i] == S1Class::HatZWithZWord);
      CHECK(rep.base.records[i].w.size() == ctx.bound() + 2);
    }
  }
}

TEST_CASE("the (2)^(3)' composition behaves like |_z x u_| - |_z x v_|") {
  // For f = K2[x] and g = K3[xy=yx] at w = x^ z x y, the composition is
  // congruent to |_z x x y_| - |_z x y x_| modulo lower terms: their
  // difference reduces to zero, and so does each piece on its own once
  // the bound admits the length-3 pairs.
  KukinContext<Rational> ctx(commutative(), 4);
  const RelationSet<Rational>& S = ctx.relations();
  size_t f = S.size(), g = S.size();
  for (size_t i = 0; i < S.size(); ++i) {
    if (S[i].id == "K2[x]") f = i;
    if (S[i].id == "K3[x.y=y.x]") g = i;
  }
  REQUIRE(f < S.size());
  REQUIRE(g < S.size());
  auto ambs = find_ambiguities(S[f], S[g]);
  REQUIRE(ambs.size() == 1);
  CHECK(ambs[0].kind == AmbiguityKind::Intersection);
  CHECK(ambs[0].w == W({ctx.hat(x), ctx.z(), x, y}));
  LiePoly<Rational> comp = composition(S, f, g, ambs[0]);
  LiePoly<Rational> target = left_normed<Rational>(ctx.z(), W({x, x, y}));
  target -= left_normed<Rational>(ctx.z(), W({x, y, x}));
  LiePoly<Rational> diff = comp;
  diff -= target;
  CHECK(reduce(diff, S).zero());
  CHECK(reduce(comp, S).zero());
  CHECK(reduce(target, S).zero());
}

TEST_CASE("lie_word_equal") {
  KukinContext<Rational> ctx(commutative(), 6);
  SUBCASE("examples") {
    CHECK(lie_word_equal(W({x, y}), W({x, y}), ctx));
    CHECK(lie_word_equal(W({x, y}), W({y, x}), ctx));
    CHECK_FALSE(lie_word_equal(W({x}), W({y}), ctx));
  }
  SUBCASE("degree bound is enforced") {
    Word longw(7, static_cast<char>(x));
    CHECK_THROWS_AS(lie_word_equal(longw, W({x}), ctx), PreconditionError);
  }
  SUBCASE("empty words are rejected") {
    CHECK_THROWS_AS(lie_word_equal(Word(), W({x}), ctx), PreconditionError);
  }
}

TEST_CASE("normal-form shape under canonical reduction") {
  // The underlying statement is that |_z u_| and |_z nf(u)_| share one
  // normal form of left-normed shape.  Canonical reduction rewrites
  // non-leading support words too, so the right renderings are: the two
  // canonical forms coincide, their difference reduces to zero, the
  // leading term is exactly z nf(u) with coefficient 1, and no hatted
  // letter survives anywhere.
  for (auto make : {commutative, idempotent}) {
    KukinContext<Rational> ctx(make(), 5);
    for (const Word& u : all_words(ctx.base_alphabet(), 5)) {
      LiePoly<Rational> nf = ctx.z_normal_form(u);
      Word c = sgp_normal_form(u, ctx.rewriting());
      CHECK(nf == ctx.z_normal_form(c));
      LiePoly<Rational> diff = left_normed<Rational>(ctx.z(), u);
      diff -= left_normed<Rational>(ctx.z(), c);
      CHECK(reduce(diff, ctx.relations()).zero());
      REQUIRE(!nf.zero());
      CHECK(nf.leading_word() == Word(1, static_cast<char>(ctx.z())) + c);
      CHECK(nf.leading_coeff().is_one());
      for (const auto& [w, coeff] : nf.terms)
        for (char l : w) CHECK_FALSE(ctx.is_hatted(static_cast<Letter>(l)));
    }
  }
}

TEST_CASE("main equivalence: Lie word problem == semigroup word problem, exhaustive") {
  for (auto make : {commutative, idempotent}) {
    KukinContext<Rational> ctx(make(), 4);
    std::vector<Word> words = all_words(ctx.base_alphabet(), 4);
    for (const Word& u : words)
      for (const Word& v : words) {
        bool lie = lie_word_equal(u, v, ctx);
        bool sgp =
            sgp_normal_form(u, ctx.rewriting()) == sgp_normal_form(v, ctx.rewriting());
        CHECK(lie == sgp);
      }
  }
}

TEST_CASE("hat-shift identity: |_z a u1 b_| reduces like |_z u1 rev(a)^ b_|") {
  oracles::Rng rng(2718);
  for (auto make : {commutative, idempotent}) {
    KukinContext<Rational> ctx(make(), 6);
    for (int trial = 0; trial < 60; ++trial) {
      Word a = rng.word(2, 1, 2);
      Word u1 = rng.word(2, 1, 2);
      Word b = rng.word(2, 0, 2);
      if (a.size() + u1.size() + b.size() > ctx.bound()) continue;
      Word plain = a + u1 + b;
      Word shifted = u1 + ctx.hat_reverse(a) + b;
      CHECK(ctx.z_normal_form(plain) == ctx.z_normal_form(shifted));
    }
  }
}

TEST_CASE("three-letter base alphabets work the same way") {
  // w < y < x with x and y commuting and w absorbing into x from the left
  SgpPresentation p{Alphabet({"w", "y", "x"}),
                    {{word_of({2, 1}), word_of({1, 2})}, {word_of({2, 0}), word_of({2})}}};
  KukinContext<Rational> ctx(p, 4);
  REQUIRE(ctx.lie_alphabet().size() == 7);
  CHECK(ctx.lie_alphabet().name(3) == "z");
  CHECK(ctx.lie_alphabet().name(6) == "x^");
  // family (1) has |A|^2 = 9 members, family (2) has 3
  size_t k1 = 0, k2 = 0;
  for (size_t i = 0; i < ctx.relations().size(); ++i) {
    k1 += ctx.relations()[i].id.rfind("K1", 0) == 0;
    k2 += ctx.relations()[i].id.rfind("K2", 0) == 0;
  }
  CHECK(k1 == 9);
  CHECK(k2 == 3);
  S1Report<Rational> rep = verify_s1(ctx);
  CHECK(rep.pass);
  CHECK(rep.unexpected_kind == 0);
  std::vector<Word> words = all_words(ctx.base_alphabet(), 4);
  for (const Word& u : words)
    for (const Word& v : words) {
      bool lie = lie_word_equal(u, v, ctx);
      bool sgp = sgp_normal_form(u, ctx.rewriting()) == sgp_normal_form(v, ctx.rewriting());
      CHECK(lie == sgp);
    }
}

TEST_CASE("soak: random presentations, word problem vs closure oracle") {
  // Random two-letter presentations whose completion succeeds quickly;
  // on each, the Lie route must agree with a breadth-first congruence
  // closure on every pair of words up to length 3.
  oracles::Rng rng(0x5eed);
  int completed = 0;
  for (int trial = 0; trial < 40 && completed < 12; ++trial) {
    SgpPresentation p{Alphabet({"y", "x"}), {}};
    size_t nrules = 1 + rng.below(2);
    for (size_t r = 0; r < nrules; ++r) {
      Word u = rng.word(2, 1, 3);
      Word v = rng.word(2, 1, 3);
      if (u == v) continue;
      p.rules.emplace_back(u, v);
    }
    if (p.rules.empty()) continue;
    KBResult kb = knuth_bendix(orient(p), 12, 60);
    if (!kb.completed) continue;
    ++completed;
    KukinContext<Rational> ctx(p, 4);
    std::vector<Word> words = all_words(p.alphabet, 3);
    std::map<Word, std::set<Word>> cls;
    for (const Word& u : words)
      if (!cls.count(u)) {
        auto closure = oracles::congruence_class(u, p.rules, 7);
        for (const Word& m : closure) cls[m] = closure;
      }
    for (const Word& u : words)
      for (const Word& v : words)
        CHECK(lie_word_equal(u, v, ctx) == (cls[u].count(v) > 0));
  }
  CHECK(completed >= 12);
}

TEST_CASE("incomplete rewriting systems are refused") {
  SgpPresentation p{Alphabet({"y", "x"}), {{W({x, y, x}), W({y, x, y})}}};
  CHECK_THROWS_AS(KukinContext<Rational>(p, 4, 12, 12), IncompleteSystem);
}
