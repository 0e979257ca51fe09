#include <doctest.h>

#include "liegsb/liepoly.hpp"
#include "oracles.hpp"

using namespace liegsb;

namespace {
Word W(std::initializer_list<int> ls) { return word_of(ls); }
constexpr int a = 0, b = 1;

template <typename C>
AssocPoly<C> AP(std::initializer_list<std::pair<Word, long long>> ts) {
  AssocPoly<C> p;
  for (const auto& [w, c] : ts) p.add(w, C(c));
  return p;
}
template <typename C>
LiePoly<C> LP(std::initializer_list<std::pair<Word, long long>> ts) {
  LiePoly<C> p;
  for (const auto& [w, c] : ts) p.add(w, C(c));
  return p;
}
}  // namespace

TEST_CASE("expand examples") {
  CHECK(expand<Zint>(BracketTree(a)) == AP<Zint>({{W({a}), 1}}));
  BracketTree ba{BracketTree(b), BracketTree(a)};
  CHECK(expand<Zint>(ba) == AP<Zint>({{W({b, a}), 1}, {W({a, b}), -1}}));
  BracketTree baa{ba, BracketTree(a)};
  CHECK(expand<Zint>(baa) ==
        AP<Zint>({{W({b, a, a}), 1}, {W({a, b, a}), -2}, {W({a, a, b}), 1}}));
}

TEST_CASE("lie_from_assoc examples") {
  CHECK(lie_from_assoc(AP<Zint>({{W({b, a}), 1}, {W({a, b}), -1}})) ==
        LP<Zint>({{W({b, a}), 1}}));
  // antisymmetry: [[a][b]] + [[b][a]] expands to zero
  AssocPoly<Zint> sum = expand<Zint>(BracketTree{BracketTree(a), BracketTree(b)});
  sum += expand<Zint>(BracketTree{BracketTree(b), BracketTree(a)});
  CHECK(sum.zero());
  CHECK(lie_from_assoc(sum).zero());
  CHECK(lie_from_assoc(AP<Zint>({{W({b, a, a}), 1}, {W({a, b, a}), -2}, {W({a, a, b}), 1}})) ==
        LP<Zint>({{W({b, a, a}), 1}}));
  CHECK_THROWS_AS(lie_from_assoc(AP<Zint>({{W({a, b}), 1}})), NotLieElement);
  CHECK_THROWS_AS(lie_from_assoc(AP<Zint>({{W({b, a}), 2}, {W({a, b}), -1}})), NotLieElement);
}

TEST_CASE("bracket examples") {
  LiePoly<Zint> fb = LP<Zint>({{W({b}), 1}});
  LiePoly<Zint> fa = LP<Zint>({{W({a}), 1}});
  CHECK(bracket(fb, fa) == LP<Zint>({{W({b, a}), 1}}));
  CHECK(bracket(fa, fb) == LP<Zint>({{W({b, a}), -1}}));
  CHECK(bracket(LP<Zint>({{W({b, a}), 1}}), fa) == LP<Zint>({{W({b, a, a}), 1}}));
}

TEST_CASE("left_normed examples") {
  // alphabet y < x < z
  constexpr int y = 0, x = 1, z = 2;
  CHECK(left_normed<Zint>(z, Word()) == LP<Zint>({{W({z}), 1}}));
  CHECK(left_normed<Zint>(z, W({x})) == LP<Zint>({{W({z, x}), 1}}));
  LiePoly<Zint> zxy = left_normed<Zint>(z, W({x, y}));
  CHECK(zxy.leading_word() == W({z, x, y}));
  CHECK(zxy.leading_coeff() == Zint(1));
  // |_z x y_| = [z,[x,y]] + [[z,y],x] in NLSW coordinates
  CHECK(zxy == LP<Zint>({{W({z, x, y}), 1}, {W({z, y, x}), 1}}));
}

TEST_CASE("leading-word law: every NLSW expands with lead w, coefficient 1") {
  for (size_t q : {2u, 3u}) {
    size_t dmax = q == 2 ? 8 : 6;
    for (const Word& w : alsw_list(q, dmax)) {
      AssocPoly<Zint> e = expand<Zint>(standard_bracketing(w));
      CHECK(e.leading().first == w);
      CHECK(e.leading().second == Zint(1));
    }
  }
}

TEST_CASE("special bracketing expands with leading word aub") {
  // every ALSW w and every ALSW factor u inside it, small alphabets
  for (size_t q : {2u, 3u}) {
    size_t dmax = q == 2 ? 7 : 5;
    for (const Word& w : alsw_list(q, dmax)) {
      for (size_t i = 0; i < w.size(); ++i) {
        for (size_t len = 1; i + len <= w.size(); ++len) {
          Word u = w.substr(i, len);
          if (!is_alsw(u)) continue;
          SpecialBracketing sb = special_bracketing(w.substr(0, i), u, w.substr(i + len));
          CHECK(sb.designated->carrier() == u);
          AssocPoly<Zint> e = expand<Zint>(*sb.tree);
          CHECK(e.leading().first == w);
          CHECK(e.leading().second == Zint(1));
        }
      }
    }
  }
}

TEST_CASE("round-trip lie_from_assoc(expand_lin(f)) = f on random polynomials") {
  oracles::Rng rng(20240811);
  std::vector<Word> pool = alsw_list(3, 6);
  for (int trial = 0; trial < 200; ++trial) {
    LiePoly<Rational> f = oracles::random_lie_poly<Rational>(rng, pool, 6);
    CHECK(lie_from_assoc(expand_lin(f)) == f);
  }
  for (int trial = 0; trial < 100; ++trial) {
    LiePoly<Zint> f = oracles::random_lie_poly<Zint>(rng, pool, 6);
    CHECK(lie_from_assoc(expand_lin(f)) == f);
  }
}

TEST_CASE("antisymmetry and Jacobi on random polynomials") {
  oracles::Rng rng(7);
  std::vector<Word> pool = alsw_list(2, 3);
  for (int trial = 0; trial < 60; ++trial) {
    LiePoly<Rational> f = oracles::random_lie_poly<Rational>(rng, pool, 3);
    LiePoly<Rational> g = oracles::random_lie_poly<Rational>(rng, pool, 3);
    LiePoly<Rational> h = oracles::random_lie_poly<Rational>(rng, pool, 3);
    CHECK(bracket(f, f).zero());
    LiePoly<Rational> jac = bracket(bracket(f, g), h);
    jac += bracket(bracket(g, h), f);
    jac += bracket(bracket(h, f), g);
    CHECK(jac.zero());
  }
}

TEST_CASE("degree-wise dimension of the NLSW span equals W(q,d)") {
  for (size_t q : {2u, 3u}) {
    for (size_t d = 1; d <= 6; ++d) {
      std::vector<oracles::SparseRow> rows;
      long long count = 0;
      for (const Word& w : alsw_list(q, d)) {
        if (w.size() != d) continue;
        ++count;
        rows.push_back(oracles::to_row<Rational>(
            expand_lin(lie_monomial<Rational>(w)).terms));
      }
      CHECK(count == witt_dimension(q, d));
      CHECK(oracles::exact_rank(std::move(rows)) == static_cast<size_t>(count));
    }
  }
}

TEST_CASE("Z mode and Q mode agree on integer inputs") {
  oracles::Rng rng(99);
  std::vector<Word> pool = alsw_list(2, 5);
  for (int trial = 0; trial < 50; ++trial) {
    LiePoly<Zint> f = oracles::random_lie_poly<Zint>(rng, pool, 4);
    LiePoly<Zint> g = oracles::random_lie_poly<Zint>(rng, pool, 4);
    LiePoly<Zint> bz = bracket(f, g);
    LiePoly<Rational> fq, gq;
    for (const auto& [w, c] : f.terms) fq.add(w, Rational(c.value()));
    for (const auto& [w, c] : g.terms) gq.add(w, Rational(c.value()));
    LiePoly<Rational> bq = bracket(fq, gq);
    CHECK(bq.terms.size() == bz.terms.size());
    for (const auto& [w, c] : bz.terms) CHECK(bq.terms.at(w) == Rational(c.value()));
  }
}

TEST_CASE("zero polynomials refuse to give a leading word") {
  LiePoly<Zint> z;
  CHECK_THROWS_AS(z.leading_word(), PreconditionError);
  AssocPoly<Zint> az;
  CHECK_THROWS_AS(az.leading(), PreconditionError);
}

TEST_CASE("coefficient arithmetic is exact and overflow-checked") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(3, 7) / Rational(3, 7)).is_one());
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Zint(1) / Zint(2), NonUnitCoefficient);
  CHECK(Zint(5) / Zint(-1) == Zint(-5));
  long long big = 1ll << 62;
  CHECK_THROWS_AS(Zint(big) + Zint(big), ArithmeticOverflow);
  CHECK_THROWS_AS(Zint(big) * Zint(4), ArithmeticOverflow);
}
