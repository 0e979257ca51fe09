#include "liegsb/drinfeld_kohno.hpp"

#include <map>
#include <set>
#include <tuple>

namespace liegsb {

namespace {

Alphabet dk_alphabet(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) names.push_back(DKPresentation::generator_name(i, j));
  return Alphabet(std::move(names));
}

}  // namespace

std::string DKPresentation::generator_name(int i, int j) {
  if (j <= 9) return "t" + std::to_string(i) + std::to_string(j);
  return "t" + std::to_string(i) + "_" + std::to_string(j);
}

DKPresentation::DKPresentation(int n) : n_(n), relations_(dk_alphabet(n)) {
  if (n <= 2) throw PreconditionError("Drinfeld-Kohno algebra needs n > 2");

  auto pair_word = [&](Letter hi, Letter lo) {
    Word w;
    w.push_back(static_cast<char>(hi));
    w.push_back(static_cast<char>(lo));
    return w;
  };
  auto idx = [&](int a, int b) {
    return "[" + std::to_string(a) + "," + std::to_string(b);
  };

  // (4): [t_ij, t_kl] = 0 for k < i < j, k < l, l not in {i, j}.
  for (int k = 1; k <= n - 1; ++k)
    for (int i = k + 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j)
        for (int l = k + 1; l <= n - 1; ++l) {
          if (l == i || l == j) continue;
          LiePoly<Zint> p = lie_monomial<Zint>(pair_word(gen(i, j), gen(k, l)));
          relations_.add("DK4" + idx(i, j) + "," + std::to_string(k) + "," +
                             std::to_string(l) + "]",
                         std::move(p));
          info_.push_back(RelInfo{4, {i, j, k, l}});
        }
  // (5): [t_jk, t_ij] + [t_ik, t_ij] = 0 and
  // (6): [t_jk, t_ik] - [t_ik, t_ij] = 0 for i < j < k.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      for (int k = j + 1; k <= n - 1; ++k) {
        LiePoly<Zint> p5;
        p5.add(pair_word(gen(j, k), gen(i, j)), Zint(1));
        p5.add(pair_word(gen(i, k), gen(i, j)), Zint(1));
        relations_.add("DK5" + idx(i, j) + "," + std::to_string(k) + "]", std::move(p5));
        info_.push_back(RelInfo{5, {i, j, k, 0}});

        LiePoly<Zint> p6;
        p6.add(pair_word(gen(j, k), gen(i, k)), Zint(1));
        p6.add(pair_word(gen(i, k), gen(i, j)), Zint(-1));
        relations_.add("DK6" + idx(i, j) + "," + std::to_string(k) + "]", std::move(p6));
        info_.push_back(RelInfo{6, {i, j, k, 0}});
      }
}

Letter DKPresentation::gen(int i, int j) const {
  if (!(1 <= i && i < j && j <= n_ - 1)) throw PreconditionError("dk generator out of range");
  // Generators are listed by ascending (i, j), which matches the order.
  int pos = 0;
  for (int a = 1; a < i; ++a) pos += n_ - 1 - a;
  pos += j - i - 1;
  return static_cast<Letter>(pos);
}

std::pair<int, int> DKPresentation::indices(Letter l) const {
  int pos = l;
  for (int i = 1; i <= n_ - 1; ++i) {
    int row = n_ - 1 - i;
    if (pos < row) return {i, i + 1 + pos};
    pos -= row;
  }
  throw PreconditionError("dk letter out of range");
}

namespace {

struct ExpectedAmb {
  std::string f_id, g_id;
  Word w;
  std::string label;
  bool operator<(const ExpectedAmb& o) const {
    return std::tie(f_id, g_id, w) < std::tie(o.f_id, o.g_id, o.w);
  }
};

// The nine ambiguity families, enumerated directly over index tuples
// (independently of the overlap scanner).
std::vector<ExpectedAmb> expected_ambiguities(const DKPresentation& dk) {
  int n = dk.n();
  std::vector<ExpectedAmb> out;
  auto id4 = [](int i, int j, int k, int l) {
    return "DK4[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
           "," + std::to_string(l) + "]";
  };
  auto id56 = [](int fam, int i, int j, int k) {
    return "DK" + std::to_string(fam) + "[" + std::to_string(i) + "," + std::to_string(j) +
           "," + std::to_string(k) + "]";
  };
  auto word3 = [&](Letter a, Letter b, Letter c) {
    Word w;
    w.push_back(static_cast<char>(a));
    w.push_back(static_cast<char>(b));
    w.push_back(static_cast<char>(c));
    return w;
  };
  auto push = [&](std::string f, std::string g, Word w, int ff, int gf) {
    auto family_no = [](int fam) { return fam - 3; };  // (4),(5),(6) -> (1),(2),(3)
    out.push_back(ExpectedAmb{std::move(f), std::move(g), std::move(w),
                              "(" + std::to_string(family_no(ff)) + ")^(" +
                                  std::to_string(family_no(gf)) + ")"});
  };

  // f = DK4[i,j,k,l] (k<i<j, k<l, l neq i,j); lead t_ij t_kl.
  for (int k = 1; k <= n - 1; ++k)
    for (int i = k + 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j)
        for (int l = k + 1; l <= n - 1; ++l) {
          if (l == i || l == j) continue;
          // (1)^(1): g = DK4[k,l,m,r], lead t_kl t_mr.
          for (int m = 1; m < k; ++m)
            for (int r = m + 1; r <= n - 1; ++r) {
              if (r == k || r == l) continue;
              push(id4(i, j, k, l), id4(k, l, m, r),
                   word3(dk.gen(i, j), dk.gen(k, l), dk.gen(m, r)), 4, 4);
            }
          // (1)^(2): g = DK5[m,k,l], lead t_kl t_mk.
          for (int m = 1; m < k; ++m)
            push(id4(i, j, k, l), id56(5, m, k, l),
                 word3(dk.gen(i, j), dk.gen(k, l), dk.gen(m, k)), 4, 5);
          // (1)^(3): g = DK6[m,k,l], lead t_kl t_ml.
          for (int m = 1; m < k; ++m)
            push(id4(i, j, k, l), id56(6, m, k, l),
                 word3(dk.gen(i, j), dk.gen(k, l), dk.gen(m, l)), 4, 6);
        }

  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      for (int k = j + 1; k <= n - 1; ++k) {
        // f = DK5[i,j,k], lead t_jk t_ij.
        {
          // (2)^(1): g = DK4[i,j,m,r].
          for (int m = 1; m < i; ++m)
            for (int r = m + 1; r <= n - 1; ++r) {
              if (r == i || r == j) continue;
              push(id56(5, i, j, k), id4(i, j, m, r),
                   word3(dk.gen(j, k), dk.gen(i, j), dk.gen(m, r)), 5, 4);
            }
          // (2)^(2): g = DK5[m,i,j].
          for (int m = 1; m < i; ++m)
            push(id56(5, i, j, k), id56(5, m, i, j),
                 word3(dk.gen(j, k), dk.gen(i, j), dk.gen(m, i)), 5, 5);
          // (2)^(3): g = DK6[m,i,j].
          for (int m = 1; m < i; ++m)
            push(id56(5, i, j, k), id56(6, m, i, j),
                 word3(dk.gen(j, k), dk.gen(i, j), dk.gen(m, j)), 5, 6);
        }
        // f = DK6[i,j,k], lead t_jk t_ik.
        {
          // (3)^(1): g = DK4[i,k,m,r].
          for (int m = 1; m < i; ++m)
            for (int r = m + 1; r <= n - 1; ++r) {
              if (r == i || r == k) continue;
              push(id56(6, i, j, k), id4(i, k, m, r),
                   word3(dk.gen(j, k), dk.gen(i, k), dk.gen(m, r)), 6, 4);
            }
          // (3)^(2): g = DK5[m,i,k].
          for (int m = 1; m < i; ++m)
            push(id56(6, i, j, k), id56(5, m, i, k),
                 word3(dk.gen(j, k), dk.gen(i, k), dk.gen(m, i)), 6, 5);
          // (3)^(3): g = DK6[m,i,k].
          for (int m = 1; m < i; ++m)
            push(id56(6, i, j, k), id56(6, m, i, k),
                 word3(dk.gen(j, k), dk.gen(i, k), dk.gen(m, k)), 6, 6);
        }
      }
  return out;
}

}  // namespace

DKCheckReport dk_check(const DKPresentation& dk, unsigned threads) {
  DKCheckReport rep;
  rep.base = check_gsb(dk.relations(), threads);

  std::map<std::tuple<std::string, std::string, Word>, std::string> expected;
  for (ExpectedAmb& e : expected_ambiguities(dk))
    expected.emplace(std::make_tuple(e.f_id, e.g_id, e.w), e.label);

  std::set<std::tuple<std::string, std::string, Word>> found;
  rep.family.reserve(rep.base.records.size());
  for (const auto& rec : rep.base.records) {
    auto key = std::make_tuple(rec.f_id, rec.g_id, rec.w);
    found.insert(key);
    auto it = expected.find(key);
    if (it == expected.end() || rec.kind != AmbiguityKind::Intersection) {
      rep.family.push_back("?");
      ++rep.unclassified;
    } else {
      rep.family.push_back(it->second);
    }
  }
  rep.inventory_match = found.size() == expected.size() && rep.unclassified == 0;
  rep.pass = rep.base.pass() && rep.inventory_match;
  dk.relations().mark_verified(rep.pass);
  return rep;
}

DKCheckReport dk_check(int n, unsigned threads) {
  DKPresentation dk(n);
  return dk_check(dk, threads);
}

std::vector<Word> dk_basis(int n, size_t max_deg) {
  DKPresentation dk(n);
  return irr_enumerate(dk.relations(), max_deg);
}

std::vector<long long> dk_ranks(int n, size_t max_deg) {
  std::vector<long long> counts(max_deg, 0);
  for (const Word& w : dk_basis(n, max_deg)) ++counts[w.size() - 1];
  return counts;
}

std::vector<long long> dk_witt_ranks(int n, size_t max_deg) {
  std::vector<long long> ranks(max_deg, 0);
  for (size_t d = 1; d <= max_deg; ++d) {
    long long total = 0;
    for (int i = 1; i <= n - 2; ++i) {
      long long q = n - 1 - i;
      if (q >= 1) total += witt_dimension(q, static_cast<long long>(d));
    }
    ranks[d - 1] = total;
  }
  return ranks;
}

}  // namespace liegsb
