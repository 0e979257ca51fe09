#pragma once

#include <array>
#include <string>
#include <vector>

#include "liegsb/gsb.hpp"

namespace liegsb {

// The Drinfeld-Kohno presentation Lie_Z(T | S) for n > 2: generators
// t_ij, 1 <= i < j <= n-1, ordered by t_ij < t_kl iff i < k or
// (i = k and j < l), and the three oriented relation families
//   (4)  [t_ij, t_kl]                     k < i < j, k < l, l not in {i,j}
//   (5)  [t_jk, t_ij] + [t_ik, t_ij]      i < j < k
//   (6)  [t_jk, t_ik] - [t_ik, t_ij]      i < j < k
// Coefficients are Z; this module never leaves ring mode.
class DKPresentation {
 public:
  explicit DKPresentation(int n);

  int n() const { return n_; }
  const Alphabet& alphabet() const { return relations_.alphabet(); }
  const RelationSet<Zint>& relations() const { return relations_; }

  Letter gen(int i, int j) const;  // i < j
  std::pair<int, int> indices(Letter l) const;

  struct RelInfo {
    int family;               // 4, 5 or 6
    std::array<int, 4> idx;   // (i,j,k,l) for family 4; (i,j,k,0) otherwise
  };
  const std::vector<RelInfo>& rel_info() const { return info_; }

  static std::string generator_name(int i, int j);

 private:
  int n_;
  RelationSet<Zint> relations_;
  std::vector<RelInfo> info_;
};

inline DKPresentation dk_build(int n) { return DKPresentation(n); }

struct DKCheckReport {
  CompositionReport<Zint> base;
  // Parallel to base.records: family label "(a)^(b)" with (1),(2),(3)
  // naming the three relation families in order, or "?" when the
  // ambiguity falls outside the expected inventory.
  std::vector<std::string> family;
  size_t unclassified = 0;
  // Found ambiguities == the nine families enumerated independently over
  // index tuples (no extras, none missing).
  bool inventory_match = false;
  bool pass = false;
};

DKCheckReport dk_check(int n, unsigned threads = 1);
DKCheckReport dk_check(const DKPresentation& dk, unsigned threads = 1);

// Irr(S) truncated by degree: ALSWs over T avoiding every leading word.
std::vector<Word> dk_basis(int n, size_t max_deg);

// Per-degree counts of dk_basis, degrees 1..max_deg.
std::vector<long long> dk_ranks(int n, size_t max_deg);

// The semidirect-product rank oracle: sum_{i=1}^{n-2} W(n-1-i, d).
std::vector<long long> dk_witt_ranks(int n, size_t max_deg);

}  // namespace liegsb
