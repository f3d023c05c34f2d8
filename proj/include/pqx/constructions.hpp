#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "pqx/hypergraph.hpp"

namespace pqx {

/// Parameters of a split family member F_k(n,t) + r extra edges. t = 1 is
/// admitted (it arises from q <= p < 2q-1 and yields a star).
struct SplitFamilySpec {
  int n = 0, k = 0, t = 0;
  uint64_t r = 0;

  static SplitFamilySpec of(int n, int k, int t, uint64_t r);
};

/// F_k(n,t): all k-subsets of [n] meeting [t]. e = C(n,k) - C(n-t,k).
Hypergraph split_hypergraph(int n, int k, int t);

/// Canonical member of the split family: F_k(n,t) plus the first r k-subsets
/// of {t+1..n} in colex order.
Hypergraph split_family_member(int n, int k, int t, uint64_t r);

/// Like split_family_member but the r extra edges avoiding [t] are sampled
/// uniformly without replacement.
Hypergraph split_family_member_random(int n, int k, int t, uint64_t r, std::mt19937_64& rng);

/// Euclidean decomposition p-1 = t(q-1) + r with 0 <= r < q-1.
std::pair<int, uint64_t> tq_decompose(int p, int q);

/// phi_k(n,p,q) = C(n,k) - C(n-t,k) + r: the edge count of split family
/// members, and the conjectured extremal value.
uint64_t phi(int n, int k, int p, int q);

/// K_{p-1} plus a pendant edge {p-1,p} on p vertices; e = C(p-1,2) + 1.
Hypergraph complete_plus_edge(int p);

/// ceil((n(q-1) - p(k-1)) / (p-1)): chromatic number of the q-wise Kneser
/// p-uniform hypergraph. raw may be <= 0 for edgeless instances; value
/// clamps it to 1 (our convention, reported alongside).
struct SarkariaChi {
  long long raw = 0;
  long long value = 0;
};
SarkariaChi sarkaria_chi(int n, int k, int p, int q);

/// Thresholds above which the extremal formula is proven: the simple 2p^2
/// bound and the refined one. The division term of the refined bound is
/// floored; exact_division reports whether flooring was needed.
struct TheoremThreshold {
  long long simple = 0;
  long long refined = 0;
  bool exact_division = true;
};
TheoremThreshold theorem_threshold(int p, int q);

}  // namespace pqx
