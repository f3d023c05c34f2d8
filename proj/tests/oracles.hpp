// Test-only brute-force oracles. These stay independent of the library's
// search implementations: they enumerate power sets or subfamilies directly
// and recompute every condition from first principles.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "pqx/combinatorics.hpp"
#include "pqx/hypergraph.hpp"

namespace pqx::testing {

/// Does H contain p edges with every vertex multiplicity <= q-1? Checks all
/// C(e(H), p) subfamilies by direct counting.
inline bool brute_has_violation(const Hypergraph& h, int p, int q) {
  const int m = h.num_edges();
  if (m < p) return false;
  bool found = false;
  for_each_k_subset(m, p, [&](const std::vector<int>& c) {
    std::vector<int> mult(h.n(), 0);
    for (int i : c) h.edge(i).for_each_bit([&](int b) { ++mult[b]; });
    if (*std::max_element(mult.begin(), mult.end()) <= q - 1) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline bool brute_has_property(const Hypergraph& h, int p, int q) { return !brute_has_violation(h, p, q); }

/// Exact extremal value by the plain power-set loop over all edge subsets of
/// the complete k-uniform hypergraph. Usable while 2^C(n,k) stays small.
inline uint64_t brute_extremal(int n, int k, int p, int q) {
  std::vector<Bitset> all = all_k_subsets(n, k, n);
  const int m = static_cast<int>(all.size());
  uint64_t best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    int size = std::popcount(mask);
    if (static_cast<uint64_t>(size) < best) continue;
    std::vector<Bitset> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    Hypergraph h = Hypergraph::from_bitsets(n, k, std::move(edges));
    if (brute_has_property(h, p, q)) best = std::max<uint64_t>(best, size);
  }
  return best;
}

/// Exact independence number by the power-set loop.
inline uint64_t brute_independence(const Hypergraph& h) {
  const int v = h.n();
  uint64_t best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << v); ++mask) {
    if (static_cast<uint64_t>(std::popcount(mask)) <= best) continue;
    Bitset s(v);
    for (int i = 0; i < v; ++i)
      if (mask >> i & 1) s.set(i);
    bool independent = true;
    for (const auto& e : h.edges())
      if (e.is_subset_of(s)) {
        independent = false;
        break;
      }
    if (independent) best = std::popcount(mask);
  }
  return best;
}

}  // namespace pqx::testing
