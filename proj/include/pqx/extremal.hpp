#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "pqx/hypergraph.hpp"
#include "pqx/pq.hpp"

namespace pqx {

struct SearchBudget {
  uint64_t max_nodes = std::numeric_limits<uint64_t>::max();
  double max_seconds = 0;  // 0 = unlimited
  int workers = 1;
};

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t prunes = 0;
  double seconds = 0;
};

enum class SearchMethod { branch_and_bound, oracle };

struct ExtremalResult {
  uint64_t value = 0;
  Hypergraph witness;
  SearchStats stats;
  SearchMethod method = SearchMethod::branch_and_bound;
  bool complete = true;
  std::optional<uint64_t> phi_seed;  // construction lower bound, when the split member fits in [n]
  uint64_t trivial_upper = 0;        // C(n,k)
};

/// Exact maximum edge count of a (p,q)-property hypergraph inside C([n],k),
/// by scanning edge subsets of the complete k-uniform hypergraph in
/// decreasing size; the first size with a property-holding subset is the
/// answer since the property is hereditary. Pre: C(n,k) <= 24.
/// Witness: the colex-least subset of the maximum size.
ExtremalResult extremal_oracle(int n, int k, int p, int q, int workers = 1);

/// Single-loop reference implementation of the oracle (kept for testing the
/// parallel kernel). Identical results by construction.
ExtremalResult extremal_oracle_serial(int n, int k, int p, int q);

/// Branch-and-bound over candidate edges in canonical order, include branch
/// first, with incremental violation detection on inclusion and the split
/// construction as the seed incumbent. Exact when it completes within
/// budget; otherwise returns the best incumbent flagged incomplete.
/// The witness of a complete run is canonical (first depth-first
/// include-order solution attaining the optimum) and identical for any
/// worker count.
ExtremalResult extremal_number(int n, int k, int p, int q, const SearchBudget& budget = {});

/// Smallest (colex) t-set X such that all but exactly r edges of H meet X,
/// if one exists: the structural signature of split extremal hypergraphs.
std::optional<VertexSet> find_cover_structure(const Hypergraph& h, int t, uint64_t r);

/// Exhaustive scan of all edge subsets of K_n restricted to graphs F with
/// |support(F)| = e(F) >= 3. Checks the degree dichotomy: some vertex of
/// degree >= 3, or 2-regular on the support. Also evaluates the stricter
/// "degree > 3" reading, which is expected to fail (e.g. triangle plus
/// pendant edge).
struct Lemma5Report {
  int n = 0;
  uint64_t masks_scanned = 0;
  uint64_t relevant = 0;         // graphs with |support| == e >= 3
  uint64_t counterexamples = 0;  // fail "degree >= 3 or 2-regular"
  uint64_t strict_fails = 0;     // fail "degree > 3 or 2-regular"
  std::optional<Hypergraph> first_counterexample;
  std::optional<Hypergraph> first_strict_fail;
};

Lemma5Report lemma5_scan(int n, int workers = 1);
Lemma5Report lemma5_scan_serial(int n);

}  // namespace pqx
