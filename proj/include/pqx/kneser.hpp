#pragma once

#include <cstdint>
#include <vector>

#include "pqx/extremal.hpp"
#include "pqx/hypergraph.hpp"
#include "pqx/rational.hpp"

namespace pqx {

/// Parameters of the q-wise Kneser p-uniform hypergraph on the k-subsets
/// of [n].
struct KneserSpec {
  int n = 0, k = 0, p = 0, q = 0;

  static KneserSpec of(int n, int k, int p, int q) {
    if (q < 2 || p < q) throw std::invalid_argument("require p >= q >= 2");
    if (k < 1 || n < k) throw std::invalid_argument("require n >= k >= 1");
    return KneserSpec{n, k, p, q};
  }
};

struct KneserGuards {
  uint64_t max_vertices = 64;
  uint64_t max_enumeration = 10000000;
};

class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff every ground element lies in at most q-1 of the sets; for
/// distinct sets this is equivalent to "any q of them have an empty common
/// intersection".
bool qwise_disjoint(const std::vector<Bitset>& sets, int q);

/// Kneser hypergraph plus the vertex labeling table: vertex i (1-based) is
/// the i-th k-subset of [n] in colex order.
struct KneserBuild {
  Hypergraph hg;
  std::vector<std::vector<int>> labels;
};

KneserBuild build_kneser(const KneserSpec& spec, const KneserGuards& guards = {}, int workers = 1);

struct CountResult {
  uint64_t value = 0;
  bool complete = true;
  uint64_t nodes = 0;
};

/// Exact independence number by include-first branch and bound over the
/// vertices; budget exhaustion degrades the result to a flagged lower bound.
CountResult independence_number(const Hypergraph& h, const SearchBudget& budget = {});

/// alpha of the Kneser hypergraph through the extremal bridge: independent
/// vertex sets are exactly the k-uniform families with the (p,q)-property.
CountResult alpha_kneser(const KneserSpec& spec, const SearchBudget& budget = {});

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  bool complete = true;
  uint64_t nodes = 0;
  int value() const {
    if (!complete) throw std::logic_error("chromatic number not pinned within budget");
    return lower;
  }
};

/// Minimum number of classes with no class containing an edge, by iterative
/// deepening on the class count. Requires every edge to have >= 2 vertices.
ChromaticResult chromatic_number_exact(const Hypergraph& h, const SearchBudget& budget = {});

/// All maximal independent sets; throws EnumerationLimit beyond `limit`.
std::vector<Bitset> maximal_independent_sets(const Hypergraph& h, uint64_t limit = 10000000);

struct FractionalChromatic {
  Rational value;
  std::vector<std::pair<Bitset, Rational>> coloring;  // independent set -> positive weight
  int pivots = 0;
};

/// Exact fractional chromatic number as the covering LP over the maximal
/// independent sets (restriction is lossless: enlarging a set never hurts
/// coverage), solved in exact rational arithmetic and re-checked for
/// feasibility before returning.
FractionalChromatic fractional_chromatic_lp(const Hypergraph& h, uint64_t enum_limit = 10000000);

struct TransitiveChiF {
  Rational value;
  bool complete = true;
};

/// v/alpha shortcut, valid because Kneser hypergraphs are vertex-transitive.
TransitiveChiF fractional_chromatic_transitive(const KneserSpec& spec, const SearchBudget& budget = {});

struct CorollaryChiF {
  Rational value;
  bool within_validity = false;  // n >= 2p^2, the proven regime
};

/// Closed form C(n,2) / phi_2(n,p,q) for the fractional chromatic number of
/// q-wise Kneser p-uniform hypergraphs over 2-subsets.
CorollaryChiF corollary_chi_f(int n, int p, int q);

/// Exact independent re-check of a fractional coloring: sets independent,
/// weights nonnegative, every vertex covered with total weight >= 1, and
/// the total weight equals the claimed value.
bool verify_fractional_coloring(const Hypergraph& h, const std::vector<std::pair<Bitset, Rational>>& coloring,
                                const Rational& claimed_weight);

}  // namespace pqx
