#pragma once

#include <vector>

#include "pqx/bitset.hpp"
#include "pqx/rational.hpp"

namespace pqx {

struct CoveringLPResult {
  Rational value;                                      // optimum of min sum f
  std::vector<std::pair<int, Rational>> weights;       // set index -> weight, nonzero entries only
  int pivots = 0;
};

/// Exact optimum of the covering program
///     min sum_S f(S)   s.t.  for every vertex v: sum_{S contains v} f(S) >= 1,  f >= 0
/// over the given sets (bit vectors over num_vertices vertices).
///
/// Solved via the dual packing program max sum_v y_v, sum_{v in S} y_v <= 1,
/// y >= 0, whose origin is feasible, with Bland's rule for termination; the
/// covering weights are read off the slack reduced costs at optimality.
/// Every vertex must belong to at least one set, otherwise the program is
/// infeasible and this throws.
CoveringLPResult solve_fractional_cover(const std::vector<Bitset>& sets, int num_vertices);

}  // namespace pqx
