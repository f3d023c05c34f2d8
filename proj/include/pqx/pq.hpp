#pragma once

#include <optional>

#include "pqx/hypergraph.hpp"

namespace pqx {

/// (p,q) parameters with the Euclidean decomposition p-1 = t(q-1) + r.
struct PQParams {
  int p = 0;
  int q = 0;
  int t = 0;
  int r = 0;

  static PQParams of(int p, int q) {
    if (q < 2 || p < q) throw std::invalid_argument("require p >= q >= 2");
    PQParams s;
    s.p = p;
    s.q = q;
    s.t = (p - 1) / (q - 1);
    s.r = (p - 1) % (q - 1);
    return s;
  }
};

/// A family of p host edges in which every vertex lies in at most q-1 of
/// them; its existence is exactly the failure of the (p,q)-property.
struct Violation {
  EdgeFamily family;
};

/// True iff e(H) = p and every vertex lies in at most q-1 edges. Isolated
/// vertices are ignored (membership is judged on the support).
bool is_bounded_degree_member(const Hypergraph& h, const PQParams& params);

/// Searches for p distinct edges with all vertex multiplicities <= q-1.
/// Deterministic: depth-first over edges in canonical order, so the first
/// witness found is the lexicographically least index family. Returns
/// nothing iff H satisfies the (p,q)-property.
std::optional<Violation> find_violation(const Hypergraph& h, const PQParams& params);

/// Among any p edges, some q share a vertex. Vacuously true when e(H) < p.
bool has_pq_property(const Hypergraph& h, const PQParams& params);

/// Violation search restricted to the subfamily of host edges named by
/// `indices` (strictly increasing). Existence only, no witness.
bool violation_exists_among(const Hypergraph& h, const std::vector<int>& indices, const PQParams& params);

/// True iff some bounded-degree p-family inside indices + {forced} contains
/// the forced edge. This is the incremental check used when a search adds a
/// single edge to a family already known to satisfy the property.
bool violation_exists_with(const Hypergraph& h, const std::vector<int>& indices, int forced, const PQParams& params);

}  // namespace pqx
