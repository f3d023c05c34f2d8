#include "pqx/pq.hpp"

#include <algorithm>

namespace pqx {

bool is_bounded_degree_member(const Hypergraph& h, const PQParams& params) {
  return h.num_edges() == params.p && h.max_degree() <= params.q - 1;
}

namespace {

// DFS for a bounded-degree family over a pool of host edge indices. The pool
// is scanned in order, so the first family found is the lexicographically
// least index sequence. mult carries multiplicities of already-fixed edges.
struct FamilySearch {
  const Hypergraph& h;
  const std::vector<int>& pool;
  int cap;  // q - 1
  std::vector<int> mult;
  std::vector<int> chosen;

  FamilySearch(const Hypergraph& h_, const std::vector<int>& pool_, int cap_)
      : h(h_), pool(pool_), cap(cap_), mult(h_.n(), 0) {}

  bool fits(const Bitset& e) const {
    bool ok = true;
    e.for_each_bit([&](int b) {
      if (mult[b] >= cap) ok = false;
    });
    return ok;
  }

  void add(const Bitset& e) { e.for_each_bit([&](int b) { ++mult[b]; }); }
  void remove(const Bitset& e) { e.for_each_bit([&](int b) { --mult[b]; }); }

  // Every added edge consumes k units of residual vertex capacity, which
  // bounds how many more edges any extension can take.
  bool capacity_allows(int need) const {
    if (h.k() == 0) return true;
    long long residual = 0;
    for (int b = 0; b < h.n(); ++b) residual += cap - mult[b];
    return residual / h.k() >= need;
  }

  bool dfs(size_t start, int need) {
    if (need == 0) return true;
    if (pool.size() - start < static_cast<size_t>(need)) return false;
    if (!capacity_allows(need)) return false;
    for (size_t i = start; i + need <= pool.size(); ++i) {
      const Bitset& e = h.edge(pool[i]);
      if (!fits(e)) continue;
      chosen.push_back(pool[i]);
      add(e);
      if (dfs(i + 1, need - 1)) return true;
      remove(e);
      chosen.pop_back();
    }
    return false;
  }

  // Cover bound: for any vertex set X, a feasible family has at most
  // sum_{v in X} residual(v) edges meeting X plus the pool edges avoiding X.
  // Sweeping X through degree-ordered prefixes gives a cheap upper bound
  // that settles split-structured inputs at the root without enumeration.
  int family_upper_bound() const {
    const int n = h.n();
    std::vector<int> pool_deg(n, 0);
    for (int idx : pool) h.edge(idx).for_each_bit([&](int b) { ++pool_deg[b]; });
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (pool_deg[a] != pool_deg[b]) return pool_deg[a] > pool_deg[b];
      return a < b;
    });

    int best = static_cast<int>(pool.size());
    std::vector<char> in_x(n, 0);
    std::vector<char> covered(pool.size(), 0);
    int avoiding = static_cast<int>(pool.size());
    long long meeting_cap = 0;
    for (int j = 0; j < n && j <= static_cast<int>(pool.size()); ++j) {
      int v = order[j];
      in_x[v] = 1;
      meeting_cap += std::max(0, cap - mult[v]);
      for (size_t i = 0; i < pool.size(); ++i) {
        if (!covered[i] && h.edge(pool[i]).test(v)) {
          covered[i] = 1;
          --avoiding;
        }
      }
      long long bound = meeting_cap + avoiding;
      if (bound < best) best = static_cast<int>(bound);
      if (best == 0) break;
    }
    return best;
  }
};

std::vector<int> full_pool(const Hypergraph& h) {
  std::vector<int> pool(h.num_edges());
  for (int i = 0; i < h.num_edges(); ++i) pool[i] = i;
  return pool;
}

}  // namespace

std::optional<Violation> find_violation(const Hypergraph& h, const PQParams& params) {
  if (h.num_edges() < params.p) return std::nullopt;
  auto pool = full_pool(h);
  FamilySearch search(h, pool, params.q - 1);
  if (search.family_upper_bound() < params.p) return std::nullopt;
  if (!search.dfs(0, params.p)) return std::nullopt;
  Violation v{EdgeFamily{&h, search.chosen}};
  v.family.validate();
  // re-check the multiplicity invariant on emission
  std::vector<int> mult(h.n(), 0);
  for (int i : v.family.indices) h.edge(i).for_each_bit([&](int b) { ++mult[b]; });
  for (int m : mult)
    if (m > params.q - 1) throw std::logic_error("violation emitted with multiplicity above q-1");
  return v;
}

bool has_pq_property(const Hypergraph& h, const PQParams& params) {
  return !find_violation(h, params).has_value();
}

bool violation_exists_among(const Hypergraph& h, const std::vector<int>& indices, const PQParams& params) {
  if (indices.size() < static_cast<size_t>(params.p)) return false;
  FamilySearch search(h, indices, params.q - 1);
  if (search.family_upper_bound() < params.p) return false;
  return search.dfs(0, params.p);
}

bool violation_exists_with(const Hypergraph& h, const std::vector<int>& indices, int forced, const PQParams& params) {
  if (indices.size() + 1 < static_cast<size_t>(params.p)) return false;
  FamilySearch search(h, indices, params.q - 1);
  search.add(h.edge(forced));
  // the cover bound costs O(pool * n); below ~32 edges the DFS wins
  if (indices.size() > 32 && search.family_upper_bound() < params.p - 1) return false;
  return search.dfs(0, params.p - 1);
}

}  // namespace pqx
