#include "pqx/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pqx/combinatorics.hpp"
#include "pqx/constructions.hpp"

namespace pqx {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Hypergraph complete_uniform(int n, int k) {
  return Hypergraph::from_bitsets(n, k, all_k_subsets(n, k, n));
}

Hypergraph subfamily(const Hypergraph& host, const std::vector<int>& indices) {
  std::vector<Bitset> edges;
  edges.reserve(indices.size());
  for (int i : indices) edges.push_back(host.edge(i));
  return Hypergraph::from_bitsets(host.n(), host.k(), std::move(edges));
}

}  // namespace

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

namespace {

struct OracleRun {
  const Hypergraph& host;
  PQParams params;
  int m;
  uint64_t tested = 0;

  bool holds(const std::vector<int>& indices) {
    ++tested;
    return !violation_exists_among(host, indices, params);
  }
};

ExtremalResult oracle_result(int n, int k, const Hypergraph& host, uint64_t value,
                             const std::vector<int>& witness_indices, uint64_t tested, double secs) {
  ExtremalResult res;
  res.value = value;
  res.witness = subfamily(host, witness_indices);
  res.method = SearchMethod::oracle;
  res.complete = true;
  res.trivial_upper = binom(n, k);
  res.stats.nodes = tested;
  res.stats.seconds = secs;
  return res;
}

void check_oracle_guard(int n, int k, int p, int q) {
  PQParams::of(p, q);
  if (n < k || k < 1) throw std::invalid_argument("require n >= k >= 1");
  if (binom(n, k) > 24) throw std::invalid_argument("oracle guard exceeded: C(n,k) > 24");
}

}  // namespace

ExtremalResult extremal_oracle_serial(int n, int k, int p, int q) {
  check_oracle_guard(n, k, p, q);
  auto t0 = Clock::now();
  Hypergraph host = complete_uniform(n, k);
  const int m = host.num_edges();
  OracleRun run{host, PQParams::of(p, q), m};

  // hereditary property: the first size with a holding subset is the maximum
  for (int s = m; s >= 0; --s) {
    std::vector<int> found;
    for_each_k_subset(m, s, [&](const std::vector<int>& c) {
      if (run.holds(c)) {
        found = c;
        return false;
      }
      return true;
    });
    if (!found.empty() || s == 0)
      return oracle_result(n, k, host, s, found, run.tested, seconds_since(t0));
  }
  throw std::logic_error("unreachable");
}

ExtremalResult extremal_oracle(int n, int k, int p, int q, int workers) {
  if (workers <= 1) return extremal_oracle_serial(n, k, p, q);
  check_oracle_guard(n, k, p, q);
  auto t0 = Clock::now();
  Hypergraph host = complete_uniform(n, k);
  const int m = host.num_edges();
  const PQParams params = PQParams::of(p, q);
  std::atomic<uint64_t> tested{0};

  for (int s = m; s >= 0; --s) {
    if (s == 0) return oracle_result(n, k, host, 0, {}, tested.load(), seconds_since(t0));

    // blocks by largest member b: colex order is block-ascending, so the
    // least holder lives in the least block that has one
    std::vector<std::vector<int>> block_hit(m);
    std::atomic<int> best_block{m};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
    for (int b = s - 1; b < m; ++b) {
      if (b > best_block.load(std::memory_order_relaxed)) continue;
      uint64_t local_tested = 0;
      std::vector<int> indices(s);
      indices[s - 1] = b;
      for_each_k_subset(b, s - 1, [&](const std::vector<int>& c) {
        if (b > best_block.load(std::memory_order_relaxed)) return false;
        std::copy(c.begin(), c.end(), indices.begin());
        ++local_tested;
        if (!violation_exists_among(host, indices, params)) {
          block_hit[b] = indices;
          int cur = best_block.load();
          while (b < cur && !best_block.compare_exchange_weak(cur, b)) {
          }
          return false;
        }
        return true;
      });
      tested.fetch_add(local_tested, std::memory_order_relaxed);
    }
    for (int b = s - 1; b < m; ++b)
      if (!block_hit[b].empty())
        return oracle_result(n, k, host, s, block_hit[b], tested.load(), seconds_since(t0));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// branch and bound
// ---------------------------------------------------------------------------

namespace {

struct BnB {
  const Hypergraph& host;
  PQParams params;
  int m;
  uint64_t max_nodes;
  double max_seconds;
  Clock::time_point t0;

  std::atomic<uint64_t> best{0};
  std::atomic<uint64_t> nodes{0};
  std::atomic<uint64_t> prunes{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::vector<int> best_indices;

  BnB(const Hypergraph& h, PQParams p, const SearchBudget& budget)
      : host(h), params(p), m(h.num_edges()), max_nodes(budget.max_nodes), max_seconds(budget.max_seconds),
        t0(Clock::now()) {}

  void offer(const std::vector<int>& s) {
    uint64_t v = s.size();
    if (v <= best.load(std::memory_order_relaxed)) return;
    uint64_t cur = best.load();
    while (v > cur && !best.compare_exchange_weak(cur, v)) {
    }
    std::lock_guard<std::mutex> g(mu);
    if (s.size() > best_indices.size()) best_indices = s;
  }

  void count_node() {
    uint64_t c = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (c > max_nodes) stop.store(true, std::memory_order_relaxed);
    if (max_seconds > 0 && (c & 0x3ff) == 0 && seconds_since(t0) > max_seconds)
      stop.store(true, std::memory_order_relaxed);
  }

  void dfs(int idx, std::vector<int>& s) {
    if (stop.load(std::memory_order_relaxed)) return;
    count_node();
    if (s.size() + static_cast<size_t>(m - idx) <= best.load(std::memory_order_relaxed)) {
      prunes.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    if (!violation_exists_with(host, s, idx, params)) {
      s.push_back(idx);
      offer(s);
      dfs(idx + 1, s);
      s.pop_back();
    }
    dfs(idx + 1, s);
  }

#ifdef _OPENMP
  // The spawning thread keeps descending the include branch (the hot path
  // that improves the shared bound); exclude branches become tasks.
  void dfs_tasks(int idx, std::vector<int> s, int depth) {
    if (stop.load(std::memory_order_relaxed)) return;
    count_node();
    if (s.size() + static_cast<size_t>(m - idx) <= best.load(std::memory_order_relaxed)) {
      prunes.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    if (depth >= 10 || idx >= m - 1) {
      if (!violation_exists_with(host, s, idx, params)) {
        s.push_back(idx);
        offer(s);
        dfs(idx + 1, s);
        s.pop_back();
      }
      dfs(idx + 1, s);
      return;
    }
    std::vector<int> exc = s;
#pragma omp task firstprivate(exc)
    dfs_tasks(idx + 1, exc, depth + 1);
    if (!violation_exists_with(host, s, idx, params)) {
      s.push_back(idx);
      offer(s);
      dfs_tasks(idx + 1, std::move(s), depth + 1);
    }
  }
#endif

  // Deterministic canonical witness: first include-order solution of the
  // proven optimal size. Runs serially after the value phase.
  bool target_dfs(int idx, std::vector<int>& s, uint64_t target) {
    if (s.size() == target) return true;
    if (s.size() + static_cast<size_t>(m - idx) < target) return false;
    if (!violation_exists_with(host, s, idx, params)) {
      s.push_back(idx);
      if (target_dfs(idx + 1, s, target)) return true;
      s.pop_back();
    }
    return target_dfs(idx + 1, s, target);
  }
};

}  // namespace

ExtremalResult extremal_number(int n, int k, int p, int q, const SearchBudget& budget) {
  const PQParams params = PQParams::of(p, q);
  if (n < k || k < 1) throw std::invalid_argument("require n >= k >= 1");
  if (binom(n, k) > 1000000) throw std::invalid_argument("candidate edge set too large");

  Hypergraph host = complete_uniform(n, k);
  BnB bnb(host, params, budget);

  ExtremalResult res;
  res.method = SearchMethod::branch_and_bound;
  res.trivial_upper = binom(n, k);

  // seed incumbent: the split construction when it fits, else a single edge
  auto [t, r] = tq_decompose(p, q);
  if (n >= t && r <= binom(n - t, k)) {
    Hypergraph seed = split_family_member(n, k, t, r);
    if (!has_pq_property(seed, params)) throw std::logic_error("split seed violates the property");
    std::vector<int> seed_indices;
    seed_indices.reserve(seed.num_edges());
    for (int i = 0; i < seed.num_edges(); ++i) {
      std::vector<int> zero_based;
      for (int v : seed.edge_vertices(i)) zero_based.push_back(v - 1);
      seed_indices.push_back(static_cast<int>(colex_rank(zero_based)));
    }
    std::sort(seed_indices.begin(), seed_indices.end());
    bnb.best = seed.num_edges();
    bnb.best_indices = seed_indices;
    res.phi_seed = phi(n, k, p, q);
  } else if (host.num_edges() > 0) {
    bnb.best = 1;
    bnb.best_indices = {0};
  }

  const int workers = std::max(1, budget.workers);
#ifdef _OPENMP
  if (workers > 1) {
#pragma omp parallel num_threads(workers)
    {
#pragma omp single nowait
      bnb.dfs_tasks(0, {}, 0);
    }
  } else {
    std::vector<int> s;
    bnb.dfs(0, s);
  }
#else
  std::vector<int> s;
  bnb.dfs(0, s);
#endif

  res.complete = !bnb.stop.load();
  res.value = bnb.best.load();

  if (res.complete && res.value > 0) {
    std::vector<int> canonical;
    if (!bnb.target_dfs(0, canonical, res.value)) throw std::logic_error("witness extraction missed the optimum");
    res.witness = subfamily(host, canonical);
  } else {
    res.witness = subfamily(host, bnb.best_indices);
  }

  if (!has_pq_property(res.witness, params)) throw std::logic_error("witness fails the property re-check");
  res.stats.nodes = bnb.nodes.load();
  res.stats.prunes = bnb.prunes.load();
  res.stats.seconds = seconds_since(bnb.t0);
  return res;
}

// ---------------------------------------------------------------------------
// cover structure
// ---------------------------------------------------------------------------

std::optional<VertexSet> find_cover_structure(const Hypergraph& h, int t, uint64_t r) {
  if (t < 0 || t > h.n()) return std::nullopt;
  std::optional<VertexSet> out;
  for_each_k_subset(h.n(), t, [&](const std::vector<int>& c) {
    Bitset x = Bitset::from_bits(h.n(), c);
    uint64_t avoiding = 0;
    for (const auto& e : h.edges())
      if (!e.intersects(x)) ++avoiding;
    if (avoiding == r) {
      out = x;
      return false;
    }
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// degree dichotomy scan
// ---------------------------------------------------------------------------

namespace {

struct PairTable {
  int n;
  std::vector<std::pair<int, int>> pairs;  // bit -> (u,v), colex

  explicit PairTable(int n_) : n(n_) {
    for_each_k_subset(n, 2, [&](const std::vector<int>& c) {
      pairs.push_back({c[0], c[1]});
      return true;
    });
  }
};

struct Lemma5Acc {
  uint64_t relevant = 0;
  uint64_t counterexamples = 0;
  uint64_t strict_fails = 0;
  uint64_t first_counterexample = UINT64_MAX;
  uint64_t first_strict_fail = UINT64_MAX;

  void merge(const Lemma5Acc& o) {
    relevant += o.relevant;
    counterexamples += o.counterexamples;
    strict_fails += o.strict_fails;
    first_counterexample = std::min(first_counterexample, o.first_counterexample);
    first_strict_fail = std::min(first_strict_fail, o.first_strict_fail);
  }
};

void lemma5_classify(const PairTable& tab, uint64_t mask, Lemma5Acc& acc) {
  int e = std::popcount(mask);
  if (e < 3) return;
  int deg[32] = {0};
  uint64_t w = mask;
  while (w) {
    int bit = std::countr_zero(w);
    w &= w - 1;
    ++deg[tab.pairs[bit].first];
    ++deg[tab.pairs[bit].second];
  }
  int support = 0, maxdeg = 0;
  bool all_two = true;
  for (int v = 0; v < tab.n; ++v) {
    if (deg[v] > 0) {
      ++support;
      maxdeg = std::max(maxdeg, deg[v]);
      if (deg[v] != 2) all_two = false;
    }
  }
  if (support != e) return;
  ++acc.relevant;
  if (!(maxdeg >= 3 || all_two)) {
    ++acc.counterexamples;
    acc.first_counterexample = std::min(acc.first_counterexample, mask);
  }
  if (!(maxdeg >= 4 || all_two)) {
    ++acc.strict_fails;
    acc.first_strict_fail = std::min(acc.first_strict_fail, mask);
  }
}

Hypergraph graph_of_mask(const PairTable& tab, uint64_t mask) {
  std::vector<std::vector<int>> edges;
  uint64_t w = mask;
  while (w) {
    int bit = std::countr_zero(w);
    w &= w - 1;
    edges.push_back({tab.pairs[bit].first + 1, tab.pairs[bit].second + 1});
  }
  return Hypergraph::from_edges(tab.n, 2, edges);
}

Lemma5Report lemma5_report(const PairTable& tab, const Lemma5Acc& acc, uint64_t masks) {
  Lemma5Report rep;
  rep.n = tab.n;
  rep.masks_scanned = masks;
  rep.relevant = acc.relevant;
  rep.counterexamples = acc.counterexamples;
  rep.strict_fails = acc.strict_fails;
  if (acc.first_counterexample != UINT64_MAX) rep.first_counterexample = graph_of_mask(tab, acc.first_counterexample);
  if (acc.first_strict_fail != UINT64_MAX) rep.first_strict_fail = graph_of_mask(tab, acc.first_strict_fail);
  return rep;
}

}  // namespace

Lemma5Report lemma5_scan_serial(int n) {
  if (n < 3 || n > 7) throw std::invalid_argument("require 3 <= n <= 7");
  PairTable tab(n);
  const uint64_t total = uint64_t{1} << tab.pairs.size();
  Lemma5Acc acc;
  for (uint64_t mask = 0; mask < total; ++mask) lemma5_classify(tab, mask, acc);
  return lemma5_report(tab, acc, total);
}

Lemma5Report lemma5_scan(int n, int workers) {
  if (workers <= 1) return lemma5_scan_serial(n);
  if (n < 3 || n > 7) throw std::invalid_argument("require 3 <= n <= 7");
  PairTable tab(n);
  const uint64_t total = uint64_t{1} << tab.pairs.size();
  Lemma5Acc acc;
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
  {
    Lemma5Acc local;
#pragma omp for schedule(static) nowait
    for (long long mask = 0; mask < static_cast<long long>(total); ++mask)
      lemma5_classify(tab, static_cast<uint64_t>(mask), local);
#pragma omp critical
    acc.merge(local);
  }
#else
  for (uint64_t mask = 0; mask < total; ++mask) lemma5_classify(tab, mask, acc);
#endif
  return lemma5_report(tab, acc, total);
}

}  // namespace pqx
