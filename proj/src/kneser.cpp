#include "pqx/kneser.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pqx/combinatorics.hpp"
#include "pqx/constructions.hpp"
#include "pqx/lp.hpp"

namespace pqx {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

bool qwise_disjoint(const std::vector<Bitset>& sets, int q) {
  if (q < 2) throw std::invalid_argument("require q >= 2");
  if (sets.empty()) return true;
  std::vector<int> mult(sets.front().width(), 0);
  for (const auto& s : sets) {
    bool ok = true;
    s.for_each_bit([&](int b) {
      if (++mult[b] >= q) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

KneserBuild build_kneser(const KneserSpec& spec, const KneserGuards& guards, int workers) {
  const uint64_t m64 = binom(spec.n, spec.k);
  if (m64 > guards.max_vertices)
    throw std::invalid_argument("vertex guard exceeded: C(n,k) = " + std::to_string(m64));
  const int m = static_cast<int>(m64);
  if (binom(m, spec.p) > guards.max_enumeration)
    throw std::invalid_argument("edge enumeration guard exceeded: C(C(n,k),p) = " +
                                std::to_string(binom(m, spec.p)));

  // vertex i = i-th k-subset in colex order
  std::vector<Bitset> ground = all_k_subsets(spec.n, spec.k, spec.n);
  std::vector<std::vector<int>> labels(m);
  for (int i = 0; i < m; ++i) {
    ground[i].for_each_bit([&](int b) { labels[i].push_back(b + 1); });
  }

  auto edge_of = [&](const std::vector<int>& members) -> std::optional<Bitset> {
    std::vector<int> mult(spec.n, 0);
    for (int v : members) {
      bool ok = true;
      ground[v].for_each_bit([&](int b) {
        if (++mult[b] >= spec.q) ok = false;
      });
      if (!ok) return std::nullopt;
    }
    return Bitset::from_bits(m, members);
  };

  std::vector<Bitset> edges;
  if (workers <= 1) {
    for_each_k_subset(m, spec.p, [&](const std::vector<int>& c) {
      if (auto e = edge_of(c)) edges.push_back(std::move(*e));
      return true;
    });
  } else {
    // blocks by largest member; from_bitsets re-sorts, so concatenation
    // order cannot affect the result
    std::vector<std::vector<Bitset>> block(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
    for (int b = spec.p - 1; b < m; ++b) {
      std::vector<int> members(spec.p);
      members[spec.p - 1] = b;
      for_each_k_subset(b, spec.p - 1, [&](const std::vector<int>& c) {
        std::copy(c.begin(), c.end(), members.begin());
        if (auto e = edge_of(members)) block[b].push_back(std::move(*e));
        return true;
      });
    }
    for (auto& blk : block)
      for (auto& e : blk) edges.push_back(std::move(e));
  }

  KneserBuild out{Hypergraph::from_bitsets(m, spec.p, std::move(edges)), std::move(labels)};
  return out;
}

// ---------------------------------------------------------------------------
// independence number
// ---------------------------------------------------------------------------

namespace {

struct AlphaSearch {
  const Hypergraph& h;
  int v;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<int> missing;  // per edge: vertices not yet taken
  uint64_t best = 0;
  uint64_t nodes = 0;
  uint64_t prunes = 0;
  uint64_t max_nodes;
  double max_seconds;
  Clock::time_point t0 = Clock::now();
  bool stopped = false;

  AlphaSearch(const Hypergraph& h_, const SearchBudget& budget)
      : h(h_), v(h_.n()), vertex_edges(h_.n()), missing(h_.num_edges()), max_nodes(budget.max_nodes),
        max_seconds(budget.max_seconds) {
    for (int e = 0; e < h.num_edges(); ++e) {
      missing[e] = h.k();
      h.edge(e).for_each_bit([&](int b) { vertex_edges[b].push_back(e); });
    }
  }

  bool include_ok(int u) const {
    for (int e : vertex_edges[u])
      if (missing[e] == 1) return false;
    return true;
  }

  void count_node() {
    ++nodes;
    if (nodes > max_nodes) stopped = true;
    if (max_seconds > 0 && (nodes & 0x3ff) == 0 && seconds_since(t0) > max_seconds) stopped = true;
  }

  void dfs(int idx, uint64_t size) {
    if (stopped) return;
    count_node();
    if (size + static_cast<uint64_t>(v - idx) <= best) {
      ++prunes;
      return;
    }
    if (idx == v) {
      best = std::max(best, size);
      return;
    }
    if (include_ok(idx)) {
      for (int e : vertex_edges[idx]) --missing[e];
      dfs(idx + 1, size + 1);
      for (int e : vertex_edges[idx]) ++missing[e];
    }
    dfs(idx + 1, size);
  }
};

}  // namespace

CountResult independence_number(const Hypergraph& h, const SearchBudget& budget) {
  AlphaSearch search(h, budget);
  search.dfs(0, 0);
  return CountResult{search.best, !search.stopped, search.nodes};
}

CountResult alpha_kneser(const KneserSpec& spec, const SearchBudget& budget) {
  const uint64_t vertices = binom(spec.n, spec.k);
  if (vertices < static_cast<uint64_t>(spec.p)) return CountResult{vertices, true, 0};  // vacuous
  ExtremalResult ex = extremal_number(spec.n, spec.k, spec.p, spec.q, budget);
  return CountResult{ex.value, ex.complete, ex.stats.nodes};
}

// ---------------------------------------------------------------------------
// chromatic number
// ---------------------------------------------------------------------------

namespace {

struct ColorSearch {
  const Hypergraph& h;
  int v;
  int classes;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<int> color;  // -1 = unassigned
  int used = 0;
  uint64_t& nodes;
  uint64_t max_nodes;
  double max_seconds;
  Clock::time_point t0;
  bool stopped = false;

  ColorSearch(const Hypergraph& h_, int classes_, uint64_t& nodes_, const SearchBudget& budget,
              Clock::time_point start)
      : h(h_), v(h_.n()), classes(classes_), vertex_edges(h_.n()), color(h_.n(), -1), nodes(nodes_),
        max_nodes(budget.max_nodes), max_seconds(budget.max_seconds), t0(start) {
    for (int e = 0; e < h.num_edges(); ++e)
      h.edge(e).for_each_bit([&](int b) { vertex_edges[b].push_back(e); });
  }

  // assigning cls to u completes edge e iff every other vertex of e already
  // wears cls
  bool feasible(int u, int cls) const {
    for (int e : vertex_edges[u]) {
      bool complete = true;
      h.edge(e).for_each_bit([&](int b) {
        if (b != u && color[b] != cls) complete = false;
      });
      if (complete) return false;
    }
    return true;
  }

  int available(int u) const {
    int lim = std::min(used + 1, classes);
    int c = 0;
    for (int cls = 0; cls < lim; ++cls)
      if (feasible(u, cls)) ++c;
    return c;
  }

  void count_node() {
    ++nodes;
    if (nodes > max_nodes) stopped = true;
    if (max_seconds > 0 && (nodes & 0x3ff) == 0 && seconds_since(t0) > max_seconds) stopped = true;
  }

  bool dfs(int colored) {
    if (stopped) return false;
    count_node();
    if (colored == v) return true;
    // most constrained uncolored vertex; ties broken by index
    int pick = -1, pick_avail = INT32_MAX;
    for (int u = 0; u < v; ++u) {
      if (color[u] >= 0) continue;
      int a = available(u);
      if (a == 0) return false;
      if (a < pick_avail) {
        pick = u;
        pick_avail = a;
      }
    }
    int lim = std::min(used + 1, classes);
    for (int cls = 0; cls < lim; ++cls) {
      if (!feasible(pick, cls)) continue;
      color[pick] = cls;
      int prev_used = used;
      used = std::max(used, cls + 1);
      if (dfs(colored + 1)) return true;
      used = prev_used;
      color[pick] = -1;
      if (stopped) return false;
    }
    return false;
  }
};

// greedy clique in the 2-uniform case; precoloring it breaks class symmetry
std::vector<int> greedy_clique(const Hypergraph& h) {
  if (h.k() != 2) return {};
  std::vector<int> clique;
  for (int u = 0; u < h.n(); ++u) {
    bool adj_all = true;
    for (int w : clique) {
      Bitset e(h.n());
      e.set(u);
      e.set(w);
      bool found = std::binary_search(h.edges().begin(), h.edges().end(), e);
      if (!found) {
        adj_all = false;
        break;
      }
    }
    if (adj_all) clique.push_back(u);
  }
  return clique;
}

}  // namespace

ChromaticResult chromatic_number_exact(const Hypergraph& h, const SearchBudget& budget) {
  for (const auto& e : h.edges())
    if (e.count() < 2) throw std::domain_error("edge with fewer than 2 vertices: no proper coloring exists");

  ChromaticResult out;
  if (h.n() == 0) {
    out.lower = out.upper = 0;
    return out;
  }
  if (h.num_edges() == 0) {
    out.lower = out.upper = 1;
    return out;
  }

  auto t0 = Clock::now();
  std::vector<int> clique = greedy_clique(h);
  int lb = std::max(2, static_cast<int>(clique.size()));
  uint64_t nodes = 0;
  for (int c = lb; c <= h.n(); ++c) {
    ColorSearch search(h, c, nodes, budget, t0);
    for (size_t i = 0; i < clique.size() && static_cast<int>(i) < c; ++i) {
      search.color[clique[i]] = static_cast<int>(i);
      search.used = static_cast<int>(i) + 1;
    }
    bool ok = search.dfs(search.used);
    if (search.stopped) {
      out.lower = c;  // all smaller counts refuted before the budget ran out
      out.upper = h.n();
      out.complete = false;
      out.nodes = nodes;
      return out;
    }
    if (ok) {
      out.lower = out.upper = c;
      out.nodes = nodes;
      return out;
    }
  }
  throw std::logic_error("no coloring found with n classes");
}

// ---------------------------------------------------------------------------
// fractional chromatic number
// ---------------------------------------------------------------------------

namespace {

struct MaximalSetEnum {
  const Hypergraph& h;
  int v;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<int> missing;
  std::vector<char> in_s;
  std::vector<Bitset>& out;
  uint64_t limit;
  uint64_t visited = 0;

  MaximalSetEnum(const Hypergraph& h_, std::vector<Bitset>& out_, uint64_t limit_)
      : h(h_), v(h_.n()), vertex_edges(h_.n()), missing(h_.num_edges()), in_s(h_.n(), 0), out(out_), limit(limit_) {
    for (int e = 0; e < h.num_edges(); ++e) {
      missing[e] = h.k();
      h.edge(e).for_each_bit([&](int b) { vertex_edges[b].push_back(e); });
    }
  }

  bool addable(int u) const {
    for (int e : vertex_edges[u])
      if (missing[e] == 1) return false;
    return true;
  }

  void dfs(int idx) {
    if (++visited > limit) throw EnumerationLimit("maximal independent set enumeration limit exceeded");
    if (idx == v) {
      for (int u = 0; u < v; ++u)
        if (!in_s[u] && addable(u)) return;  // not maximal
      Bitset s(v);
      for (int u = 0; u < v; ++u)
        if (in_s[u]) s.set(u);
      out.push_back(std::move(s));
      return;
    }
    if (addable(idx)) {
      in_s[idx] = 1;
      for (int e : vertex_edges[idx]) --missing[e];
      dfs(idx + 1);
      for (int e : vertex_edges[idx]) ++missing[e];
      in_s[idx] = 0;
      if (vertex_edges[idx].empty()) return;  // isolated vertices join every maximal set
    }
    dfs(idx + 1);
  }
};

}  // namespace

std::vector<Bitset> maximal_independent_sets(const Hypergraph& h, uint64_t limit) {
  std::vector<Bitset> out;
  if (h.n() == 0) return out;
  if (h.num_edges() == 0) {
    Bitset all(h.n());
    for (int u = 0; u < h.n(); ++u) all.set(u);
    out.push_back(all);
    return out;
  }
  MaximalSetEnum en(h, out, limit);
  en.dfs(0);
  return out;
}

bool verify_fractional_coloring(const Hypergraph& h, const std::vector<std::pair<Bitset, Rational>>& coloring,
                                const Rational& claimed_weight) {
  Rational total(0);
  for (const auto& [s, w] : coloring) {
    if (w.sign() < 0) return false;
    for (const auto& e : h.edges())
      if (e.is_subset_of(s)) return false;  // keyed set not independent
    total += w;
  }
  if (total != claimed_weight) return false;
  for (int u = 0; u < h.n(); ++u) {
    Rational cover(0);
    for (const auto& [s, w] : coloring)
      if (s.test(u)) cover += w;
    if (cover < Rational(1)) return false;
  }
  return true;
}

FractionalChromatic fractional_chromatic_lp(const Hypergraph& h, uint64_t enum_limit) {
  FractionalChromatic out;
  if (h.n() == 0) {
    out.value = Rational(0);
    return out;
  }
  for (const auto& e : h.edges())
    if (e.count() < 1) throw std::domain_error("empty edge: no coloring exists");

  std::vector<Bitset> sets = maximal_independent_sets(h, enum_limit);
  CoveringLPResult lp = solve_fractional_cover(sets, h.n());
  out.value = lp.value;
  out.pivots = lp.pivots;
  for (const auto& [idx, w] : lp.weights) out.coloring.push_back({sets[idx], w});
  if (!verify_fractional_coloring(h, out.coloring, out.value))
    throw std::logic_error("fractional coloring failed the exact feasibility re-check");
  return out;
}

TransitiveChiF fractional_chromatic_transitive(const KneserSpec& spec, const SearchBudget& budget) {
  CountResult alpha = alpha_kneser(spec, budget);
  if (alpha.value == 0) throw std::domain_error("independence number zero");
  TransitiveChiF out;
  out.complete = alpha.complete;
  out.value = Rational(static_cast<long long>(binom(spec.n, spec.k)), static_cast<long long>(alpha.value));
  return out;
}

CorollaryChiF corollary_chi_f(int n, int p, int q) {
  if (q < 3 || p < q) throw std::invalid_argument("require p >= q >= 3");
  if (n < 2) throw std::invalid_argument("require n >= 2");
  uint64_t numerator = binom(n, 2);
  uint64_t denominator = phi(n, 2, p, q);
  CorollaryChiF out;
  out.value = Rational(static_cast<long long>(numerator), static_cast<long long>(denominator));
  out.within_validity = static_cast<long long>(n) >= 2LL * p * p;
  return out;
}

}  // namespace pqx
