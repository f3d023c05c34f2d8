#include <doctest.h>

#include <random>

#include "pqx/matching.hpp"

using namespace pqx;

namespace {

// maximum matching by brute force over edge subsets
int brute_matching(const BipartiteGraph& g) {
  int m = g.num_edges();
  int best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    std::vector<char> ua(g.a, 0), ub(g.b, 0);
    bool ok = true;
    int size = 0;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [u, v] = g.edges[i];
      if (ua[u] || ub[v]) ok = false;
      ua[u] = ub[v] = 1;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

bool cover_covers_all(const BipartiteGraph& g, const MatchingResult& r) {
  std::vector<char> ca(g.a, 0), cb(g.b, 0);
  for (const auto& c : r.cover) (c.side == 'A' ? ca[c.index] : cb[c.index]) = 1;
  for (auto [u, v] : g.edges)
    if (!ca[u] && !cb[v]) return false;
  return true;
}

}  // namespace

TEST_CASE("maximum matching on named instances") {
  // K_{2,3}
  std::vector<std::pair<int, int>> k23;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 3; ++v) k23.push_back({u, v});
  CHECK(max_matching(BipartiteGraph::of(2, 3, k23)).size == 2);

  CHECK(max_matching(BipartiteGraph::of(0, 0, {})).size == 0);
  CHECK(max_matching(BipartiteGraph::of(3, 3, {})).size == 0);

  MatchingResult perfect = max_matching(BipartiteGraph::of(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
  CHECK(perfect.size == 4);
  CHECK(perfect.matching.size() == 4);
}

TEST_CASE("matching edges are pairwise disjoint and optimal vs brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int a = 1 + static_cast<int>(rng() % 4);
    int b = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v)
        if (rng() % 2) edges.push_back({u, v});
    BipartiteGraph g = BipartiteGraph::of(a, b, edges);
    MatchingResult r = max_matching(g);
    CHECK(r.size == brute_matching(g));

    std::vector<char> ua(a, 0), ub(b, 0);
    for (auto [u, v] : r.matching) {
      CHECK(!ua[u]);
      CHECK(!ub[v]);
      ua[u] = ub[v] = 1;
    }
    CHECK(static_cast<int>(r.cover.size()) == r.size);  // Konig duality
    CHECK(cover_covers_all(g, r));
  }
}

TEST_CASE("lemma3 verdicts") {
  // premise holds and the matching is large enough
  BipartiteGraph g1 = BipartiteGraph::of(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  Lemma3Report r1 = lemma3_check(g1, 2);
  CHECK(r1.premise);
  CHECK(r1.matching_size >= 2);
  CHECK(r1.verdict == Lemma3Verdict::confirmed);

  // premise fails: e = 1 <= (2-1)*2
  Lemma3Report r2 = lemma3_check(BipartiteGraph::of(1, 2, {{0, 0}}), 2);
  CHECK_FALSE(r2.premise);
  CHECK(r2.verdict == Lemma3Verdict::vacuous);

  // t = 1 with any edge present
  Lemma3Report r3 = lemma3_check(BipartiteGraph::of(1, 2, {{0, 0}}), 1);
  CHECK(r3.premise);
  CHECK(r3.verdict == Lemma3Verdict::confirmed);
}

TEST_CASE("lemma3 exhaustively on small shapes") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << (a * b)); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int bit = 0; bit < a * b; ++bit)
          if (mask >> bit & 1) edges.push_back({bit / b, bit % b});
        BipartiteGraph g = BipartiteGraph::of(a, b, edges);
        for (int t = 1; t <= a; ++t) {
          Lemma3Report r = lemma3_check(g, t);
          CHECK(r.verdict != Lemma3Verdict::counterexample);
          CHECK(r.cover_certificate_ok);
        }
      }
    }
  }
}

TEST_CASE("bipartite graph validation") {
  CHECK_THROWS(BipartiteGraph::of(2, 2, {{0, 0}, {0, 0}}));
  CHECK_THROWS(BipartiteGraph::of(2, 2, {{2, 0}}));
  CHECK_THROWS(BipartiteGraph::of(2, 2, {{0, -1}}));
}
