#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pqx {

/// Bipartite graph with sides A = {0..a-1} and B = {0..b-1}.
struct BipartiteGraph {
  int a = 0;
  int b = 0;
  std::vector<std::pair<int, int>> edges;

  static BipartiteGraph of(int a, int b, std::vector<std::pair<int, int>> edges);
  int num_edges() const { return static_cast<int>(edges.size()); }
};

/// A vertex of the cover, tagged with its side.
struct CoverVertex {
  char side;  // 'A' or 'B'
  int index;
};

struct MatchingResult {
  int size = 0;
  std::vector<std::pair<int, int>> matching;  // pairwise vertex-disjoint edges
  std::vector<CoverVertex> cover;             // Konig vertex cover, |cover| == size
};

/// Maximum matching by augmenting paths, certified by a vertex cover of the
/// same size extracted via Konig's construction.
MatchingResult max_matching(const BipartiteGraph& g);

enum class Lemma3Verdict { vacuous, confirmed, counterexample };

struct Lemma3Report {
  bool premise = false;       // |A| < |B| and e(G) > (t-1)|B|
  int matching_size = 0;
  int t = 0;
  Lemma3Verdict verdict = Lemma3Verdict::vacuous;
  bool cover_certificate_ok = false;
};

/// Premise |A| < |B|, e(G) > (t-1)|B|  =>  conclusion: a t-matching exists.
Lemma3Report lemma3_check(const BipartiteGraph& g, int t);

std::string to_string(Lemma3Verdict v);

}  // namespace pqx
