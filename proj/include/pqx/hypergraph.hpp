#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqx/bitset.hpp"

namespace pqx {

using VertexSet = Bitset;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// k-uniform hypergraph on vertex set {1..n}. Edges are width-n bit vectors,
/// kept distinct and in colexicographic order; instances are immutable after
/// construction and safe to share across threads.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Edges given as lists of 1-based vertices. Validates uniformity, range
  /// and distinctness, then canonicalizes the edge order.
  static Hypergraph from_edges(int n, int k, const std::vector<std::vector<int>>& edges);

  /// Edges given as width-n bitsets with exactly k bits each.
  static Hypergraph from_bitsets(int n, int k, std::vector<Bitset> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Bitset>& edges() const { return edges_; }
  const Bitset& edge(int i) const { return edges_.at(i); }

  /// 1-based vertices of edge i, ascending.
  std::vector<int> edge_vertices(int i) const;

  /// Number of edges containing 1-based vertex v.
  int degree(int v) const;

  /// Degrees of all n vertices, index 0 holds vertex 1.
  std::vector<int> degrees() const;

  int max_degree() const;

  /// Minimum degree over all n vertices; with on_support, over non-isolated
  /// vertices only (0 if the hypergraph is empty).
  int min_degree(bool on_support = false) const;

  /// Vertices with degree >= 1.
  VertexSet support() const;

  /// Subhypergraph on the same vertex labels whose edges lie entirely in U.
  Hypergraph induced(const VertexSet& u) const;

  bool operator==(const Hypergraph& o) const {
    return n_ == o.n_ && k_ == o.k_ && edges_ == o.edges_;
  }

  /// .hg text format: first non-comment line "n k", one edge per line as k
  /// strictly increasing 1-based vertices, '#' comments, blank lines ignored.
  static Hypergraph parse(const std::string& text);
  static Hypergraph parse_file(const std::string& path);
  std::string serialize() const;

  nlohmann::json to_json() const;
  static Hypergraph from_json(const nlohmann::json& j);

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Bitset> edges_;
};

/// Selection of distinct edge indices from a host hypergraph, ascending.
struct EdgeFamily {
  const Hypergraph* host = nullptr;
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }

  /// Throws if indices are out of range, unsorted or duplicated.
  void validate() const;
};

}  // namespace pqx
