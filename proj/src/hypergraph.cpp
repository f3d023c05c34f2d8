#include "pqx/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pqx {

Hypergraph Hypergraph::from_edges(int n, int k, const std::vector<std::vector<int>>& edges) {
  std::vector<Bitset> bs;
  bs.reserve(edges.size());
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != k)
      throw std::invalid_argument("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
    Bitset b(n);
    for (int v : e) {
      if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (b.test(v - 1)) throw std::invalid_argument("repeated vertex " + std::to_string(v) + " in edge");
      b.set(v - 1);
    }
    bs.push_back(std::move(b));
  }
  return from_bitsets(n, k, std::move(bs));
}

Hypergraph Hypergraph::from_bitsets(int n, int k, std::vector<Bitset> edges) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative n or k");
  for (const auto& e : edges) {
    if (e.width() != n) throw std::invalid_argument("edge bitset width mismatch");
    if (e.count() != k) throw std::invalid_argument("edge is not a k-set");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  Hypergraph h;
  h.n_ = n;
  h.k_ = k;
  h.edges_ = std::move(edges);
  return h;
}

std::vector<int> Hypergraph::edge_vertices(int i) const {
  std::vector<int> out;
  edges_.at(i).for_each_bit([&](int b) { out.push_back(b + 1); });
  return out;
}

int Hypergraph::degree(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
  int d = 0;
  for (const auto& e : edges_)
    if (e.test(v - 1)) ++d;
  return d;
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& e : edges_) e.for_each_bit([&](int b) { ++d[b]; });
  return d;
}

int Hypergraph::max_degree() const {
  int m = 0;
  for (int d : degrees()) m = std::max(m, d);
  return m;
}

int Hypergraph::min_degree(bool on_support) const {
  auto d = degrees();
  if (d.empty()) return 0;
  if (!on_support) return *std::min_element(d.begin(), d.end());
  int m = -1;
  for (int x : d)
    if (x >= 1 && (m < 0 || x < m)) m = x;
  return m < 0 ? 0 : m;
}

VertexSet Hypergraph::support() const {
  Bitset s(n_);
  for (const auto& e : edges_) s = s | e;
  return s;
}

Hypergraph Hypergraph::induced(const VertexSet& u) const {
  if (u.width() != n_) throw std::invalid_argument("vertex set width mismatch");
  std::vector<Bitset> kept;
  for (const auto& e : edges_)
    if (e.is_subset_of(u)) kept.push_back(e);
  return from_bitsets(n_, k_, std::move(kept));
}

void EdgeFamily::validate() const {
  if (!host) throw std::invalid_argument("EdgeFamily without host");
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= host->num_edges()) throw std::out_of_range("edge index out of range");
    if (i <= prev) throw std::invalid_argument("edge indices not strictly increasing");
    prev = i;
  }
}

namespace {

// strips comments, returns trimmed payload
std::string strip_line(const std::string& raw) {
  std::string s = raw;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  auto is_space = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  return s.substr(b);
}

std::vector<long long> parse_ints(const std::string& s, int lineno) {
  std::vector<long long> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(lineno, "not an integer: '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

Hypergraph Hypergraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  long long n = -1, k = -1;
  std::vector<Bitset> edges;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip_line(raw);
    if (s.empty()) continue;
    auto ints = parse_ints(s, lineno);
    if (n < 0) {
      if (ints.size() != 2) throw ParseError(lineno, "header must be 'n k'");
      n = ints[0];
      k = ints[1];
      if (n < 0 || k < 0 || k > n) throw ParseError(lineno, "invalid header values");
      continue;
    }
    if (static_cast<long long>(ints.size()) != k)
      throw ParseError(lineno, "edge has " + std::to_string(ints.size()) + " vertices, expected " + std::to_string(k));
    Bitset b(static_cast<int>(n));
    long long prev = 0;
    for (long long v : ints) {
      if (v < 1 || v > n) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (v <= prev) throw ParseError(lineno, "vertices must be strictly increasing");
      prev = v;
      b.set(static_cast<int>(v - 1));
    }
    for (const auto& e : edges)
      if (e == b) throw ParseError(lineno, "duplicate edge");
    edges.push_back(std::move(b));
  }
  if (n < 0) throw ParseError(lineno, "missing 'n k' header");
  return from_bitsets(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

Hypergraph Hypergraph::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string Hypergraph::serialize() const {
  std::ostringstream out;
  out << n_ << ' ' << k_ << '\n';
  for (int i = 0; i < num_edges(); ++i) {
    auto vs = edge_vertices(i);
    for (size_t j = 0; j < vs.size(); ++j) out << (j ? " " : "") << vs[j];
    out << '\n';
  }
  return out.str();
}

nlohmann::json Hypergraph::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < num_edges(); ++i) edges.push_back(edge_vertices(i));
  return nlohmann::json{{"n", n_}, {"k", k_}, {"edges", edges}};
}

Hypergraph Hypergraph::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  std::vector<std::vector<int>> edges;
  for (const auto& e : j.at("edges")) edges.push_back(e.get<std::vector<int>>());
  return from_edges(n, k, edges);
}

}  // namespace pqx
