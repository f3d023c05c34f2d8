#include "pqx/constructions.hpp"

#include <algorithm>

#include "pqx/combinatorics.hpp"

namespace pqx {

SplitFamilySpec SplitFamilySpec::of(int n, int k, int t, uint64_t r) {
  if (t < 1 || n < t) throw std::invalid_argument("require n >= t >= 1");
  if (k < 2 || n < k) throw std::invalid_argument("require n >= k >= 2");
  if (r > binom(n - t, k))
    throw std::invalid_argument("r exceeds C(n-t,k) = " + std::to_string(binom(n - t, k)));
  return SplitFamilySpec{n, k, t, r};
}

Hypergraph split_hypergraph(int n, int k, int t) {
  auto spec = SplitFamilySpec::of(n, k, t, 0);
  std::vector<Bitset> edges;
  edges.reserve(binom(n, k) - binom(n - t, k));
  for_each_k_subset(n, k, [&](const std::vector<int>& c) {
    if (c.front() < spec.t) edges.push_back(Bitset::from_bits(n, c));  // meets [t]
    return true;
  });
  return Hypergraph::from_bitsets(n, k, std::move(edges));
}

namespace {

// extra edges live inside {t+1..n}; ranks index the colex order of k-subsets
// of that tail
Hypergraph with_extra_edges(const SplitFamilySpec& s, const std::vector<uint64_t>& ranks) {
  Hypergraph base = split_hypergraph(s.n, s.k, s.t);
  std::vector<Bitset> edges = base.edges();
  for (uint64_t rank : ranks) {
    auto tail = colex_unrank(rank, s.k);
    for (int& v : tail) v += s.t;  // shift into {t..n-1} zero-based
    edges.push_back(Bitset::from_bits(s.n, tail));
  }
  return Hypergraph::from_bitsets(s.n, s.k, std::move(edges));
}

}  // namespace

Hypergraph split_family_member(int n, int k, int t, uint64_t r) {
  auto spec = SplitFamilySpec::of(n, k, t, r);
  std::vector<uint64_t> ranks(r);
  for (uint64_t i = 0; i < r; ++i) ranks[i] = i;
  return with_extra_edges(spec, ranks);
}

Hypergraph split_family_member_random(int n, int k, int t, uint64_t r, std::mt19937_64& rng) {
  auto spec = SplitFamilySpec::of(n, k, t, r);
  uint64_t avail = binom(n - t, k);
  // partial Fisher-Yates over the rank space
  std::vector<uint64_t> pool(avail);
  for (uint64_t i = 0; i < avail; ++i) pool[i] = i;
  std::vector<uint64_t> ranks;
  for (uint64_t i = 0; i < r; ++i) {
    std::uniform_int_distribution<uint64_t> pick(i, avail - 1);
    std::swap(pool[i], pool[pick(rng)]);
    ranks.push_back(pool[i]);
  }
  return with_extra_edges(spec, ranks);
}

std::pair<int, uint64_t> tq_decompose(int p, int q) {
  if (q < 2 || p < q) throw std::invalid_argument("require p >= q >= 2");
  return {(p - 1) / (q - 1), static_cast<uint64_t>((p - 1) % (q - 1))};
}

uint64_t phi(int n, int k, int p, int q) {
  auto [t, r] = tq_decompose(p, q);
  if (n < k || n < t) throw std::invalid_argument("require n >= k and n >= t");
  return binom(n, k) - binom(n - t, k) + r;
}

Hypergraph complete_plus_edge(int p) {
  if (p < 3) throw std::invalid_argument("require p >= 3");
  std::vector<std::vector<int>> edges;
  for (int u = 1; u < p; ++u)
    for (int v = u + 1; v < p; ++v) edges.push_back({u, v});
  edges.push_back({p - 1, p});
  return Hypergraph::from_edges(p, 2, edges);
}

SarkariaChi sarkaria_chi(int n, int k, int p, int q) {
  if (q < 2 || p < q || n < k || k < 1) throw std::invalid_argument("require p >= q >= 2 and n >= k >= 1");
  long long num = static_cast<long long>(n) * (q - 1) - static_cast<long long>(p) * (k - 1);
  long long den = p - 1;
  // ceiling division valid for negative numerators too
  long long raw = num >= 0 ? (num + den - 1) / den : -((-num) / den);
  SarkariaChi out;
  out.raw = raw;
  out.value = std::max(raw, 1LL);
  return out;
}

TheoremThreshold theorem_threshold(int p, int q) {
  if (q < 3 || p < q) throw std::invalid_argument("require p >= q >= 3");
  auto [t, r] = tq_decompose(p, q);
  TheoremThreshold out;
  out.simple = 2LL * p * p;
  long long div_num = 2LL * (p - 1) * (t - 1);
  out.exact_division = div_num % (q - 1) == 0;
  out.refined = static_cast<long long>(binom(2 * (p - 1), 2)) + static_cast<long long>(binom(t + 1, 2)) -
                div_num / (q - 1) - static_cast<long long>(r);
  return out;
}

}  // namespace pqx
