#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pqx/bitset.hpp"

namespace pqx {

/// C(n,k) in 64 bits; throws on overflow.
inline uint64_t binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binom: value exceeds 64 bits");
  }
  return static_cast<uint64_t>(r);
}

/// Streams all k-subsets of {0,...,n-1} in colexicographic order as sorted
/// index vectors. fn returning false stops the enumeration early.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (!fn(static_cast<const std::vector<int>&>(c))) return;
    // colex successor: bump the lowest element that can move, reset below it
    int i = 0;
    while (i < k) {
      int lim = (i + 1 < k) ? c[i + 1] : n;
      if (c[i] + 1 < lim) break;
      ++i;
    }
    if (i == k) return;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
}

/// All k-subsets of {0,...,n-1} as bitsets of the given width, colex order.
inline std::vector<Bitset> all_k_subsets(int n, int k, int width) {
  std::vector<Bitset> out;
  out.reserve(binom(n, k));
  for_each_k_subset(n, k, [&](const std::vector<int>& c) {
    out.push_back(Bitset::from_bits(width, c));
    return true;
  });
  return out;
}

/// Colex rank of a sorted zero-based k-subset (combinatorial number system).
inline uint64_t colex_rank(const std::vector<int>& sorted) {
  uint64_t r = 0;
  for (size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i], static_cast<long long>(i) + 1);
  return r;
}

/// Inverse of colex_rank: the k-subset of rank r, sorted ascending.
inline std::vector<int> colex_unrank(uint64_t r, int k) {
  std::vector<int> out(k);
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binom(c + 1, i) <= r) ++c;
    out[i - 1] = c;
    r -= binom(c, i);
  }
  return out;
}

}  // namespace pqx
