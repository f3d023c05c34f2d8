#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqx {

/// Fixed-width bit vector used for edges and vertex sets. Bit i corresponds
/// to vertex i+1 of the host hypergraph. Comparison is numeric on the bit
/// pattern, which for sets of equal cardinality coincides with colex order.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int width) : width_(width), words_((width + 63) / 64, 0) {
    if (width < 0) throw std::invalid_argument("Bitset: negative width");
  }

  static Bitset from_bits(int width, const std::vector<int>& zero_based_bits) {
    Bitset b(width);
    for (int i : zero_based_bits) b.set(i);
    return b;
  }

  int width() const { return width_; }

  void set(int i) {
    check(i);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    check(i);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  bool test(int i) const {
    check(i);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(width_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(width_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  /// Set difference: bits in *this but not in o.
  Bitset minus(const Bitset& o) const {
    Bitset r(width_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  bool operator==(const Bitset& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }

  bool operator!=(const Bitset& o) const { return !(*this == o); }

  /// Numeric order on the packed words, most significant word first.
  /// Equal-cardinality sets compare in colexicographic order.
  bool operator<(const Bitset& o) const {
    for (size_t i = words_.size(); i-- > 0;)
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
  }

  /// Zero-based positions of set bits, ascending.
  std::vector<int> bits() const {
    std::vector<int> out;
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        out.push_back(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each_bit(Fn&& fn) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        fn(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  size_t hash() const {
    size_t h = std::hash<int>{}(width_);
    for (uint64_t w : words_) h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= width_) throw std::out_of_range("Bitset: bit index out of range");
  }

  int width_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace pqx
