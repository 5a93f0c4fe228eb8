#ifndef PGMD_BITSET_HPP
#define PGMD_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace pgmd {

// Fixed-size bitset sized at construction. Used for adjacency rows and
// vertex sets; membership tests and whole-set comparisons are the hot
// operations in the resolving-set search.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bit_count)
      : bit_count_(bit_count), words_((bit_count + 63) / 64, 0) {}

  int size() const { return bit_count_; }

  bool test(int i) const {
    assert(i >= 0 && i < bit_count_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < bit_count_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < bit_count_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(bit_count_ == o.bit_count_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(bit_count_ == o.bit_count_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.bit_count_ == b.bit_count_ && a.words_ == b.words_;
  }

  // Ascending order of set bits.
  template <typename F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int bit_count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace pgmd

#endif  // PGMD_BITSET_HPP
