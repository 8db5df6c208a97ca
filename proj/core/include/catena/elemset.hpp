#pragma once

#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace catena {

/// Fixed-universe bitset used for subsets of ring elements, group elements
/// and lattice nodes. Universe sizes stay small (<= a few hundred).
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElemSet of(std::size_t universe, std::initializer_list<uint32_t> xs) {
    ElemSet s(universe);
    for (uint32_t x : xs) s.set(x);
    return s;
  }

  std::size_t universe() const { return universe_; }

  void set(uint32_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(uint32_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  bool operator==(const ElemSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const ElemSet& o) const { return !(*this == o); }

  /// Lexicographic order on the sorted index sequences; total and canonical.
  bool operator<(const ElemSet& o) const {
    auto a = indices();
    auto b = o.indices();
    return a < b;
  }

  std::vector<uint32_t> indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        unsigned tz = static_cast<unsigned>(__builtin_ctzll(bits));
        out.push_back(static_cast<uint32_t>(w * 64 + tz));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<uint64_t> words_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace catena
