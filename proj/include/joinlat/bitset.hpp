#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace joinlat {

/// Fixed-width bit vector. Subgroups are stored as element-index sets and
/// relations as rows of these, so intersection and inclusion tests reduce to
/// word operations.
class BitSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set_all() {
    for (auto &w : words_) w = ~Word{0};
    trim();
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const BitSet &other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const BitSet &other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  BitSet &operator&=(const BitSet &other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  BitSet &operator|=(const BitSet &other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  /// Removes every bit of `other`.
  BitSet &subtract(const BitSet &other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet &b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet &b) { return a |= b; }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t k = from / kWordBits;
    Word w = words_[k] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return size_;
      w = words_[k];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F> void for_each(F &&f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Lexicographic comparison of the sorted index lists.
  bool index_less(const BitSet &other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word a = words_[k], b = other.words_[k];
      if (a == b) continue;
      Word diff = a ^ b;
      std::size_t x = k * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
      // Below x both lists agree; a proper prefix sorts first.
      if (test(x)) return other.next(x) != size_;
      return next(x) == size_;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const BitSet &, const BitSet &) = default;

private:
  void trim() {
    if (size_ % kWordBits && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet &b) const { return b.hash(); }
};

} // namespace joinlat
