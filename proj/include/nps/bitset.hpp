#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nps {

/// Fixed-width dynamic bitset over element indices of a group.
///
/// Ordering is lexicographic on the sorted member list: the set containing
/// the smallest element of the symmetric difference compares less.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t width() const { return nbits_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  /// Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * kWordBits + b);
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = nbits_ * 0x9e3779b97f4a7c15ull;
    for (Word w : words_) h = (h ^ std::hash<Word>{}(w)) * 0x100000001b3ull + (h >> 29);
    return h;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  friend std::strong_ordering lex_compare(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      Word diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      Word low = diff & (~diff + 1);
      return (a.words_[i] & low) ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }
    return a.words_.size() <=> b.words_.size();
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace nps
