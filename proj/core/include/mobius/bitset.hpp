#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mobius {

// Fixed-width bitset sized at runtime. Used for circle membership masks and
// hyperedge member sets; the solver relies on intersect_count / intersects
// not allocating.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

  int size() const { return nbits_; }
  int word_count() const { return static_cast<int>(words_.size()); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int intersect_count(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool operator==(const Bitset& o) const = default;

  // First set bit at position >= from, or -1.
  int find_next(int from) const {
    if (from >= nbits_) return -1;
    int wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) {
        int bit = (wi << 6) + std::countr_zero(w);
        return bit < nbits_ ? bit : -1;
      }
      if (++wi >= static_cast<int>(words_.size())) return -1;
      w = words_[wi];
    }
  }
  int find_first() const { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int bit = static_cast<int>((wi << 6) + std::countr_zero(w));
        f(bit);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int b) { out.push_back(b); });
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
  int nbits_ = 0;
};

}  // namespace mobius
