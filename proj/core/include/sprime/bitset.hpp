#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sprime {

// Fixed-width dynamic bitset over element indices 0..width-1.
//
// Ordering: subsets compare as little-endian bit strings, i.e. the lowest
// index at which two sets differ decides, and the set missing that element
// is smaller. This is the deterministic order used for enumeration output
// and witness tie-breaking.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int width) : width_(width), words_((width + 63) / 64, 0) {}

  static Bitset of(int width, std::initializer_list<int> elems) {
    Bitset b(width);
    for (int e : elems) b.set(e);
    return b;
  }

  static Bitset full_set(int width) {
    Bitset b(width);
    for (int i = 0; i < width; ++i) b.set(i);
    return b;
  }

  int width() const { return width_; }

  bool test(int i) const {
    assert(i >= 0 && i < width_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < width_);
    words_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < width_);
    words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool full() const { return count() == width_; }

  bool subset_of(const Bitset& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset united(const Bitset& o) const {
    Bitset r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }

  Bitset intersected(const Bitset& o) const {
    Bitset r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  Bitset minus(const Bitset& o) const {
    Bitset r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  void unite_with(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }

  bool operator==(const Bitset& o) const = default;

  // -1, 0, +1 in little-endian bitstring order.
  static int compare(const Bitset& a, const Bitset& b) {
    assert(a.width_ == b.width_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (a.words_[i] & low) ? 1 : -1;
      }
    }
    return 0;
  }

  bool operator<(const Bitset& o) const { return compare(*this, o) < 0; }

  // Lowest set index, or -1 if empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        f(int(i * 64) + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(std::size_t(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](int i) {
      if (!first_elem) s += ",";
      s += std::to_string(i);
      first_elem = false;
    });
    s += "}";
    return s;
  }

 private:
  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sprime
