#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <vector>

namespace hcc {

using Vertex = int;

/// Largest vertex count any Graph may have.
inline constexpr int kMaxVertices = 256;

/// Fixed-width bitset over vertex ids 0..kMaxVertices-1.
///
/// Iterating a VertexSet visits members in increasing order. The ordering
/// operators compare the sets as 256-bit unsigned integers, which gives a
/// total order suitable for ordered containers.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    Vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);

  /// {0, 1, ..., n-1}
  static VertexSet range(int n);
  static VertexSet from_mask(std::uint64_t mask);
  static VertexSet from_vector(const std::vector<Vertex>& members);

  bool contains(Vertex v) const { return (words_[word(v)] >> bit(v)) & 1u; }
  void insert(Vertex v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
  void erase(Vertex v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex front() const { return next(-1); }
  /// Smallest member strictly greater than `after`, or -1.
  Vertex next(Vertex after) const;

  bool is_subset_of(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  /// |this ∩ other| without materializing the intersection.
  int count_common(const VertexSet& other) const {
    int total = 0;
    for (int i = 0; i < kWords; ++i) total += std::popcount(words_[i] & other.words_[i]);
    return total;
  }

  /// Members below 64 as a plain mask.
  std::uint64_t low_word() const { return words_[0]; }
  std::vector<Vertex> to_vector() const;
  std::size_t hash() const;

  iterator begin() const { return iterator(this, front()); }
  iterator end() const { return iterator(this, -1); }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    for (int i = kWords - 1; i >= 0; --i)
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
  }

 private:
  static int word(Vertex v) { return v >> 6; }
  static int bit(Vertex v) { return v & 63; }

  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Prints "{0,1,2}".
std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace hcc

template <>
struct std::hash<hcc::VertexSet> {
  std::size_t operator()(const hcc::VertexSet& s) const { return s.hash(); }
};
