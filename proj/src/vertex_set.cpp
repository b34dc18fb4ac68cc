#include "hcc/vertex_set.hpp"

#include <ostream>
#include <stdexcept>

namespace hcc {

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range");
    insert(v);
  }
}

VertexSet VertexSet::range(int n) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("vertex range out of bounds");
  VertexSet s;
  for (int i = 0; i < kWords && n > 0; ++i, n -= 64)
    s.words_[i] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::from_vector(const std::vector<Vertex>& members) {
  VertexSet s;
  for (Vertex v : members) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range");
    s.insert(v);
  }
  return s;
}

Vertex VertexSet::next(Vertex after) const {
  int start = after + 1;
  if (start >= kMaxVertices) return -1;
  int w = word(start);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << bit(start));
  while (true) {
    if (bits != 0) return w * 64 + std::countr_zero(bits);
    if (++w == kWords) return -1;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace hcc
