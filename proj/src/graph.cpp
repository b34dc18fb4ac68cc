#include "hcc/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hcc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 0.." + std::to_string(kMaxVertices));
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adjacency_[static_cast<std::size_t>(e.u)].contains(e.v))
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    adjacency_[static_cast<std::size_t>(e.u)].insert(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].insert(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

int Graph::edges_within(const VertexSet& s) const {
  int twice = 0;
  for (Vertex v : s) twice += neighbors(v).count_common(s);
  return twice / 2;
}

int Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  int total = 0;
  for (Vertex v : a) total += neighbors(v).count_common(b);
  return total;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (Vertex v : keep) {
    if (v >= n_) throw std::invalid_argument("induced: vertex outside graph");
    index[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    int a = index[static_cast<std::size_t>(e.u)];
    int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back({a, b});
  }
  return Graph(next, kept);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> sorted_removed;
  for (Edge e : removed) {
    if (e.u > e.v) std::swap(e.u, e.v);
    sorted_removed.push_back(e);
  }
  std::sort(sorted_removed.begin(), sorted_removed.end());
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_)
    if (!std::binary_search(sorted_removed.begin(), sorted_removed.end(), e)) kept.push_back(e);
  return Graph(n_, kept);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("without_edge: edge not present");
  Edge e{u, v};
  return without_edges(std::span<const Edge>(&e, 1));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Partition canonical_partition(Partition p) {
  std::sort(p.begin(), p.end(),
            [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
  return p;
}

bool is_partition_of(const Partition& p, const VertexSet& universe) {
  VertexSet seen;
  for (const VertexSet& block : p) {
    if (block.empty() || block.intersects(seen)) return false;
    seen |= block;
  }
  return seen == universe;
}

std::vector<Edge> inter_block_edges(const Graph& g, const Partition& p) {
  std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (Vertex v : p[i]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (block_of[static_cast<std::size_t>(e.u)] != block_of[static_cast<std::size_t>(e.v)])
      out.push_back(e);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << '-' << e.v; }

}  // namespace hcc
