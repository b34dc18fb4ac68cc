#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "hcc/vertex_set.hpp"

namespace hcc {

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edge removal and induced subgraphs return
/// new graphs; induced subgraphs renumber the kept vertices in increasing
/// order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints outside 0..n-1.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  const VertexSet& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  /// Sorted, canonical (u < v).
  const std::vector<Edge>& edges() const { return edges_; }

  /// |E(G[s])|
  int edges_within(const VertexSet& s) const;
  /// |E(a, b)|, counting each edge with one endpoint in a and the other in b.
  /// The sets are expected to be disjoint.
  int edges_between(const VertexSet& a, const VertexSet& b) const;

  Graph induced(const VertexSet& keep) const;
  Graph without_edges(std::span<const Edge> removed) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// Vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Clusters of a vertex partition.
using Partition = std::vector<VertexSet>;

/// Blocks sorted by their smallest vertex.
Partition canonical_partition(Partition p);
/// True iff the blocks are nonempty, pairwise disjoint and cover `universe`.
bool is_partition_of(const Partition& p, const VertexSet& universe);
/// Edges whose endpoints lie in different blocks.
std::vector<Edge> inter_block_edges(const Graph& g, const Partition& p);

std::ostream& operator<<(std::ostream& os, const Edge& e);

}  // namespace hcc
