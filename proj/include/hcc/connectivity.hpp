#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hcc/graph.hpp"

namespace hcc {

/// Small-size convention for the highly-connected predicate.
///
/// Singletons are always highly connected. K2 has edge connectivity 1, which
/// is not strictly greater than 2/2, so it is excluded unless `k2_is_hc`.
struct HcConvention {
  bool k2_is_hc = false;
};

/// True iff |s| = 1, or every vertex of G[s] has induced degree > |s|/2
/// (K2 admitted only under the k2_is_hc convention).
/// Throws std::invalid_argument for an empty set.
bool is_highly_connected(const Graph& g, const VertexSet& s, HcConvention conv = {});

/// Number of edges with exactly one endpoint in s.
int cut_size(const Graph& g, const VertexSet& s);

/// A bipartition of the vertices together with its crossing edge count.
struct Cut {
  VertexSet side1;
  VertexSet side2;
  int crossing = 0;

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Stoer–Wagner minimum cut. side1 always contains vertex 0. For a
/// disconnected graph the result has crossing 0 with side1 the component of
/// vertex 0. Throws std::invalid_argument when n < 2.
Cut global_min_cut(const Graph& g);
int edge_connectivity(const Graph& g);

/// min(λ(u, v), cap) by unit-capacity augmenting paths.
int local_edge_connectivity(const Graph& g, Vertex u, Vertex v, int cap);
/// True iff every u–v cut has more than k edges.
bool pairwise_k_connected(const Graph& g, Vertex u, Vertex v, int k);
/// Classes of the equivalence "λ(u, v) > k", each sorted by first vertex.
std::vector<VertexSet> k_connected_classes(const Graph& g, int k);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

inline constexpr int kUnreachable = -1;

struct DistanceTable {
  /// dist[u][v], kUnreachable across components.
  std::vector<std::vector<int>> dist;
  /// Empty when the graph is disconnected (infinite diameter).
  std::optional<int> diameter;
};

DistanceTable distance_and_diameter(const Graph& g);

/// A shortest path (u, x, y, v) with dist(u, v) = 3, or nothing when no pair
/// is at distance exactly 3 within a component. The pair is the
/// lexicographically smallest (u, v).
std::optional<std::array<Vertex, 4>> find_distance3_path(const Graph& g);

}  // namespace hcc
