#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hcc/graph.hpp"

// Shared helpers for the test binaries. Everything here is deliberately
// naive and independent of the library's algorithms.
namespace hcc::test {

/// One representative of every isomorphism class of connected graphs on
/// 1..max_n vertices (max_n ≤ 7), grouped by vertex count.
const std::vector<Graph>& connected_catalog(int max_n);

/// G(n, p) with n uniform in [1, max_n] and p drawn from {0.2, 0.4, 0.6, 0.8}.
Graph random_small_graph(std::mt19937_64& rng, int max_n);

/// |E(s, V∖s)| from the edge list.
int crossing(const Graph& g, std::uint64_t side);
/// Minimum crossing over all nonempty proper subsets (n ≥ 2).
int brute_edge_connectivity(const Graph& g);
/// Minimum crossing over subsets holding u but not v.
int brute_local_connectivity(const Graph& g, Vertex u, Vertex v);
/// Every vertex has more than |s|/2 neighbours inside s (any size).
bool degree_criterion(const Graph& g, const VertexSet& s);
/// Shortest-path distances inside G[s] by repeated relaxation; -1 if
/// unreachable.
int induced_diameter(const Graph& g, const VertexSet& s);

/// Min-plus convolution by the O(4^u) double loop over all mask pairs.
std::vector<std::int32_t> naive_min_plus(const std::vector<std::int32_t>& f, const std::vector<std::int32_t>& g,
                                         std::int32_t bound);

std::uint64_t binomial(int n, int r);

}  // namespace hcc::test
