#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hcc/connectivity.hpp"
#include "hcc/graph.hpp"
#include "hcc/options.hpp"

namespace hcc {

struct PhcdInstance {
  Graph graph;
  int p = 1;
  int k = 0;
};

/// Calls visit for every bipartition (side1 ∋ 0) crossed by at most k
/// edges, each exactly once; the trivial cut (V, ∅) comes first. Vertices
/// are assigned in BFS order from 0 and a branch is cut as soon as its
/// partial crossing count exceeds k. Enumeration stops early when visit
/// returns false; the return value is false in that case.
bool for_each_k_cut(const Graph& g, int k, const std::function<bool(const Cut&)>& visit);

struct CutEnumeration {
  std::vector<Cut> cuts;
  bool cap_exceeded = false;
};

/// All k-cuts, or the first `cap` of them with cap_exceeded set when more
/// exist.
CutEnumeration enumerate_k_cuts(const Graph& g, int k, std::optional<std::uint64_t> cap = std::nullopt);

struct PhcdResult {
  /// The clusters, on YES.
  std::optional<Partition> partition;
  /// The cut cap was hit; the answer is then NO.
  bool cap_exceeded = false;
};

/// Reachability in the layered digraph whose nodes are (placed, j, l) with
/// `placed` one side of a k-cut: each arc adds one highly connected cluster
/// containing the lowest unplaced vertex and pays its edges to the placed
/// part. Requires a connected graph.
PhcdResult solve_connected_phcd(const Graph& g, int p, int k, const SolveOptions& opts = {});

/// Combines per-component (cluster count, deletions) profiles by a layered
/// reachability over the components.
PhcdResult solve_phcd(const PhcdInstance& inst, const SolveOptions& opts = {});

/// Clusters partition V, each highly connected, at most p of them, at most
/// k inter-cluster edges.
bool verify_phcd_solution(const Graph& g, const Partition& clusters, int p, int k, HcConvention conv = {});

}  // namespace hcc
