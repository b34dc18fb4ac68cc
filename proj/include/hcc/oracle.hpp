#pragma once

#include <optional>
#include <vector>

#include "hcc/connectivity.hpp"
#include "hcc/graph.hpp"

// Exhaustive reference solvers. Slow by design; each has a hard size cap
// and throws std::invalid_argument beyond it.
namespace hcc::oracle {

inline constexpr int kMaxPartitionVertices = 10;
inline constexpr int kMaxSubsetVertices = 16;

/// Calls visit on every set partition of {0..n-1} (restricted growth
/// strings).
template <class Visit>
void for_each_set_partition(int n, Visit&& visit);

struct HcdOptimum {
  int min_deletions = 0;
  /// Every partition attaining the minimum, canonical.
  std::vector<Partition> optimal;
};

/// nullopt when no partition into highly connected blocks exists.
std::optional<HcdOptimum> brute_hcd(const Graph& g, HcConvention conv = {});
/// Some partition into at most p highly connected blocks with at most k
/// inter-block edges.
std::optional<Partition> brute_phcd(const Graph& g, int p, int k, HcConvention conv = {});
std::optional<VertexSet> brute_isolated(const Graph& g, const std::vector<int>& charges, int k, int s,
                                        HcConvention conv = {});
std::optional<VertexSet> brute_seeded(const Graph& g, const VertexSet& seed, int a, int k, HcConvention conv = {});
/// Every bipartition with vertex 0 on side1 and at most k crossing edges,
/// ordered by side1 as a bitmask.
std::vector<Cut> brute_cuts(const Graph& g, int k);

template <class Visit>
void for_each_set_partition(int n, Visit&& visit) {
  if (n == 0) {
    visit(Partition{});
    return;
  }
  std::vector<int> label(n, 0);
  std::vector<int> top(n, 0);  // top[i] = max(label[0..i])
  while (true) {
    int blocks = top[n - 1] + 1;
    Partition p(blocks);
    for (int v = 0; v < n; ++v) p[label[v]].insert(v);
    visit(p);
    int i = n - 1;
    while (i > 0 && label[i] == top[i - 1] + 1) --i;
    if (i == 0) return;
    ++label[i];
    top[i] = std::max(top[i - 1], label[i]);
    for (int j = i + 1; j < n; ++j) {
      label[j] = 0;
      top[j] = top[i];
    }
  }
}

}  // namespace hcc::oracle
