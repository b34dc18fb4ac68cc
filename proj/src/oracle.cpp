#include "hcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hcc::oracle {

namespace {

void require(int n, int cap) {
  if (n > cap) throw std::invalid_argument("graph too large for the oracle");
}

bool all_blocks_hc(const Graph& g, const Partition& p, HcConvention conv) {
  for (const VertexSet& b : p)
    if (!is_highly_connected(g, b, conv)) return false;
  return true;
}

// Visits subsets of {0..n-1} as bitmasks.
template <class Visit>
void for_each_mask(int n, Visit&& visit) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) visit(m);
}

}  // namespace

std::optional<HcdOptimum> brute_hcd(const Graph& g, HcConvention conv) {
  require(g.vertex_count(), kMaxPartitionVertices);
  std::optional<HcdOptimum> best;
  for_each_set_partition(g.vertex_count(), [&](const Partition& p) {
    if (!all_blocks_hc(g, p, conv)) return;
    const int cost = static_cast<int>(inter_block_edges(g, p).size());
    if (!best || cost < best->min_deletions) best = HcdOptimum{cost, {}};
    if (cost == best->min_deletions) best->optimal.push_back(canonical_partition(p));
  });
  return best;
}

std::optional<Partition> brute_phcd(const Graph& g, int p, int k, HcConvention conv) {
  require(g.vertex_count(), kMaxPartitionVertices);
  std::optional<Partition> found;
  for_each_set_partition(g.vertex_count(), [&](const Partition& part) {
    if (found || static_cast<int>(part.size()) > p || !all_blocks_hc(g, part, conv)) return;
    if (static_cast<int>(inter_block_edges(g, part).size()) <= k) found = canonical_partition(part);
  });
  return found;
}

std::optional<VertexSet> brute_isolated(const Graph& g, const std::vector<int>& charges, int k, int s,
                                        HcConvention conv) {
  const int n = g.vertex_count();
  require(n, kMaxSubsetVertices);
  std::optional<VertexSet> found;
  for_each_mask(n, [&](std::uint64_t m) {
    if (found || std::popcount(m) != s || s == 0) return;
    const VertexSet c = VertexSet::from_mask(m);
    if (!is_highly_connected(g, c, conv)) return;
    int cost = cut_size(g, c);
    for (Vertex v : c) cost += charges.empty() ? 0 : charges[v];
    if (cost <= k) found = c;
  });
  return found;
}

std::optional<VertexSet> brute_seeded(const Graph& g, const VertexSet& seed, int a, int k, HcConvention conv) {
  const int n = g.vertex_count();
  require(n, kMaxSubsetVertices);
  std::optional<VertexSet> found;
  const int target = seed.size() + a;
  for_each_mask(n, [&](std::uint64_t m) {
    if (found || std::popcount(m) != target || target == 0) return;
    const VertexSet c = VertexSet::from_mask(m);
    if (!seed.is_subset_of(c) || !is_highly_connected(g, c, conv)) return;
    if (g.edge_count() - g.edges_within(c) <= k) found = c;
  });
  return found;
}

std::vector<Cut> brute_cuts(const Graph& g, int k) {
  const int n = g.vertex_count();
  require(n, kMaxSubsetVertices);
  std::vector<Cut> out;
  if (n == 0) return out;
  const VertexSet all = g.vertices();
  for_each_mask(n, [&](std::uint64_t m) {
    if (!(m & 1)) return;
    const VertexSet side1 = VertexSet::from_mask(m);
    const VertexSet side2 = all - side1;
    const int crossing = g.edges_between(side1, side2);
    if (crossing <= k) out.push_back(Cut{side1, side2, crossing});
  });
  return out;
}

}  // namespace hcc::oracle
