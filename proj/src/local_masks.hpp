#pragma once

// Bitmask view of a graph restricted to a small vertex list, used by the
// subset-table code paths.

#include <bit>
#include <cstdint>
#include <vector>

#include "hcc/connectivity.hpp"
#include "hcc/graph.hpp"

namespace hcc::detail {

struct LocalMasks {
  using Mask = std::uint64_t;

  std::vector<Mask> adjacency;  // adjacency[i] over local indices
  Mask full = 0;

  LocalMasks(const Graph& g, const std::vector<Vertex>& members) {
    const int u = static_cast<int>(members.size());
    full = u == 64 ? ~Mask{0} : ((Mask{1} << u) - 1);
    adjacency.assign(members.size(), 0);
    for (int i = 0; i < u; ++i)
      for (int j = 0; j < u; ++j)
        if (g.has_edge(members[i], members[j])) adjacency[i] |= Mask{1} << j;
  }

  bool highly_connected(Mask s, HcConvention conv) const {
    const int size = std::popcount(s);
    if (size <= 1) return size == 1;
    if (size == 2) {
      int a = std::countr_zero(s);
      return conv.k2_is_hc && (adjacency[a] & s) != 0;
    }
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (2 * std::popcount(adjacency[v] & s) <= size) return false;
    }
    return true;
  }

  /// |E(a, b)| for disjoint local masks.
  int between(Mask a, Mask b) const {
    int total = 0;
    for (Mask rest = a; rest; rest &= rest - 1) total += std::popcount(adjacency[std::countr_zero(rest)] & b);
    return total;
  }
};

}  // namespace hcc::detail
