#include "hcc/phcd.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hcc {

namespace {

std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  VertexSet seen;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen.contains(root)) continue;
    std::deque<Vertex> q{root};
    seen.insert(root);
    while (!q.empty()) {
      Vertex a = q.front();
      q.pop_front();
      order.push_back(a);
      for (Vertex b : g.neighbors(a) - seen) {
        seen.insert(b);
        q.push_back(b);
      }
    }
  }
  return order;
}

struct CutSearch {
  const Graph& g;
  int k;
  const std::function<bool(const Cut&)>& visit;
  std::vector<Vertex> order;
  VertexSet side1, side2;

  // Returns false once the visitor asks to stop.
  bool run(std::size_t depth, int crossing) {
    if (depth == order.size()) return visit(Cut{side1, side2, crossing});
    const Vertex v = order[depth];
    const int to1 = g.neighbors(v).count_common(side1);
    const int to2 = g.neighbors(v).count_common(side2);
    if (crossing + to2 <= k) {
      side1.insert(v);
      bool go = run(depth + 1, crossing + to2);
      side1.erase(v);
      if (!go) return false;
    }
    if (crossing + to1 <= k) {
      side2.insert(v);
      bool go = run(depth + 1, crossing + to1);
      side2.erase(v);
      if (!go) return false;
    }
    return true;
  }
};

// Cheapest way (deletions) to split a connected graph into exactly j
// highly connected clusters, for j = 1..p; entries are nullopt if
// impossible within k.
struct Profile {
  std::vector<std::optional<std::pair<int, Partition>>> by_count;  // index j
  bool cap_exceeded = false;
};

Profile connected_profile(const Graph& g, int p, int k, const SolveOptions& opts) {
  Profile prof;
  prof.by_count.assign(p + 1, std::nullopt);
  const VertexSet all = g.vertices();

  // Nodes of D: every side of every k-cut, in both orientations.
  std::unordered_set<VertexSet> placeable;
  std::uint64_t count = 0;
  bool complete = for_each_k_cut(g, k, [&](const Cut& c) {
    if (opts.cut_cap && count >= *opts.cut_cap) return false;
    ++count;
    placeable.insert(c.side1);
    placeable.insert(c.side2);
    return true;
  });
  if (opts.stats) opts.stats->cuts_enumerated += count;
  if (!complete) {
    prof.cap_exceeded = true;
    return prof;
  }
  std::vector<VertexSet> nodes(placeable.begin(), placeable.end());
  std::sort(nodes.begin(), nodes.end());

  std::unordered_map<VertexSet, bool> hc_memo;
  auto highly_connected = [&](const VertexSet& c) {
    auto [it, fresh] = hc_memo.try_emplace(c, false);
    if (fresh) it->second = is_highly_connected(g, c, opts.convention);
    return it->second;
  };

  struct Label {
    int deletions;
    VertexSet previous;
  };
  // layer[j]: placed set -> cheapest label reaching it with j clusters
  std::vector<std::unordered_map<VertexSet, Label>> layer(p + 1);
  layer[0].emplace(VertexSet{}, Label{0, VertexSet{}});
  for (int j = 0; j < p; ++j) {
    for (const auto& [placed, label] : layer[j]) {
      if (placed == all) continue;
      const Vertex lowest = (all - placed).front();
      for (const VertexSet& next : nodes) {
        if (!next.contains(lowest) || !placed.is_subset_of(next) || next == placed) continue;
        const VertexSet cluster = next - placed;
        if (opts.stats) ++opts.stats->branch_nodes;
        if (!highly_connected(cluster)) continue;
        const int l = label.deletions + g.edges_between(placed, cluster);
        if (l > k) continue;
        auto [it, fresh] = layer[j + 1].try_emplace(next, Label{l, placed});
        if (!fresh && l < it->second.deletions) it->second = Label{l, placed};
      }
    }
    auto done = layer[j + 1].find(all);
    if (done == layer[j + 1].end()) continue;
    Partition clusters;
    VertexSet cur = all;
    for (int i = j + 1; i > 0; --i) {
      const VertexSet prev = layer[i].at(cur).previous;
      clusters.push_back(cur - prev);
      cur = prev;
    }
    prof.by_count[j + 1] = std::pair{done->second.deletions, canonical_partition(std::move(clusters))};
  }
  return prof;
}

VertexSet lift(const VertexSet& s, const std::vector<Vertex>& origin) {
  VertexSet out;
  for (Vertex v : s) out.insert(origin[v]);
  return out;
}

}  // namespace

bool for_each_k_cut(const Graph& g, int k, const std::function<bool(const Cut&)>& visit) {
  if (g.vertex_count() == 0 || k < 0) return true;
  CutSearch search{g, k, visit, bfs_order(g), {}, {}};
  // vertex 0 is first in BFS order and pinned to side1
  search.side1.insert(0);
  return search.run(1, 0);
}

CutEnumeration enumerate_k_cuts(const Graph& g, int k, std::optional<std::uint64_t> cap) {
  CutEnumeration out;
  for_each_k_cut(g, k, [&](const Cut& c) {
    if (cap && out.cuts.size() >= *cap) {
      out.cap_exceeded = true;
      return false;
    }
    out.cuts.push_back(c);
    return true;
  });
  return out;
}

PhcdResult solve_connected_phcd(const Graph& g, int p, int k, const SolveOptions& opts) {
  if (p < 1 || k < 0) throw std::invalid_argument("p must be at least 1 and k non-negative");
  PhcdResult result;
  if (g.vertex_count() == 0) {
    result.partition = Partition{};
    return result;
  }
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  Profile prof = connected_profile(g, p, k, opts);
  result.cap_exceeded = prof.cap_exceeded;
  for (auto& entry : prof.by_count)
    if (entry) {
      result.partition = std::move(entry->second);
      break;
    }
  return result;
}

PhcdResult solve_phcd(const PhcdInstance& inst, const SolveOptions& opts) {
  if (inst.p < 1 || inst.k < 0) throw std::invalid_argument("p must be at least 1 and k non-negative");
  const Graph& g = inst.graph;
  PhcdResult result;

  // Q: states (clusters used, deletions used) after each prefix of the
  // components, with a back pointer for the certificate.
  struct State {
    int prev_a, prev_b, choice;
  };
  const int width = (inst.p + 1) * (inst.k + 1);
  auto key = [&](int a, int b) { return a * (inst.k + 1) + b; };
  std::vector<std::vector<std::optional<State>>> reach(1, std::vector<std::optional<State>>(width));
  reach[0][key(0, 0)] = State{-1, -1, -1};
  std::vector<Profile> profiles;
  auto comps = connected_components(g);

  for (std::size_t i = 0; i < comps.size(); ++i) {
    Profile prof = connected_profile(g.induced(comps[i]), inst.p, inst.k, opts);
    if (prof.cap_exceeded) {
      result.cap_exceeded = true;
      return result;
    }
    std::vector<std::optional<State>> next(width);
    for (int a = 0; a <= inst.p; ++a)
      for (int b = 0; b <= inst.k; ++b) {
        if (!reach[i][key(a, b)]) continue;
        for (int j = 1; a + j <= inst.p; ++j) {
          if (!prof.by_count[j]) continue;
          const int nb = b + prof.by_count[j]->first;
          if (nb > inst.k || next[key(a + j, nb)]) continue;
          next[key(a + j, nb)] = State{a, b, j};
        }
      }
    reach.push_back(std::move(next));
    profiles.push_back(std::move(prof));
  }

  const auto& last = reach.back();
  for (int a = 0; a <= inst.p; ++a)
    for (int b = 0; b <= inst.k; ++b) {
      if (!last[key(a, b)]) continue;
      Partition clusters;
      int ca = a, cb = b;
      for (std::size_t i = comps.size(); i > 0; --i) {
        const State& st = *reach[i][key(ca, cb)];
        const auto origin = comps[i - 1].to_vector();
        for (const VertexSet& c : profiles[i - 1].by_count[st.choice]->second) clusters.push_back(lift(c, origin));
        ca = st.prev_a;
        cb = st.prev_b;
      }
      result.partition = canonical_partition(std::move(clusters));
      return result;
    }
  return result;
}

bool verify_phcd_solution(const Graph& g, const Partition& clusters, int p, int k, HcConvention conv) {
  if (!is_partition_of(clusters, g.vertices())) return false;
  if (static_cast<int>(clusters.size()) > p) return false;
  for (const VertexSet& c : clusters)
    if (!is_highly_connected(g, c, conv)) return false;
  return static_cast<int>(inter_block_edges(g, clusters).size()) <= k;
}

}  // namespace hcc
