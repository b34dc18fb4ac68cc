#include "hcc/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hcc {

bool is_highly_connected(const Graph& g, const VertexSet& s, HcConvention conv) {
  const int size = s.size();
  if (size == 0) throw std::invalid_argument("empty vertex set");
  if (size == 1) return true;
  if (size == 2) {
    Vertex a = s.front();
    return conv.k2_is_hc && g.has_edge(a, s.next(a));
  }
  for (Vertex v : s)
    if (2 * g.neighbors(v).count_common(s) <= size) return false;
  return true;
}

int cut_size(const Graph& g, const VertexSet& s) {
  int total = 0;
  for (Vertex v : s) total += g.degree(v) - g.neighbors(v).count_common(s);
  return total;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.insert(unseen.front());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Cut global_min_cut(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("minimum cut needs at least two vertices");
  const VertexSet all = g.vertices();

  auto components = connected_components(g);
  if (components.size() > 1) return Cut{components.front(), all - components.front(), 0};

  // Stoer–Wagner on a dense weight matrix; groups[i] holds the original
  // vertices merged into super-vertex i.
  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    w[e.u][e.v] = 1;
    w[e.v][e.u] = 1;
  }
  std::vector<VertexSet> groups(n);
  for (int i = 0; i < n; ++i) groups[i].insert(i);
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;

  int best = std::numeric_limits<int>::max();
  VertexSet best_side;
  while (active.size() > 1) {
    std::vector<int> key(n, 0);
    std::vector<bool> added(n, false);
    int prev = -1;
    int last = -1;
    for (std::size_t step = 0; step < active.size(); ++step) {
      int pick = -1;
      for (int v : active)
        if (!added[v] && (pick < 0 || key[v] > key[pick])) pick = v;
      added[pick] = true;
      prev = last;
      last = pick;
      for (int v : active)
        if (!added[v]) key[v] += w[pick][v];
    }
    const int phase_cut = key[last];
    if (phase_cut < best) {
      best = phase_cut;
      best_side = groups[last];
    }
    // merge last into prev
    groups[prev] |= groups[last];
    for (int v : active) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    active.erase(std::find(active.begin(), active.end(), last));
  }

  VertexSet side1 = best_side.contains(0) ? best_side : all - best_side;
  return Cut{side1, all - side1, best};
}

int edge_connectivity(const Graph& g) { return global_min_cut(g).crossing; }

int local_edge_connectivity(const Graph& g, Vertex source, Vertex sink, int cap) {
  if (source == sink) throw std::invalid_argument("local connectivity needs distinct vertices");
  const int n = g.vertex_count();
  // flow[a][b] in {-1, 0, 1}, antisymmetric; residual = edge(a,b) - flow[a][b]
  std::vector<std::vector<signed char>> flow(n, std::vector<signed char>(n, 0));
  std::vector<int> parent(n);
  int paths = 0;
  while (paths < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[sink] < 0) {
      int a = q.front();
      q.pop();
      for (Vertex b : g.neighbors(a)) {
        if (parent[b] >= 0) continue;
        if (1 - flow[a][b] <= 0) continue;
        parent[b] = a;
        q.push(b);
      }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source;) {
      int a = parent[b];
      ++flow[a][b];
      --flow[b][a];
      b = a;
    }
    ++paths;
  }
  return paths;
}

bool pairwise_k_connected(const Graph& g, Vertex u, Vertex v, int k) {
  if (k < 0) return true;
  return local_edge_connectivity(g, u, v, k + 1) > k;
}

std::vector<VertexSet> k_connected_classes(const Graph& g, int k) {
  std::vector<VertexSet> classes;
  for (const VertexSet& comp : connected_components(g)) {
    VertexSet rest = comp;
    while (!rest.empty()) {
      Vertex rep = rest.front();
      VertexSet cls;
      cls.insert(rep);
      for (Vertex v : rest)
        if (v != rep && pairwise_k_connected(g, rep, v, k)) cls.insert(v);
      rest -= cls;
      classes.push_back(cls);
    }
  }
  return canonical_partition(std::move(classes));
}

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex source, std::vector<int>* parent = nullptr) {
  const auto n = g.vertex_count();
  std::vector<int> dist(n, kUnreachable);
  if (parent) parent->assign(n, -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex a = q.front();
    q.pop();
    for (Vertex b : g.neighbors(a)) {
      if (dist[b] != kUnreachable) continue;
      dist[b] = dist[a] + 1;
      if (parent) (*parent)[b] = a;
      q.push(b);
    }
  }
  return dist;
}

}  // namespace

DistanceTable distance_and_diameter(const Graph& g) {
  DistanceTable table;
  bool connected = true;
  int diameter = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto d = bfs_distances(g, v);
    for (int x : d) {
      if (x == kUnreachable)
        connected = false;
      else
        diameter = std::max(diameter, x);
    }
    table.dist.push_back(std::move(d));
  }
  if (connected) table.diameter = diameter;
  return table;
}

std::optional<std::array<Vertex, 4>> find_distance3_path(const Graph& g) {
  std::vector<int> parent;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto d = bfs_distances(g, u, &parent);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (d[v] != 3) continue;
      Vertex y = parent[v];
      Vertex x = parent[y];
      return std::array<Vertex, 4>{u, x, y, v};
    }
  }
  return std::nullopt;
}

}  // namespace hcc
