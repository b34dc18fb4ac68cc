#include "support.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "hcc/instance_io.hpp"

namespace hcc::test {

namespace {

using Code = std::uint32_t;

int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

bool adjacent(Code code, int u, int v, int n) { return (code >> pair_index(u, v, n)) & 1u; }

// Smallest code over relabelings that keep vertices sorted by a degree
// based invariant; isomorphic graphs share the minimum.
Code canonical(Code code, int n) {
  std::vector<int> deg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && adjacent(code, u, v, n)) ++deg[u];
  std::vector<std::vector<int>> inv(n);
  for (int u = 0; u < n; ++u) {
    inv[u].push_back(deg[u]);
    std::vector<int> nd;
    for (int v = 0; v < n; ++v)
      if (u != v && adjacent(code, u, v, n)) nd.push_back(deg[v]);
    std::sort(nd.begin(), nd.end());
    inv[u].insert(inv[u].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::pair<int, int>> classes;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    classes.push_back({i, j});
    std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }
  Code best = ~Code{0};
  // Enumerate the product of permutations within each class.
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      Code out = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (adjacent(code, order[i], order[j], n)) out |= Code{1} << pair_index(i, j, n);
      best = std::min(best, out);
      return;
    }
    auto [b, e] = classes[c];
    do {
      self(self, c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(rec, 0);
  return best;
}

Graph decode(Code code, int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adjacent(code, u, v, n)) edges.push_back(Edge{u, v});
  return Graph(n, edges);
}

}  // namespace

const std::vector<Graph>& connected_catalog(int max_n) {
  static std::map<int, std::vector<Graph>> cache;
  if (max_n < 1 || max_n > 7) throw std::invalid_argument("catalog covers 1..7 vertices");
  if (auto it = cache.find(max_n); it != cache.end()) return it->second;

  // Every connected graph on n vertices arises from a connected graph on
  // n-1 vertices by adding a vertex with a nonempty neighbourhood (delete a
  // leaf of a spanning tree).
  std::vector<Graph> out;
  std::set<Code> level = {0};
  out.push_back(Graph(1));
  for (int n = 2; n <= max_n; ++n) {
    std::set<Code> next;
    for (Code code : level) {
      for (Code nb = 1; nb < (Code{1} << (n - 1)); ++nb) {
        Code grown = 0;
        for (int u = 0; u < n - 1; ++u)
          for (int v = u + 1; v < n - 1; ++v)
            if (adjacent(code, u, v, n - 1)) grown |= Code{1} << pair_index(u, v, n);
        for (int u = 0; u < n - 1; ++u)
          if ((nb >> u) & 1u) grown |= Code{1} << pair_index(u, n - 1, n);
        next.insert(canonical(grown, n));
      }
    }
    for (Code code : next) out.push_back(decode(code, n));
    level = std::move(next);
  }
  return cache[max_n] = std::move(out);
}

Graph random_small_graph(std::mt19937_64& rng, int max_n) {
  const int n = 1 + static_cast<int>(uniform_below(rng, max_n));
  const double p = 0.2 * static_cast<double>(1 + uniform_below(rng, 4));
  return random_graph(n, p, rng);
}

int crossing(const Graph& g, std::uint64_t side) {
  int c = 0;
  for (const Edge& e : g.edges()) c += ((side >> e.u) & 1u) != ((side >> e.v) & 1u);
  return c;
}

int brute_edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || n > 20) throw std::invalid_argument("brute_edge_connectivity needs 2..20 vertices");
  int best = g.edge_count();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s < full; s += 2) best = std::min(best, crossing(g, s));
  return best;
}

int brute_local_connectivity(const Graph& g, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  int best = g.edge_count();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (((s >> u) & 1u) && !((s >> v) & 1u)) best = std::min(best, crossing(g, s));
  return best;
}

bool degree_criterion(const Graph& g, const VertexSet& s) {
  const int size = s.size();
  for (Vertex v : s) {
    int inside = 0;
    for (Vertex w : s)
      if (g.has_edge(v, w)) ++inside;
    if (2 * inside <= size) return false;
  }
  return true;
}

int induced_diameter(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (Vertex u : s) {
    d[u][u] = 0;
    for (Vertex v : s)
      if (g.has_edge(u, v)) d[u][v] = 1;
  }
  for (Vertex w : s)
    for (Vertex u : s)
      for (Vertex v : s) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  int diam = 0;
  for (Vertex u : s)
    for (Vertex v : s) {
      if (d[u][v] >= inf) return -1;
      diam = std::max(diam, d[u][v]);
    }
  return diam;
}

std::vector<std::int32_t> naive_min_plus(const std::vector<std::int32_t>& f, const std::vector<std::int32_t>& g,
                                         std::int32_t bound) {
  const std::int32_t inf = 2 * bound + 1;
  std::vector<std::int32_t> out(f.size(), inf);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a & b) continue;
      if (f[a] > bound || g[b] > bound) continue;
      const std::int32_t sum = f[a] + g[b];
      if (sum <= bound) out[a | b] = std::min(out[a | b], sum);
    }
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace hcc::test
