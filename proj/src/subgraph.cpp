#include "hcc/subgraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hcc/connectivity.hpp"

namespace hcc {

namespace {

std::vector<Vertex> identity_origin(int n) {
  std::vector<Vertex> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

VertexSet lift(const VertexSet& s, const std::vector<Vertex>& origin) {
  VertexSet out;
  for (Vertex v : s) out.insert(origin[v]);
  return out;
}

std::vector<int> normalized_charges(const IsolatedInstance& inst) {
  const int n = inst.graph.vertex_count();
  if (inst.charges.empty()) return std::vector<int>(n, 0);
  if (static_cast<int>(inst.charges.size()) != n) throw std::invalid_argument("charges must list every vertex");
  for (int c : inst.charges)
    if (c < 0) throw std::invalid_argument("charges must be non-negative");
  return inst.charges;
}

IsolatedStep unchanged(const IsolatedInstance& inst) {
  return IsolatedStep{IsolatedOutcome::not_applicable, inst, identity_origin(inst.graph.vertex_count()), {}};
}

IsolatedStep remove_vertices(const IsolatedInstance& inst, const VertexSet& drop) {
  const VertexSet keep = inst.graph.vertices() - drop;
  IsolatedInstance out{inst.graph.induced(keep), {}, inst.k, inst.s};
  auto charges = normalized_charges(inst);
  for (Vertex v : keep) out.charges.push_back(charges[v]);
  return IsolatedStep{IsolatedOutcome::applied, std::move(out), keep.to_vector(), {}};
}

// Visits size-`size` subsets of pool; stops when visit returns true.
template <class Visit>
bool for_each_subset_of_size(const std::vector<Vertex>& pool, int size, Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (size < 0 || size > n) return false;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(pool[i]);
    if (visit(s)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexSet neighborhood(const Graph& g, const VertexSet& b) {
  VertexSet out;
  for (Vertex v : b) out |= g.neighbors(v);
  return out - b;
}

}  // namespace

bool seeded_feasible(const SeededInstance& inst, const VertexSet& c, HcConvention conv) {
  const Graph& g = inst.graph;
  if (c.empty() || !c.is_subset_of(g.vertices()) || !inst.seed.is_subset_of(c)) return false;
  if (c.size() != inst.seed.size() + inst.a) return false;
  if (!is_highly_connected(g, c, conv)) return false;
  return g.edge_count() - g.edges_within(c) <= inst.k;
}

std::optional<VertexSet> solve_seeded(const SeededInstance& inst, const SolveOptions& opts) {
  const Graph& g = inst.graph;
  if (inst.seed.empty() || !inst.seed.is_subset_of(g.vertices()))
    throw std::invalid_argument("seed must be a nonempty subset of the vertices");
  if (inst.a < 0) throw std::invalid_argument("a must be non-negative");
  if (inst.k < 0 || inst.seed.size() + inst.a > g.vertex_count()) return std::nullopt;

  const int k = inst.k;
  std::optional<VertexSet> found;
  auto check = [&](const VertexSet& c) {
    if (opts.stats) ++opts.stats->branch_nodes;
    if (!seeded_feasible(inst, c, opts.convention)) return false;
    found = c;
    return true;
  };

  if (inst.a * inst.a <= 4 * k) {
    for_each_subset_of_size((g.vertices() - inst.seed).to_vector(), inst.a,
                            [&](const VertexSet& extra) { return check(inst.seed | extra); });
    return found;
  }

  // Every cluster vertex has degree above a/2 > √k, so vertices of degree
  // below √k lie outside and all their edges are paid for. Isolated
  // vertices go too; otherwise k = 0 would leave them counted as excluded.
  VertexSet alive = g.vertices();
  int budget = k;
  for (bool again = true; again;) {
    again = false;
    for (Vertex v : alive) {
      const int d = g.neighbors(v).count_common(alive);
      if (d * d >= k && d > 0) continue;
      if (inst.seed.contains(v)) return std::nullopt;
      budget -= d;
      if (budget < 0) return std::nullopt;
      alive.erase(v);
      again = true;
    }
  }
  const int target = inst.seed.size() + inst.a;
  const int outside = alive.size() - target;
  if (outside < 0 || outside * outside > 4 * k) return std::nullopt;
  for_each_subset_of_size((alive - inst.seed).to_vector(), outside,
                          [&](const VertexSet& f) { return check(alive - f); });
  return found;
}

int isolated_cost(const IsolatedInstance& inst, const VertexSet& c) {
  auto charges = normalized_charges(inst);
  int total = cut_size(inst.graph, c);
  for (Vertex v : c) total += charges[v];
  return total;
}

bool isolated_feasible(const IsolatedInstance& inst, const VertexSet& c, HcConvention conv) {
  if (c.empty() || c.size() != inst.s || !c.is_subset_of(inst.graph.vertices())) return false;
  return is_highly_connected(inst.graph, c, conv) && isolated_cost(inst, c) <= inst.k;
}

IsolatedStep apply_rule4(const IsolatedInstance& inst, HcConvention) {
  VertexSet drop;
  for (const VertexSet& comp : connected_components(inst.graph))
    if (comp.size() < inst.s) drop |= comp;
  if (drop.empty()) return unchanged(inst);
  return remove_vertices(inst, drop);
}

IsolatedStep apply_rule5(const IsolatedInstance& inst, HcConvention conv) {
  const Graph& g = inst.graph;
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() > 1 && global_min_cut(g.induced(comp)).crossing <= inst.k) continue;
    int charge = 0;
    auto charges = normalized_charges(inst);
    for (Vertex v : comp) charge += charges[v];
    if (comp.size() == inst.s && charge <= inst.k && is_highly_connected(g, comp, conv)) {
      IsolatedStep step = unchanged(inst);
      step.outcome = IsolatedOutcome::yes_instance;
      step.witness = comp;
      return step;
    }
    return remove_vertices(inst, comp);
  }
  return unchanged(inst);
}

IsolatedStep apply_rule6(const IsolatedInstance& inst, HcConvention) {
  const Graph& g = inst.graph;
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    const Cut cut = global_min_cut(g.induced(comp));
    if (2 * cut.crossing > inst.s) continue;
    const auto origin = comp.to_vector();
    const VertexSet a = lift(cut.side1, origin);
    const VertexSet b = lift(cut.side2, origin);
    std::vector<Edge> removed;
    IsolatedInstance out{g, normalized_charges(inst), inst.k, inst.s};
    for (Vertex v : a) {
      const VertexSet across = g.neighbors(v) & b;
      out.charges[v] += across.size();
      for (Vertex w : across) {
        out.charges[w] += 1;
        removed.push_back(Edge{std::min(v, w), std::max(v, w)});
      }
    }
    out.graph = g.without_edges(removed);
    return IsolatedStep{IsolatedOutcome::applied, std::move(out), identity_origin(g.vertex_count()), {}};
  }
  return unchanged(inst);
}

IsolatedStep reduce_isolated(const IsolatedInstance& inst, HcConvention conv) {
  IsolatedStep total = unchanged(inst);
  total.instance.charges = normalized_charges(inst);
  while (true) {
    IsolatedStep step;
    for (auto rule : {apply_rule4, apply_rule5, apply_rule6}) {
      step = rule(total.instance, conv);
      if (step.outcome != IsolatedOutcome::not_applicable) break;
    }
    if (step.outcome == IsolatedOutcome::not_applicable) return total;
    if (step.outcome == IsolatedOutcome::yes_instance) {
      total.outcome = IsolatedOutcome::yes_instance;
      total.witness = lift(step.witness, total.origin);
      return total;
    }
    std::vector<Vertex> origin(step.origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = total.origin[step.origin[i]];
    total.origin = std::move(origin);
    total.instance = std::move(step.instance);
    total.outcome = IsolatedOutcome::applied;
  }
}

namespace {

struct ConnectedSetSearch {
  const Graph& g;
  int size;
  int max_boundary;
  const std::function<bool(const VertexSet&)>& visit;

  // `out` holds vertices that may never join B; those adjacent to B stay
  // on its boundary for good.
  bool run(const VertexSet& b, const VertexSet& out) {
    const VertexSet boundary = neighborhood(g, b);
    if ((boundary & out).size() > max_boundary) return true;
    if (b.size() == size) return boundary.size() <= max_boundary ? visit(b) : true;
    const VertexSet frontier = boundary - out;
    if (frontier.empty()) return true;
    const Vertex u = frontier.front();
    VertexSet grown = b;
    grown.insert(u);
    if (!run(grown, out)) return false;
    VertexSet blocked = out;
    blocked.insert(u);
    return run(b, blocked);
  }
};

}  // namespace

void enumerate_connected_sets(const Graph& g, Vertex v, int size, int max_boundary,
                              const std::function<bool(const VertexSet&)>& visit, const VertexSet& excluded) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  if (size < 1 || excluded.contains(v)) return;
  ConnectedSetSearch search{g, size, max_boundary, visit};
  search.run(VertexSet{v}, excluded);
}

std::optional<VertexSet> solve_isolated_case1(const IsolatedInstance& inst, const SolveOptions& opts) {
  const Graph& g = inst.graph;
  std::optional<VertexSet> found;
  VertexSet earlier;
  for (Vertex v = 0; v < g.vertex_count() && !found; ++v) {
    enumerate_connected_sets(
        g, v, inst.s, inst.k,
        [&](const VertexSet& b) {
          if (opts.stats) ++opts.stats->branch_nodes;
          if (!isolated_feasible(inst, b, opts.convention)) return true;
          found = b;
          return false;
        },
        earlier);
    earlier.insert(v);
  }
  return found;
}

namespace {

struct Case2Search {
  const IsolatedInstance& inst;
  const std::vector<int>& charges;
  const SolveOptions& opts;
  std::optional<VertexSet> found;

  bool run(const VertexSet& w, const VertexSet& b, int budget) {
    if (opts.stats) ++opts.stats->branch_nodes;
    if (budget < 0) return false;
    const int s = inst.s;
    if (w.size() == s) {
      if (!isolated_feasible(inst, w, opts.convention)) return false;
      found = w;
      return true;
    }
    const Graph& g = inst.graph;
    VertexSet out = b;
    Vertex pick = -1;
    int pick_links = -1;
    for (Vertex x : g.vertices() - w - b) {
      const int links = g.neighbors(x).count_common(w);
      if (2 * links < 2 * w.size() - s) {
        out.insert(x);
        budget -= links;
      } else if (links > pick_links) {
        pick = x;
        pick_links = links;
      }
    }
    if (budget < 0 || pick < 0) return false;
    VertexSet grown = w;
    grown.insert(pick);
    if (run(grown, out, budget - g.neighbors(pick).count_common(out) - charges[pick])) return true;
    VertexSet blocked = out;
    blocked.insert(pick);
    return run(w, blocked, budget - pick_links);
  }
};

}  // namespace

std::optional<VertexSet> solve_isolated_case2(const IsolatedInstance& inst, const SolveOptions& opts) {
  const Graph& g = inst.graph;
  const auto charges = normalized_charges(inst);
  const int s = inst.s;
  Case2Search search{inst, charges, opts, std::nullopt};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::vector<Vertex> nv = g.neighbors(v).to_vector();
    for (int size = 0; size * size * size <= inst.k && size <= static_cast<int>(nv.size()); ++size) {
      bool done = for_each_subset_of_size(nv, size, [&](const VertexSet& x) {
        VertexSet w = g.neighbors(v) - x;
        w.insert(v);
        // v needs more than s/2 neighbors inside the answer
        if (2 * (w.size() - 1) <= s || w.size() > s) return false;
        int budget = inst.k - g.edges_between(w, x);
        for (Vertex u : w) budget -= charges[u];
        return search.run(w, x, budget);
      });
      if (done) return search.found;
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> solve_isolated(const IsolatedInstance& inst, const SolveOptions& opts) {
  normalized_charges(inst);
  if (inst.s < 1 || inst.k < 0 || inst.s > inst.graph.vertex_count()) return std::nullopt;
  IsolatedStep reduced = reduce_isolated(inst, opts.convention);
  std::optional<VertexSet> answer;
  if (reduced.outcome == IsolatedOutcome::yes_instance) {
    answer = reduced.witness;
  } else if (reduced.instance.graph.vertex_count() > 0) {
    const IsolatedInstance& r = reduced.instance;
    const long long s = r.s, k = r.k;
    auto local = s * s * s <= k * k ? solve_isolated_case1(r, opts) : solve_isolated_case2(r, opts);
    if (local) answer = lift(*local, reduced.origin);
  }
  if (answer && !isolated_feasible(inst, *answer, opts.convention))
    throw std::logic_error("reduced answer does not solve the input instance");
  return answer;
}

}  // namespace hcc
