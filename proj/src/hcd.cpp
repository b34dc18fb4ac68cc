#include "hcc/hcd.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

#include "hcc/connectivity.hpp"
#include "hcc/set_function.hpp"
#include "local_masks.hpp"

namespace hcc {

namespace {

using Mask = SetFunction::Mask;

std::vector<Vertex> identity_origin(int n) {
  std::vector<Vertex> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

VertexSet lift(const VertexSet& s, const std::vector<Vertex>& origin) {
  VertexSet out;
  for (Vertex v : s) out.insert(origin[v]);
  return out;
}

Partition lift(const Partition& p, const std::vector<Vertex>& origin) {
  Partition out;
  out.reserve(p.size());
  for (const VertexSet& b : p) out.push_back(lift(b, origin));
  return out;
}

RuleStep unchanged(const HcdInstance& inst) {
  return RuleStep{RuleOutcome::not_applicable, inst, identity_origin(inst.graph.vertex_count()), {}};
}

RuleStep no_instance(const HcdInstance& inst) {
  RuleStep step = unchanged(inst);
  step.outcome = RuleOutcome::no_instance;
  return step;
}

// Optimal partition of one connected graph by the subset DP.
std::optional<std::pair<int, Partition>> exact_connected(const Graph& g, const SolveOptions& opts) {
  SetFunction f = build_cluster_function(g, g.vertices(), opts.convention);
  std::vector<SetFunction> powers = convolution_powers(f, opts.backend, opts.stats);
  SetFunction::Value best = f.infinity();
  for (const SetFunction& p : powers) best = std::min(best, p[f.full_mask()]);
  if (best == f.infinity()) return std::nullopt;
  return std::pair{best / 2, recover_partition(powers)};
}

// Minimum inter-block edge count of g, or nullopt when infeasible.
std::optional<std::pair<int, Partition>> exact_value(const Graph& g, const SolveOptions& opts) {
  int total = 0;
  Partition blocks;
  for (const VertexSet& comp : connected_components(g)) {
    auto part = exact_connected(g.induced(comp), opts);
    if (!part) return std::nullopt;
    total += part->first;
    auto origin = comp.to_vector();
    for (const VertexSet& b : part->second) blocks.push_back(lift(b, origin));
  }
  return std::pair{total, canonical_partition(std::move(blocks))};
}

// Visits every subset of `pool` with exactly `size` members, stopping when
// the visitor returns true.
template <class Visit>
bool for_each_subset_of_size(const std::vector<Vertex>& pool, int size, Visit&& visit) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  const int n = static_cast<int>(pool.size());
  if (size > n) return false;
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

struct CancelToken {
  std::atomic<bool> flag{false};
  const CancelToken* parent = nullptr;

  bool requested() const {
    for (const CancelToken* t = this; t; t = t->parent)
      if (t->flag.load(std::memory_order_relaxed)) return true;
    return false;
  }
};

struct FptContext {
  SolveOptions opts;  // opts.stats points at this context's counters
  SolverStats stats;
  const CancelToken* cancel = nullptr;
  std::atomic<int>* spare_threads = nullptr;
};

std::optional<Partition> decide(const Graph& g, int k, FptContext& ctx);

std::optional<Partition> decide_connected(const Graph& g, int k, FptContext& ctx) {
  if (k == 0) return std::nullopt;

  if (auto path = find_distance3_path(g)) {
    const auto& p = *path;
    const std::array<Edge, 3> cuts{Edge{p[0], p[1]}, Edge{p[1], p[2]}, Edge{p[2], p[3]}};
    std::array<std::optional<Partition>, 3> results;

    CancelToken local;
    local.parent = ctx.cancel;
    std::array<std::future<std::pair<std::optional<Partition>, SolverStats>>, 3> futures;
    auto run_child = [&](int i) {
      FptContext child;
      child.opts = ctx.opts;
      child.opts.stats = &child.stats;
      child.cancel = &local;
      child.spare_threads = ctx.spare_threads;
      auto r = decide(g.without_edge(cuts[i].u, cuts[i].v), k - 1, child);
      if (r) local.flag.store(true, std::memory_order_relaxed);
      return std::pair{std::move(r), child.stats};
    };
    for (int i = 1; i < 3; ++i) {
      if (!ctx.spare_threads) break;
      int spare = ctx.spare_threads->load();
      while (spare > 0 && !ctx.spare_threads->compare_exchange_weak(spare, spare - 1)) {
      }
      if (spare <= 0) break;
      futures[i] = std::async(std::launch::async, [&, i] {
        auto r = run_child(i);
        ctx.spare_threads->fetch_add(1);
        return r;
      });
    }
    for (int i = 0; i < 3; ++i) {
      if (futures[i].valid()) continue;
      if (local.requested()) break;
      auto [r, st] = run_child(i);
      ctx.stats.merge(st);
      results[i] = std::move(r);
    }
    for (int i = 0; i < 3; ++i) {
      if (!futures[i].valid()) continue;
      auto [r, st] = futures[i].get();
      ctx.stats.merge(st);
      results[i] = std::move(r);
    }
    for (auto& r : results)
      if (r) return r;
    return std::nullopt;
  }

  const int n = g.vertex_count();
  if (n > 4 * k) return std::nullopt;
  if (auto p = solve_unaffected(g, k, ctx.opts)) return p;
  return solve_affected(g, k, ctx.opts);
}

std::optional<Partition> decide(const Graph& g, int k, FptContext& ctx) {
  if (ctx.cancel && ctx.cancel->requested()) return std::nullopt;
  ++ctx.stats.branch_nodes;
  if (k < 0) return std::nullopt;

  RuleStep reduced = reduce_hcd(HcdInstance{g, k}, ctx.opts.convention);
  if (reduced.outcome == RuleOutcome::no_instance) return std::nullopt;
  Partition blocks = reduced.settled;
  const Graph& cur = reduced.instance.graph;
  const int budget = reduced.instance.k;
  const auto& origin = reduced.origin;
  if (cur.vertex_count() == 0) return canonical_partition(std::move(blocks));

  auto comps = connected_components(cur);
  if (comps.size() == 1) {
    auto p = decide_connected(cur, budget, ctx);
    if (!p) return std::nullopt;
    for (const VertexSet& b : lift(*p, origin)) blocks.push_back(b);
    return canonical_partition(std::move(blocks));
  }

  int remaining = budget;
  for (const VertexSet& comp : comps) {
    Graph sub = cur.induced(comp);
    auto sub_origin = comp.to_vector();
    std::optional<Partition> found;
    for (int b = 0; b <= remaining && !found; ++b) {
      found = decide(sub, b, ctx);
      if (found) remaining -= b;
    }
    if (!found) return std::nullopt;
    for (const VertexSet& blk : *found) blocks.push_back(lift(lift(blk, sub_origin), origin));
  }
  return canonical_partition(std::move(blocks));
}

}  // namespace

HcdSolution solution_from_partition(const Graph& g, Partition p) {
  HcdSolution sol;
  sol.partition = canonical_partition(std::move(p));
  sol.deleted_edges = inter_block_edges(g, sol.partition);
  return sol;
}

std::optional<HcdSolution> exact_hcd(const Graph& g, const SolveOptions& opts) {
  if (g.vertex_count() > kMaxSubsetDpVertices) throw std::invalid_argument("vertex cap exceeded for subset DP");
  auto result = exact_value(g, opts);
  if (!result) return std::nullopt;
  return solution_from_partition(g, std::move(result->second));
}

RuleStep apply_rule1(const HcdInstance& inst, HcConvention conv) {
  const Graph& g = inst.graph;
  Partition settled;
  VertexSet keep = g.vertices();
  for (const VertexSet& comp : connected_components(g))
    if (is_highly_connected(g, comp, conv)) {
      settled.push_back(comp);
      keep -= comp;
    }
  if (settled.empty()) return unchanged(inst);
  return RuleStep{RuleOutcome::applied, HcdInstance{g.induced(keep), inst.k}, keep.to_vector(), settled};
}

RuleStep apply_rule2(const HcdInstance& inst, HcConvention conv) {
  if (conv.k2_is_hc) return unchanged(inst);
  const Graph& g = inst.graph;
  std::vector<Edge> removed;
  for (const Edge& e : g.edges())
    if (!g.neighbors(e.u).intersects(g.neighbors(e.v))) removed.push_back(e);
  if (removed.empty()) return unchanged(inst);
  const int k = inst.k - static_cast<int>(removed.size());
  if (k < 0) return no_instance(inst);
  return RuleStep{RuleOutcome::applied, HcdInstance{g.without_edges(removed), k},
                  identity_origin(g.vertex_count()), {}};
}

RuleStep apply_rule3(const HcdInstance& inst, HcConvention conv) {
  const Graph& g = inst.graph;
  if (inst.k < 0) return no_instance(inst);
  for (const VertexSet& cls : k_connected_classes(g, inst.k)) {
    if (cls.size() <= 2 * inst.k) continue;
    if (!is_highly_connected(g, cls, conv)) return no_instance(inst);
    const int k = inst.k - cut_size(g, cls);
    if (k < 0) return no_instance(inst);
    VertexSet keep = g.vertices() - cls;
    return RuleStep{RuleOutcome::applied, HcdInstance{g.induced(keep), k}, keep.to_vector(), {cls}};
  }
  return unchanged(inst);
}

RuleStep reduce_hcd(const HcdInstance& inst, HcConvention conv) {
  RuleStep total = unchanged(inst);
  while (true) {
    RuleStep step;
    bool progressed = false;
    for (auto rule : {apply_rule1, apply_rule2, apply_rule3}) {
      step = rule(total.instance, conv);
      if (step.outcome != RuleOutcome::not_applicable) {
        progressed = true;
        break;
      }
    }
    if (!progressed) return total;
    if (step.outcome == RuleOutcome::no_instance) {
      total.outcome = RuleOutcome::no_instance;
      return total;
    }
    for (const VertexSet& b : step.settled) total.settled.push_back(lift(b, total.origin));
    std::vector<Vertex> origin(step.origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = total.origin[step.origin[i]];
    total.origin = std::move(origin);
    total.instance = std::move(step.instance);
    total.outcome = RuleOutcome::applied;
  }
}

std::array<HcdInstance, 3> branch_diameter(const HcdInstance& inst) {
  auto path = find_distance3_path(inst.graph);
  if (!path) throw std::invalid_argument("not applicable");
  const auto& p = *path;
  return {HcdInstance{inst.graph.without_edge(p[0], p[1]), inst.k - 1},
          HcdInstance{inst.graph.without_edge(p[1], p[2]), inst.k - 1},
          HcdInstance{inst.graph.without_edge(p[2], p[3]), inst.k - 1}};
}

std::optional<Partition> solve_unaffected(const Graph& g, int k, const SolveOptions& opts) {
  const VertexSet all = g.vertices();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const VertexSet& nu = g.neighbors(u);
    VertexSet closed = nu;
    closed.insert(u);
    std::vector<Vertex> w12, wge3;
    for (Vertex v : all - closed) {
      const int common = g.neighbors(v).count_common(nu);
      if (common >= 3)
        wge3.push_back(v);
      else if (common >= 1)
        w12.push_back(v);
    }
    const int n12 = static_cast<int>(w12.size());
    const int n3 = static_cast<int>(wge3.size());
    for (int s = 0; s < nu.size() && s <= k; ++s) {
      if (3 * (n3 - s) + n12 > k) continue;
      std::optional<Partition> found;
      for_each_subset_of_size(wge3, s, [&](const VertexSet& part) {
        if (opts.stats) ++opts.stats->branch_nodes;
        const VertexSet q = closed | part;
        if (!is_highly_connected(g, q, opts.convention)) return false;
        const int budget = k - cut_size(g, q);
        if (budget < 0) return false;
        const VertexSet rest = all - q;
        auto sub = exact_value(g.induced(rest), opts);
        if (!sub || sub->first > budget) return false;
        Partition p = lift(sub->second, rest.to_vector());
        p.push_back(q);
        found = canonical_partition(std::move(p));
        return true;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

namespace {

// Local-mask tables over W = V∖U for the convolution checks.
struct AffectedTables {
  std::vector<Vertex> w;
  detail::LocalMasks local;
  SetFunction::Value bound;

  AffectedTables(const Graph& g, const VertexSet& u_set)
      : w((g.vertices() - u_set).to_vector()), local(g, w), bound(2 * g.edge_count() + 1) {}

  int inner_cut(Mask s) const { return local.between(s, local.full & ~s); }
};

// |E(S, X)| for every S ⊆ W, with X outside W.
std::vector<int> edges_to(const Graph& g, const std::vector<Vertex>& w, const VertexSet& x) {
  std::vector<int> per_vertex(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) per_vertex[i] = g.neighbors(w[i]).count_common(x);
  std::vector<int> out(std::size_t{1} << w.size(), 0);
  for (Mask s = 1; s < out.size(); ++s) out[s] = out[s & (s - 1)] + per_vertex[std::countr_zero(s)];
  return out;
}

// Highly-connectedness of G[S ∪ anchor] for every S ⊆ W.
std::vector<bool> hc_with_anchor(const Graph& g, const std::vector<Vertex>& w, const VertexSet& anchor,
                                 HcConvention conv) {
  const int a = anchor.size();
  std::vector<int> anchor_deg;
  std::vector<Vertex> anchor_list = anchor.to_vector();
  for (Vertex v : anchor_list) anchor_deg.push_back(g.neighbors(v).count_common(anchor));
  std::vector<Mask> anchor_adj(anchor_list.size(), 0);  // neighbors in W as masks
  for (std::size_t j = 0; j < anchor_list.size(); ++j)
    for (std::size_t i = 0; i < w.size(); ++i)
      if (g.has_edge(anchor_list[j], w[i])) anchor_adj[j] |= Mask{1} << i;
  detail::LocalMasks local(g, w);
  std::vector<int> to_anchor(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) to_anchor[i] = g.neighbors(w[i]).count_common(anchor);

  std::vector<bool> out(std::size_t{1} << w.size(), false);
  for (Mask s = 0; s < out.size(); ++s) {
    const int size = a + std::popcount(s);
    if (size == 0) continue;
    if (size <= 2) {
      VertexSet x = anchor;
      for (Mask r = s; r; r &= r - 1) x.insert(w[std::countr_zero(r)]);
      out[s] = is_highly_connected(g, x, conv);
      continue;
    }
    bool ok = true;
    for (std::size_t j = 0; j < anchor_list.size() && ok; ++j)
      if (2 * (anchor_deg[j] + std::popcount(anchor_adj[j] & s)) <= size) ok = false;
    for (Mask r = s; r && ok; r &= r - 1) {
      int i = std::countr_zero(r);
      if (2 * (to_anchor[i] + std::popcount(local.adjacency[i] & s)) <= size) ok = false;
    }
    out[s] = ok;
  }
  return out;
}

bool affected_big_case(const Graph& g, int k, const VertexSet& us, const SolveOptions& opts) {
  AffectedTables t(g, us);
  SetFunction f = build_cluster_function(g, g.vertices() - us, opts.convention);
  SetFunction h = min_plus_closure(f, opts.backend, opts.stats);
  const auto to_u = edges_to(g, t.w, us);
  const auto hc = hc_with_anchor(g, t.w, us, opts.convention);
  const Mask full = t.local.full;
  SetFunction gf = SetFunction::tabulate(t.w, t.bound, [&](Mask s) -> std::optional<SetFunction::Value> {
    if (!hc[s]) return std::nullopt;
    return 2 * to_u[full & ~s] + t.inner_cut(s);
  });
  SetFunction conv = min_plus_convolve(gf, h, opts.backend, opts.stats);
  return conv[full] <= 2 * k;
}

bool affected_pair_case(const Graph& g, int k, const VertexSet& us, const VertexSet& ut, const SolveOptions& opts,
                        AffectedAccounting accounting) {
  const int between = g.edges_between(us, ut);
  if (between > k) return false;
  const VertexSet u = us | ut;
  AffectedTables t(g, u);
  SetFunction f = build_cluster_function(g, g.vertices() - u, opts.convention);
  const auto to_us = edges_to(g, t.w, us);
  const auto to_ut = edges_to(g, t.w, ut);
  if (accounting == AffectedAccounting::charge_rest_to_anchors) {
    // a cluster outside C(s) ∪ C(t) loses all its edges into U
    for (Mask s = 1; s <= t.local.full; ++s)
      if (f.finite(s)) {
        const SetFunction::Value v = f[s] + 2 * (to_us[s] + to_ut[s]);
        f.set(s, v > f.bound() ? f.infinity() : v);
      }
  }
  SetFunction h = min_plus_closure(f, opts.backend, opts.stats);
  const auto hc_s = hc_with_anchor(g, t.w, us, opts.convention);
  const auto hc_t = hc_with_anchor(g, t.w, ut, opts.convention);
  SetFunction gs = SetFunction::tabulate(t.w, t.bound, [&](Mask s) -> std::optional<SetFunction::Value> {
    if (!hc_s[s]) return std::nullopt;
    return 2 * to_ut[s] + t.inner_cut(s);
  });
  SetFunction gt = SetFunction::tabulate(t.w, t.bound, [&](Mask s) -> std::optional<SetFunction::Value> {
    if (!hc_t[s]) return std::nullopt;
    return 2 * to_us[s] + t.inner_cut(s);
  });
  SetFunction conv = min_plus_convolve(min_plus_convolve(h, gs, opts.backend, opts.stats), gt, opts.backend,
                                       opts.stats);
  return conv[t.local.full] <= 2 * (k - between);
}

bool affected_decision(const Graph& g, int k, const SolveOptions& opts, AffectedAccounting accounting) {
  const int n = g.vertex_count();
  if (100 * n <= 157 * k) {
    auto v = exact_value(g, opts);
    return v && v->first <= k;
  }
  if (n > 2 * k) return false;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t : g.neighbors(s)) {
      if (opts.stats) ++opts.stats->branch_nodes;
      VertexSet us = g.neighbors(s);
      us.insert(s);
      us.erase(t);
      if (100 * us.size() > 100 * n - 157 * k) {
        if (affected_big_case(g, k, us, opts)) return true;
        continue;
      }
      for (Vertex tp = 0; tp < n; ++tp) {
        if (us.contains(tp)) continue;
        const std::vector<Vertex> nt = g.neighbors(tp).to_vector();
        const int limit = std::min<int>(7, static_cast<int>(nt.size()));
        for (int l = 0; l <= limit; ++l) {
          bool yes = for_each_subset_of_size(nt, l, [&](const VertexSet& y) {
            VertexSet ut = g.neighbors(tp);
            ut.insert(tp);
            ut -= y;
            if (us.intersects(ut)) return false;
            if (2 * (us | ut).size() < n - k) return false;
            return affected_pair_case(g, k, us, ut, opts, accounting);
          });
          if (yes) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::optional<Partition> solve_affected(const Graph& g, int k, const SolveOptions& opts,
                                        AffectedAccounting accounting) {
  if (!affected_decision(g, k, opts, accounting)) return std::nullopt;
  auto best = exact_value(g, opts);
  if (!best) return std::nullopt;
  return best->second;
}

std::optional<HcdSolution> hcd_fpt(const HcdInstance& inst, const SolveOptions& opts) {
  if (inst.k < 0) return std::nullopt;
  FptContext ctx;
  ctx.opts = opts;
  ctx.opts.stats = &ctx.stats;
  std::atomic<int> spare{std::max(0, opts.threads - 1)};
  ctx.spare_threads = &spare;
  auto p = decide(inst.graph, inst.k, ctx);
  if (opts.stats) opts.stats->merge(ctx.stats);
  if (!p) return std::nullopt;
  return solution_from_partition(inst.graph, std::move(*p));
}

bool verify_hcd_solution(const Graph& g, const HcdSolution& sol, int k, HcConvention conv) {
  if (!is_partition_of(sol.partition, g.vertices())) return false;
  for (const VertexSet& b : sol.partition)
    if (!is_highly_connected(g, b, conv)) return false;
  auto expected = inter_block_edges(g, sol.partition);
  auto given = sol.deleted_edges;
  std::sort(given.begin(), given.end());
  return given == expected && static_cast<int>(given.size()) <= k;
}

}  // namespace hcc
