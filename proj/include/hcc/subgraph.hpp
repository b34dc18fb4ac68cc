#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hcc/graph.hpp"
#include "hcc/options.hpp"

namespace hcc {

struct SeededInstance {
  Graph graph;
  VertexSet seed;
  int a = 0;
  int k = 0;
};

/// A cluster C ⊇ seed with |C| = |seed| + a, G[C] highly connected and at
/// most k edges outside G[C], or nullopt. Small a enumerates the a new
/// vertices directly; large a first strips low-degree vertices and then
/// enumerates the few excluded ones. Throws std::invalid_argument if the
/// seed is empty or not inside the graph.
std::optional<VertexSet> solve_seeded(const SeededInstance& inst, const SolveOptions& opts = {});

/// True iff `c` answers the seeded instance.
bool seeded_feasible(const SeededInstance& inst, const VertexSet& c, HcConvention conv = {});

struct IsolatedInstance {
  Graph graph;
  /// Per-vertex penalty; empty means all zero.
  std::vector<int> charges;
  int k = 0;
  int s = 0;
};

/// |E(c, V∖c)| + Σ charges over c.
int isolated_cost(const IsolatedInstance& inst, const VertexSet& c);
/// True iff |c| = s, G[c] highly connected and the cost is at most k.
bool isolated_feasible(const IsolatedInstance& inst, const VertexSet& c, HcConvention conv = {});

enum class IsolatedOutcome { not_applicable, applied, yes_instance };

struct IsolatedStep {
  IsolatedOutcome outcome = IsolatedOutcome::not_applicable;
  IsolatedInstance instance;
  /// origin[v] is the input vertex that reduced vertex v stands for.
  std::vector<Vertex> origin;
  /// The answer set in input ids for yes_instance.
  VertexSet witness;
};

/// Deletes every component with fewer than s vertices.
IsolatedStep apply_rule4(const IsolatedInstance& inst, HcConvention conv = {});
/// Takes the first component whose minimum cut exceeds k (a single vertex
/// counts as infinite): YES if it is itself an answer, otherwise deleted.
IsolatedStep apply_rule5(const IsolatedInstance& inst, HcConvention conv = {});
/// Takes the first component with a minimum cut (A, B) of at most s/2
/// edges, deletes those edges and charges each endpoint its crossing
/// degree.
IsolatedStep apply_rule6(const IsolatedInstance& inst, HcConvention conv = {});
/// Rules 4, 5, 6 in that order until none applies or a YES appears.
IsolatedStep reduce_isolated(const IsolatedInstance& inst, HcConvention conv = {});

/// Visits each connected vertex set B ∋ v with |B| = size and |N(B)| at
/// most max_boundary once, never using a vertex of `excluded`. Stops when
/// visit returns false.
void enumerate_connected_sets(const Graph& g, Vertex v, int size, int max_boundary,
                              const std::function<bool(const VertexSet&)>& visit, const VertexSet& excluded = {});

/// Scans connected sets of size s with at most k boundary vertices.
std::optional<VertexSet> solve_isolated_case1(const IsolatedInstance& inst, const SolveOptions& opts = {});
/// Guesses a vertex v of the answer with few outside neighbors X, starts
/// from W = N[v]∖X, and branches on each remaining vertex joining W or not.
std::optional<VertexSet> solve_isolated_case2(const IsolatedInstance& inst, const SolveOptions& opts = {});
/// Reduction rules, then case 1 when s³ ≤ k² and case 2 otherwise. The
/// answer is re-checked on the input instance.
std::optional<VertexSet> solve_isolated(const IsolatedInstance& inst, const SolveOptions& opts = {});

}  // namespace hcc
