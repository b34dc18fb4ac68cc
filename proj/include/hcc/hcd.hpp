#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hcc/graph.hpp"
#include "hcc/options.hpp"

namespace hcc {

/// Largest graph the subset-table solvers accept.
inline constexpr int kMaxSubsetDpVertices = 63;

struct HcdInstance {
  Graph graph;
  int k = 0;
};

struct HcdSolution {
  std::vector<Edge> deleted_edges;
  Partition partition;
};

/// Minimum deletion set making every component highly connected, via
/// min-plus powers of the cluster function. nullopt if no partition into
/// highly connected blocks exists. Throws std::invalid_argument above
/// kMaxSubsetDpVertices and std::length_error above kMaxTableUniverse.
std::optional<HcdSolution> exact_hcd(const Graph& g, const SolveOptions& opts = {});

enum class RuleOutcome { not_applicable, applied, no_instance };

/// Result of one reduction step.
struct RuleStep {
  RuleOutcome outcome = RuleOutcome::not_applicable;
  /// The reduced instance (the input itself when not applicable).
  HcdInstance instance;
  /// origin[v] is the input vertex that reduced vertex v stands for.
  std::vector<Vertex> origin;
  /// Clusters removed by the step, in input vertex ids.
  Partition settled;
};

/// Removes every connected component that is already highly connected.
RuleStep apply_rule1(const HcdInstance& inst, HcConvention conv = {});
/// Deletes every edge whose endpoints share no neighbor, one budget unit
/// each. Under the k2_is_hc convention such an edge may be a whole
/// cluster, so the rule never applies there.
RuleStep apply_rule2(const HcdInstance& inst, HcConvention conv = {});
/// Takes the first class of pairwise k-connected vertices larger than 2k:
/// a NO if it is not highly connected, otherwise it is cut off and paid for.
RuleStep apply_rule3(const HcdInstance& inst, HcConvention conv = {});
/// Rules 1, 2, 3 in that order until none applies.
RuleStep reduce_hcd(const HcdInstance& inst, HcConvention conv = {});

/// The three children obtained by deleting one edge of a shortest path of
/// length three. Throws std::invalid_argument("not applicable") when no
/// pair of vertices is at distance three.
std::array<HcdInstance, 3> branch_diameter(const HcdInstance& inst);

/// Searches solutions in which some vertex u keeps all its edges: guesses u
/// and the part of its cluster outside N[u], then solves the rest exactly.
/// Returns a partition of V with at most k inter-block edges, or nullopt.
std::optional<Partition> solve_unaffected(const Graph& g, int k, const SolveOptions& opts = {});

/// How the two-anchor convolution prices edges between the remaining
/// clusters and U = U_s ∪ U_t.
enum class AffectedAccounting {
  /// Those edges are counted twice, like every other deleted edge.
  charge_rest_to_anchors,
  /// The literal formulas, which never count them. Can accept instances
  /// that need more than k deletions; kept for comparison.
  as_written,
};

/// Searches solutions in which every vertex is affected, guessing a vertex
/// s with a single deleted edge st and, for small C(s), a second cluster
/// anchor t'. A YES is answered with the optimal partition of g from
/// exact_hcd.
std::optional<Partition> solve_affected(const Graph& g, int k, const SolveOptions& opts = {},
                                        AffectedAccounting accounting = AffectedAccounting::charge_rest_to_anchors);

/// Decides whether at most k deletions suffice; on YES returns a solution
/// that passes verify_hcd_solution.
std::optional<HcdSolution> hcd_fpt(const HcdInstance& inst, const SolveOptions& opts = {});

bool verify_hcd_solution(const Graph& g, const HcdSolution& sol, int k, HcConvention conv = {});

/// The minimal solution induced by a partition (deleted edges = inter-block
/// edges).
HcdSolution solution_from_partition(const Graph& g, Partition p);

}  // namespace hcc
