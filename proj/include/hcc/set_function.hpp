#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hcc/connectivity.hpp"
#include "hcc/graph.hpp"
#include "hcc/options.hpp"

namespace hcc {

/// Largest universe a SetFunction table may span (2^26 entries).
inline constexpr int kMaxTableUniverse = 26;
/// Memory ceiling for the ranked fast convolution backend.
inline constexpr std::size_t kFastBackendBudgetBytes = std::size_t{512} << 20;

/// A table of values over all subsets of a small vertex universe.
///
/// Bit i of a mask stands for universe()[i]. Finite values lie in
/// 0..bound(); infinity is the sentinel 2·bound()+1.
class SetFunction {
 public:
  using Value = std::int32_t;
  using Mask = std::uint64_t;

  /// Every entry starts infinite.
  SetFunction(std::vector<Vertex> universe, Value bound);

  /// e(∅) = 0, e(S) = ∞ otherwise; the unit of min-plus convolution.
  static SetFunction identity(std::vector<Vertex> universe, Value bound);
  /// fn(mask) returns the value, or nullopt for infinity.
  static SetFunction tabulate(std::vector<Vertex> universe, Value bound,
                              const std::function<std::optional<Value>(Mask)>& fn);

  int universe_size() const { return static_cast<int>(universe_.size()); }
  const std::vector<Vertex>& universe() const { return universe_; }
  VertexSet universe_set() const { return VertexSet::from_vector(universe_); }
  Value bound() const { return bound_; }
  Value infinity() const { return 2 * bound_ + 1; }
  std::size_t table_size() const { return values_.size(); }
  Mask full_mask() const { return values_.size() - 1; }

  Value operator[](Mask mask) const { return values_[mask]; }
  bool finite(Mask mask) const { return values_[mask] <= bound_; }
  /// Accepts 0..bound() or infinity(); anything else throws.
  void set(Mask mask, Value v);
  void set_infinite(Mask mask) { values_[mask] = infinity(); }

  /// Throws std::invalid_argument when s is not inside the universe.
  Mask mask_of(const VertexSet& s) const;
  VertexSet set_of(Mask mask) const;
  Value at(const VertexSet& s) const { return values_[mask_of(s)]; }
  const std::vector<Value>& values() const { return values_; }
  /// Largest finite entry, or -1 if none is finite.
  Value max_finite() const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.bound_ == b.bound_ && a.universe_ == b.universe_ && a.values_ == b.values_;
  }

 private:
  std::vector<Vertex> universe_;
  Value bound_;
  std::vector<Value> values_;
};

/// Bytes the ranked backend would allocate for this convolution.
std::size_t fast_backend_bytes(int universe_size, SetFunction::Value degree);

/// (f ∗ g)(S) = min over T ⊆ S of f(T) + g(S∖T). Sums above the bound
/// saturate to infinity. Throws std::invalid_argument on a universe or bound
/// mismatch, std::length_error if the fast backend is forced past its
/// memory budget.
SetFunction min_plus_convolve(const SetFunction& f, const SetFunction& g,
                              ConvolutionBackend backend = ConvolutionBackend::automatic,
                              SolverStats* stats = nullptr);

/// f(S) = |E(S, universe∖S)| if G[S] is highly connected, else ∞;
/// f(∅) = 0. The bound is 2m+1 for the m edges of g.
SetFunction build_cluster_function(const Graph& g, const VertexSet& universe,
                                   HcConvention conv = {});

/// h(S) = min over partitions of S into nonempty blocks of Σ f(block),
/// iterating h ← min(h, h ∗ f) until a fixpoint. Requires f(∅) = 0.
SetFunction min_plus_closure(const SetFunction& f,
                             ConvolutionBackend backend = ConvolutionBackend::automatic,
                             SolverStats* stats = nullptr);

/// [f, f∗f, f∗f∗f, ...] up to the |universe|-th power, stopping early once
/// two consecutive powers coincide (every later power is then equal).
std::vector<SetFunction> convolution_powers(const SetFunction& f,
                                            ConvolutionBackend backend = ConvolutionBackend::automatic,
                                            SolverStats* stats = nullptr);

/// Peels an optimal partition of the whole universe off the powers of f,
/// using the fewest blocks that reach the minimum. powers[0] must be f.
/// Throws std::runtime_error("no partition exists") if the minimum is ∞.
Partition recover_partition(std::span<const SetFunction> powers);

}  // namespace hcc
