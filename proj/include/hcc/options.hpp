#pragma once

#include <cstdint>
#include <optional>

#include "hcc/connectivity.hpp"

namespace hcc {

/// Best-effort work counters filled in by the solvers.
struct SolverStats {
  std::uint64_t branch_nodes = 0;
  std::uint64_t cuts_enumerated = 0;
  std::uint64_t convolutions = 0;

  void merge(const SolverStats& other) {
    branch_nodes += other.branch_nodes;
    cuts_enumerated += other.cuts_enumerated;
    convolutions += other.convolutions;
  }
};

enum class ConvolutionBackend { automatic, naive, fast };

struct SolveOptions {
  HcConvention convention{};
  ConvolutionBackend backend = ConvolutionBackend::automatic;
  /// Worker threads for independent branches; 1 runs everything inline.
  int threads = 1;
  /// p-HCD only: abort cut enumeration (answer NO) after this many cuts.
  std::optional<std::uint64_t> cut_cap{};
  SolverStats* stats = nullptr;
};

}  // namespace hcc
