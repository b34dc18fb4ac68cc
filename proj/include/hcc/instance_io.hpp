#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcc/graph.hpp"

namespace hcc {

/// Malformed input; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text format: a header line "n m", then m lines "u v" with 0-based
/// endpoints. Anything after '#' is a comment; blank lines are skipped.
Graph parse_graph(std::string_view text);
/// Header and edges in ascending order, LF line endings.
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

/// n whitespace-separated non-negative integers, '#' comments allowed.
std::vector<int> parse_charges(std::string_view text, int n);
std::vector<int> read_charges_file(const std::string& path, int n);

struct PlantedSpec {
  std::vector<int> cluster_sizes;
  int noise_edges = 0;
  std::uint64_t rng_seed = 0;
  /// Edge probability inside a cluster; 1 gives cliques. Sparser clusters
  /// are redrawn until highly connected.
  double density = 1.0;
};

struct PlantedInstance {
  Graph graph;
  /// Clusters occupy consecutive vertex ranges in the given order.
  Partition clusters;
};

/// Throws std::invalid_argument for empty or size-2 clusters, density
/// outside (0, 1], or more noise edges than inter-cluster pairs.
PlantedInstance generate_planted(const PlantedSpec& spec);

/// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// True with probability p, from the top 53 bits of one draw.
bool bernoulli(std::mt19937_64& rng, double p);
/// G(n, p) with the same deterministic sampling.
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// K2, K4, K5, P3, P4, C5, TwoK4Bridge, K4Pendant, Prism, K9Pendant.
const std::map<std::string, Graph>& fixtures();
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace hcc
