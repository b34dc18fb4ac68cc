#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcc/graph.hpp"

namespace hcc {

struct ReportParams {
  std::optional<int> k, p, s, a;
  std::optional<std::vector<Vertex>> seed_set;

  friend bool operator==(const ReportParams&, const ReportParams&) = default;
};

/// "yes"/"no" for decisions; a number for optimisation runs that succeed.
struct ReportAnswer {
  bool yes = false;
  std::optional<int> value;

  friend bool operator==(const ReportAnswer&, const ReportAnswer&) = default;
};

struct Certificate {
  std::optional<Partition> partition;
  std::optional<std::vector<Edge>> deleted_edges;
  std::optional<VertexSet> cluster;
  std::optional<std::vector<VertexSet>> cuts;

  bool empty() const { return !partition && !deleted_edges && !cluster && !cuts; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ReportStats {
  double elapsed_ms = 0;
  std::uint64_t branch_nodes = 0;
  std::uint64_t cuts_enumerated = 0;
  std::uint64_t convolutions = 0;

  friend bool operator==(const ReportStats&, const ReportStats&) = default;
};

/// Outcome of one CLI run. The JSON field names are stable.
struct RunReport {
  std::string problem;
  std::string instance;
  ReportParams params;
  ReportAnswer answer;
  Certificate certificate;
  ReportStats stats;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::json& j, const RunReport& r);
/// Throws nlohmann::json::exception on a malformed document.
void from_json(const nlohmann::json& j, RunReport& r);

/// Multi-line human readable form.
void print_report(std::ostream& os, const RunReport& r);

}  // namespace hcc
