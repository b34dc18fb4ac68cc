#include "hcc/instance_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "hcc/connectivity.hpp"

namespace hcc {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

// Parses exactly `count` integers from the line.
bool read_ints(std::string_view line, long long* out, int count) {
  std::istringstream in{std::string(line)};
  for (int i = 0; i < count; ++i)
    if (!(in >> out[i])) return false;
  std::string rest;
  return !(in >> rest);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void fail(const std::string& what, int line) {
  throw ParseError(what + " at line " + std::to_string(line));
}

}  // namespace

Graph parse_graph(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<VertexSet> adjacency;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    long long vals[2];
    if (n < 0) {
      if (!read_ints(line, vals, 2) || vals[0] < 0 || vals[1] < 0) fail("malformed header", line_no);
      if (vals[0] > kMaxVertices) fail("too many vertices", line_no);
      n = vals[0];
      m = vals[1];
      adjacency.assign(n, VertexSet{});
      continue;
    }
    if (!read_ints(line, vals, 2)) fail("malformed edge", line_no);
    if (static_cast<long long>(edges.size()) >= m) fail("more edges than declared", line_no);
    const long long u = vals[0], v = vals[1];
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range", line_no);
    if (u == v) fail("self-loop", line_no);
    if (adjacency[u].contains(v)) fail("duplicate edge", line_no);
    adjacency[u].insert(v);
    adjacency[v].insert(u);
    edges.push_back(Edge{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))});
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError("missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

std::vector<int> parse_charges(std::string_view text, int n) {
  std::vector<int> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v < 0 || v > 1'000'000) fail("malformed charge", line_no);
      out.push_back(static_cast<int>(v));
    }
  }
  if (static_cast<int>(out.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " charges, found " + std::to_string(out.size()));
  return out;
}

std::vector<int> read_charges_file(const std::string& path, int n) { return parse_charges(slurp(path), n); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) edges.push_back(Edge{u, v});
  return Graph(n, edges);
}

PlantedInstance generate_planted(const PlantedSpec& spec) {
  if (spec.cluster_sizes.empty()) throw std::invalid_argument("no clusters");
  if (!(spec.density > 0.0 && spec.density <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");
  if (spec.noise_edges < 0) throw std::invalid_argument("negative noise");
  int n = 0;
  for (int size : spec.cluster_sizes) {
    if (size < 1) throw std::invalid_argument("cluster sizes must be positive");
    if (size == 2) throw std::invalid_argument("a cluster of size 2 cannot be highly connected");
    n += size;
  }
  if (n > kMaxVertices) throw std::invalid_argument("too many vertices");

  std::mt19937_64 rng(spec.rng_seed);
  PlantedInstance out;
  std::vector<Edge> edges;
  std::vector<int> cluster_of(n);
  int first = 0;
  for (std::size_t c = 0; c < spec.cluster_sizes.size(); ++c) {
    const int size = spec.cluster_sizes[c];
    VertexSet members;
    for (int i = 0; i < size; ++i) {
      members.insert(first + i);
      cluster_of[first + i] = static_cast<int>(c);
    }
    std::vector<Edge> inner;
    for (int attempt = 0;; ++attempt) {
      if (attempt == 10000) throw std::runtime_error("could not draw a highly connected cluster");
      inner.clear();
      for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v)
          if (spec.density >= 1.0 || bernoulli(rng, spec.density)) inner.push_back(Edge{u, v});
      if (is_highly_connected(Graph(size, inner), VertexSet::range(size))) break;
    }
    for (const Edge& e : inner) edges.push_back(Edge{e.u + first, e.v + first});
    out.clusters.push_back(members);
    first += size;
  }

  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cluster_of[u] != cluster_of[v]) pairs.push_back(Edge{u, v});
  if (spec.noise_edges > static_cast<int>(pairs.size()))
    throw std::invalid_argument("noise edges exceed the " + std::to_string(pairs.size()) + " inter-cluster pairs");
  for (int i = 0; i < spec.noise_edges; ++i) {
    const auto j = i + uniform_below(rng, pairs.size() - i);
    std::swap(pairs[i], pairs[j]);
    edges.push_back(pairs[i]);
  }
  out.graph = Graph(n, edges);
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
  if (n >= 3) edges.push_back(Edge{0, n - 1});
  return Graph(n, edges);
}

const std::map<std::string, Graph>& fixtures() {
  static const std::map<std::string, Graph> all = [] {
    std::map<std::string, Graph> m;
    m["K2"] = complete_graph(2);
    m["K4"] = complete_graph(4);
    m["K5"] = complete_graph(5);
    m["P3"] = path_graph(3);
    m["P4"] = path_graph(4);
    m["C5"] = cycle_graph(5);

    const Graph k4 = complete_graph(4);
    std::vector<Edge> two = k4.edges();
    for (const Edge& e : k4.edges()) two.push_back(Edge{e.u + 4, e.v + 4});
    two.push_back(Edge{0, 4});
    m["TwoK4Bridge"] = Graph(8, two);

    std::vector<Edge> pendant = k4.edges();
    pendant.push_back(Edge{0, 4});
    m["K4Pendant"] = Graph(5, pendant);

    m["Prism"] = Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});

    std::vector<Edge> k9 = complete_graph(9).edges();
    k9.push_back(Edge{0, 9});
    m["K9Pendant"] = Graph(10, k9);
    return m;
  }();
  return all;
}

}  // namespace hcc
