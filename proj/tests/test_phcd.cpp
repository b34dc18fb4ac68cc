#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hcc/instance_io.hpp"
#include "hcc/oracle.hpp"
#include "hcc/phcd.hpp"
#include "support.hpp"

using namespace hcc;

namespace {

const Graph& fx(const char* name) { return fixtures().at(name); }

std::vector<VertexSet> sides(const std::vector<Cut>& cuts) {
  std::vector<VertexSet> out;
  for (const Cut& c : cuts) out.push_back(c.side1);
  std::sort(out.begin(), out.end());
  return out;
}

// Both orientations of every cut, filtered directly from all 2^n subsets.
int oriented_cut_count(const Graph& g, int k) {
  int count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s) count += test::crossing(g, s) <= k;
  return count;
}

}  // namespace

TEST_CASE("cut enumeration examples") {
  const Graph& p3 = fx("P3");
  const auto cuts = enumerate_k_cuts(p3, 1).cuts;
  CHECK(cuts.size() == 3);
  CHECK(sides(cuts) == std::vector<VertexSet>{{0}, {0, 1}, {0, 1, 2}});
  CHECK(oriented_cut_count(p3, 1) == 6);
  CHECK(cuts.front().side1 == p3.vertices());

  const auto k4 = enumerate_k_cuts(fx("K4"), 2).cuts;
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].side2.empty());

  const auto two = enumerate_k_cuts(fx("TwoK4Bridge"), 1).cuts;
  CHECK(sides(two) == std::vector<VertexSet>{{0, 1, 2, 3}, VertexSet::range(8)});
  CHECK(enumerate_k_cuts(Graph(3), 0).cuts.size() == 4);
}

TEST_CASE("cut enumeration cap") {
  const auto capped = enumerate_k_cuts(fx("P4"), 1, 2);
  CHECK(capped.cap_exceeded);
  CHECK(capped.cuts.size() == 2);
  const auto exact = enumerate_k_cuts(fx("P4"), 1, 4);
  CHECK_FALSE(exact.cap_exceeded);
  CHECK(exact.cuts.size() == 4);
}

TEST_CASE("enumerator equals the oracle without duplicates") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const Graph g = test::random_small_graph(rng, 12);
    const int k = static_cast<int>(uniform_below(rng, 7));
    const auto got = enumerate_k_cuts(g, k).cuts;
    const auto want = oracle::brute_cuts(g, k);
    const auto got_sides = sides(got);
    CHECK(got_sides == sides(want));
    CHECK(std::set<VertexSet>(got_sides.begin(), got_sides.end()).size() == got.size());
    for (const Cut& c : got) {
      CHECK(c.crossing == test::crossing(g, c.side1.low_word()));
      CHECK((c.side1 | c.side2) == g.vertices());
      CHECK_FALSE(c.side1.intersects(c.side2));
    }
  }
}

TEST_CASE("connected p-HCD examples") {
  const auto two = solve_connected_phcd(fx("TwoK4Bridge"), 2, 1);
  REQUIRE(two.partition);
  CHECK(canonical_partition(*two.partition) == Partition{{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK_FALSE(solve_connected_phcd(fx("TwoK4Bridge"), 1, 13).partition);
  CHECK(solve_connected_phcd(fx("K4"), 1, 0).partition);
  CHECK_THROWS(solve_connected_phcd(Graph(2), 1, 0));
}

TEST_CASE("p-HCD examples") {
  const Graph k4k4 = disjoint_union(fx("K4"), fx("K4"));
  CHECK(solve_phcd(PhcdInstance{k4k4, 2, 0}).partition);
  CHECK_FALSE(solve_phcd(PhcdInstance{k4k4, 1, 0}).partition);
  CHECK_FALSE(solve_phcd(PhcdInstance{k4k4, 1, 16}).partition);
  const Graph mixed = disjoint_union(fx("TwoK4Bridge"), fx("K4"));
  const auto res = solve_phcd(PhcdInstance{mixed, 3, 1});
  REQUIRE(res.partition);
  CHECK(verify_phcd_solution(mixed, *res.partition, 3, 1));
}

TEST_CASE("cut cap answers NO") {
  SolveOptions opts;
  opts.cut_cap = 1;
  const auto res = solve_phcd(PhcdInstance{fx("TwoK4Bridge"), 2, 1}, opts);
  CHECK(res.cap_exceeded);
  CHECK_FALSE(res.partition);
}

TEST_CASE("verifier examples") {
  const Graph& two = fx("TwoK4Bridge");
  CHECK(verify_phcd_solution(two, {{0, 1, 2, 3}, {4, 5, 6, 7}}, 2, 1));
  CHECK_FALSE(verify_phcd_solution(two, {{0, 1, 2, 3}, {4, 5, 6, 7}}, 1, 1));
  CHECK_FALSE(verify_phcd_solution(two, {{0, 1, 2, 3}, {4, 5, 6, 7}}, 2, 0));
  CHECK_FALSE(verify_phcd_solution(two, {{0, 1, 2, 3}, {4, 5, 6}}, 3, 1));
}

TEST_CASE("p-HCD equals the oracle on fixtures and random graphs") {
  auto agree = [](const Graph& g, int p, int k) {
    const auto got = solve_phcd(PhcdInstance{g, p, k});
    const bool want = oracle::brute_phcd(g, p, k).has_value();
    if (got.partition && !verify_phcd_solution(g, *got.partition, p, k)) return false;
    return got.partition.has_value() == want;
  };
  for (const auto& [name, g] : fixtures()) {
    if (g.vertex_count() > oracle::kMaxPartitionVertices) continue;
    for (int p = 1; p <= 3; ++p)
      for (int k = 0; k <= 6; ++k) CHECK_MESSAGE(agree(g, p, k), name << " p=" << p << " k=" << k);
  }
  std::mt19937_64 rng(42);
  for (int t = 0; t < 500; ++t) {
    const Graph g = test::random_small_graph(rng, 8);
    const int p = 1 + static_cast<int>(uniform_below(rng, 3));
    const int k = static_cast<int>(uniform_below(rng, 7));
    CHECK(agree(g, p, k));
  }
}

TEST_CASE("answers are monotone in p and k") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 150; ++t) {
    const Graph g = test::random_small_graph(rng, 8);
    for (int p = 1; p <= 3; ++p)
      for (int k = 0; k <= 5; ++k) {
        if (!solve_phcd(PhcdInstance{g, p, k}).partition) continue;
        CHECK(solve_phcd(PhcdInstance{g, p + 1, k}).partition);
        CHECK(solve_phcd(PhcdInstance{g, p, k + 1}).partition);
      }
  }
}

TEST_CASE("planted clusters never have more cuts than brute force finds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PlantedSpec spec;
    spec.cluster_sizes = {4, 4, 3};
    spec.noise_edges = 2;
    spec.rng_seed = seed;
    const Graph g = generate_planted(spec).graph;
    for (int k = 0; k <= 4; ++k) CHECK(enumerate_k_cuts(g, k).cuts.size() <= oracle::brute_cuts(g, k).size());
  }
}
