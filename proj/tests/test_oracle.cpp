#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcc/instance_io.hpp"
#include "hcc/oracle.hpp"
#include "support.hpp"

using namespace hcc;

namespace {
const Graph& fx(const char* name) { return fixtures().at(name); }
}  // namespace

TEST_CASE("set partitions are counted by the Bell numbers") {
  const std::vector<long> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
  for (int n = 0; n < static_cast<int>(bell.size()); ++n) {
    long count = 0;
    oracle::for_each_set_partition(n, [&](const Partition& p) {
      ++count;
      if (n > 0) CHECK(is_partition_of(p, VertexSet::range(n)));
    });
    CHECK(count == bell[n]);
  }
}

TEST_CASE("brute hcd examples") {
  const auto k4 = oracle::brute_hcd(fx("K4"));
  REQUIRE(k4);
  CHECK(k4->min_deletions == 0);
  CHECK(k4->optimal == std::vector<Partition>{{{0, 1, 2, 3}}});
  const auto p3 = oracle::brute_hcd(fx("P3"));
  CHECK(p3->min_deletions == 2);
  CHECK(p3->optimal == std::vector<Partition>{{{0}, {1}, {2}}});
  CHECK(oracle::brute_hcd(fx("TwoK4Bridge"))->min_deletions == 1);
  // Under the K2 convention the path P3 has two optimal splits.
  const auto loose = oracle::brute_hcd(fx("P3"), HcConvention{true});
  CHECK(loose->min_deletions == 1);
  CHECK(loose->optimal.size() == 2);
  CHECK_THROWS_AS(oracle::brute_hcd(complete_graph(11)), std::invalid_argument);
}

TEST_CASE("brute p-hcd examples") {
  const Graph k4k4 = disjoint_union(fx("K4"), fx("K4"));
  CHECK(oracle::brute_phcd(k4k4, 2, 0));
  CHECK_FALSE(oracle::brute_phcd(k4k4, 1, 99));
  CHECK_FALSE(oracle::brute_phcd(fx("TwoK4Bridge"), 2, 0));
}

TEST_CASE("brute isolated examples") {
  CHECK(oracle::brute_isolated(fx("K4"), {0, 0, 0, 0}, 0, 4) == VertexSet{0, 1, 2, 3});
  CHECK_FALSE(oracle::brute_isolated(fx("C5"), std::vector<int>(5, 0), 5, 3));
  CHECK(oracle::brute_isolated(fx("K4Pendant"), std::vector<int>(5, 0), 1, 4) == VertexSet{0, 1, 2, 3});
  CHECK_THROWS_AS(oracle::brute_isolated(complete_graph(17), std::vector<int>(17, 0), 0, 3), std::invalid_argument);
}

TEST_CASE("brute seeded examples") {
  CHECK(oracle::brute_seeded(fx("K5"), {0}, 4, 0) == VertexSet::range(5));
  CHECK_FALSE(oracle::brute_seeded(fx("P4"), {1}, 1, 3));
  const auto tri = oracle::brute_seeded(fx("K4"), {0}, 2, 3);
  REQUIRE(tri);
  CHECK(tri->size() == 3);
  CHECK(tri->contains(0));
}

TEST_CASE("brute cut examples") {
  CHECK(oracle::brute_cuts(fx("P3"), 1).size() == 3);
  const auto k4 = oracle::brute_cuts(fx("K4"), 2);
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].side1 == VertexSet::range(4));
  CHECK(oracle::brute_cuts(Graph(3), 0).size() == 4);
}

TEST_CASE("hcd minimum equals the least feasible budget with unlimited clusters") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 150; ++t) {
    const Graph g = test::random_small_graph(rng, 7);
    const int best = oracle::brute_hcd(g)->min_deletions;
    int least = -1;
    for (int k = 0; k <= g.edge_count() && least < 0; ++k)
      if (oracle::brute_phcd(g, g.vertex_count(), k)) least = k;
    CHECK(least == best);
  }
}
