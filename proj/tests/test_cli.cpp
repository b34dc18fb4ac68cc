#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "hcc/cli.hpp"
#include "hcc/hcd.hpp"
#include "hcc/instance_io.hpp"
#include "hcc/phcd.hpp"
#include "hcc/report.hpp"

using namespace hcc;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hcc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string fixture_file(const char* name) { return write_file(std::string(name) + ".txt", serialize_graph(fixtures().at(name))); }

RunReport report_of(const Result& r) { return json::parse(r.out).get<RunReport>(); }

}  // namespace

TEST_CASE("hcd-fpt yes with one deleted edge") {
  const auto r = run({"hcd-fpt", "--input", fixture_file("TwoK4Bridge"), "--k", "1", "--json"});
  CHECK(r.code == 0);
  const RunReport rep = report_of(r);
  CHECK(rep.problem == "hcd-fpt");
  CHECK(rep.instance == "TwoK4Bridge.txt");
  CHECK(rep.params.k == 1);
  CHECK(rep.answer.yes);
  REQUIRE(rep.certificate.deleted_edges);
  CHECK(*rep.certificate.deleted_edges == std::vector<Edge>{{0, 4}});
  const Graph& g = fixtures().at("TwoK4Bridge");
  CHECK(verify_hcd_solution(g, HcdSolution{*rep.certificate.deleted_edges, *rep.certificate.partition}, 1));
}

TEST_CASE("phcd no") {
  const auto r = run({"phcd", "--input", fixture_file("TwoK4Bridge"), "--p", "1", "--k", "13"});
  CHECK(r.code == 1);
  CHECK(r.out.find("answer:   no") != std::string::npos);
}

TEST_CASE("gen is deterministic") {
  const auto a = run({"gen", "--rng-seed", "7", "--clusters", "4,4", "--noise", "1"});
  const auto b = run({"gen", "--rng-seed", "7", "--clusters", "4,4", "--noise", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Graph g = parse_graph(a.out);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 13);
  const auto c = run({"gen", "--rng-seed", "8", "--clusters", "4,4", "--noise", "1"});
  CHECK(c.code == 0);
  CHECK(run({"gen", "--clusters", "3,3", "--noise", "10"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  const auto missing = run({"hcd-fpt", "--input", fixture_file("K4")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--k is required") != std::string::npos);
  CHECK(missing.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hcd-exact"}).code == 2);
  CHECK(run({"hcd-exact", "--input", "/nonexistent"}).code == 2);
  CHECK(run({"hcd-fpt", "--input", fixture_file("K4"), "--k", "-1"}).code == 2);
  CHECK(run({"hcd-fpt", "--input", fixture_file("K4"), "--k", "1", "--algorithm", "magic"}).code == 2);
  CHECK(run({"phcd", "--input", fixture_file("K4"), "--k", "1", "--algorithm", "fpt"}).code == 2);
  CHECK(run({"oracle", "--input", fixture_file("K4"), "--problem", "tsp"}).code == 2);
  CHECK(run({"seeded", "--input", fixture_file("K4"), "--seed-set", "9", "--a", "1", "--k", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parse errors exit 2") {
  const auto r = run({"hcd-exact", "--input", write_file("loop.txt", "2 1\n0 0\n")});
  CHECK(r.code == 2);
  CHECK(r.err.find("self-loop at line 2") != std::string::npos);
}

TEST_CASE("every solver subcommand agrees with its oracle") {
  const std::string two = fixture_file("TwoK4Bridge");
  const std::string prism = fixture_file("Prism");
  const std::vector<std::vector<std::string>> calls = {
      {"hcd-exact", "--input", two},
      {"hcd-exact", "--input", prism},
      {"hcd-fpt", "--input", prism, "--k", "2"},
      {"hcd-fpt", "--input", prism, "--k", "3"},
      {"phcd", "--input", two, "--p", "2", "--k", "1"},
      {"seeded", "--input", fixture_file("K5"), "--seed-set", "0,1", "--a", "3", "--k", "0"},
      {"seeded", "--input", fixture_file("P4"), "--seed-set", "1", "--a", "1", "--k", "1"},
      {"isolated", "--input", two, "--s", "4", "--k", "1"},
      {"isolated", "--input", two, "--s", "4", "--k", "0"},
  };
  for (auto args : calls) {
    const auto fast = run(args);
    args.push_back("--algorithm");
    args.push_back("oracle");
    const auto slow = run(args);
    CHECK_MESSAGE(fast.code == slow.code, args[0] << ' ' << args[2]);
  }
}

TEST_CASE("hcd-exact value and alternative algorithms") {
  const auto r = run({"hcd-exact", "--input", fixture_file("C5"), "--json"});
  CHECK(r.code == 0);
  CHECK(report_of(r).answer.value == 5);
  for (const char* alg : {"fpt", "exact", "oracle"})
    CHECK(run({"hcd-fpt", "--input", fixture_file("C5"), "--k", "4", "--algorithm", alg}).code == 1);
}

TEST_CASE("isolated with charges") {
  const std::string g = fixture_file("K4Pendant");
  const std::string charges = write_file("charges.txt", "1 0 0 0 0\n");
  CHECK(run({"isolated", "--input", g, "--s", "4", "--k", "1", "--charges", charges}).code == 1);
  CHECK(run({"isolated", "--input", g, "--s", "4", "--k", "2", "--charges", charges}).code == 0);
  CHECK(run({"isolated", "--input", g, "--s", "4", "--k", "2", "--charges", write_file("bad.txt", "1 2\n")}).code ==
        2);
}

TEST_CASE("k2 convention flag") {
  const std::string k2 = fixture_file("K2");
  CHECK(report_of(run({"hcd-exact", "--input", k2, "--json"})).answer.value == 1);
  CHECK(report_of(run({"hcd-exact", "--input", k2, "--json", "--k2-is-hc", "true"})).answer.value == 0);
}

TEST_CASE("oracle subcommand") {
  const std::string p3 = fixture_file("P3");
  const auto cuts = run({"oracle", "--problem", "cuts", "--input", p3, "--k", "1", "--json"});
  CHECK(cuts.code == 0);
  const RunReport rep = report_of(cuts);
  CHECK(rep.problem == "oracle-cuts");
  CHECK(rep.answer.value == 3);
  CHECK(rep.certificate.cuts->size() == 3);
  CHECK(run({"oracle", "--problem", "hcd", "--input", p3}).code == 0);
  CHECK(run({"oracle", "--problem", "hcd", "--input", p3, "--k", "1"}).code == 1);
  CHECK(run({"oracle", "--problem", "phcd", "--input", p3, "--p", "3", "--k", "2"}).code == 0);
  CHECK(run({"oracle", "--problem", "phcd", "--input", p3}).code == 2);
  CHECK(run({"oracle", "--problem", "hcd", "--input", fixture_file("K9Pendant")}).code == 0);
  CHECK(run({"oracle", "--problem", "hcd", "--input", write_file("big.txt", serialize_graph(complete_graph(11)))})
            .code == 2);
}

TEST_CASE("json report round-trips") {
  const auto r = run({"phcd", "--input", fixture_file("TwoK4Bridge"), "--p", "2", "--k", "1", "--json"});
  const json doc = json::parse(r.out);
  for (const char* key : {"problem", "instance", "params", "answer", "certificate", "stats"}) CHECK(doc.contains(key));
  for (const char* key : {"elapsed_ms", "branch_nodes", "cuts_enumerated", "convolutions"})
    CHECK(doc["stats"].contains(key));
  const RunReport rep = doc.get<RunReport>();
  CHECK(json(rep) == doc);
  CHECK(verify_phcd_solution(fixtures().at("TwoK4Bridge"), *rep.certificate.partition, 2, 1));

  RunReport seeded;
  seeded.problem = "seeded";
  seeded.instance = "x";
  seeded.params.seed_set = std::vector<Vertex>{0, 2};
  seeded.params.a = 1;
  seeded.certificate.cluster = VertexSet{0, 1, 2};
  CHECK(json(seeded).get<RunReport>() == seeded);
  CHECK_THROWS(json::parse(R"({"problem":"x"})").get<RunReport>());
}

TEST_CASE("bench over fixtures") {
  const auto r = run({"bench"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "instance,algorithm,answer,ms,nodes,oracle");
  int rows = 0, mismatches = 0;
  while (std::getline(lines, line)) {
    ++rows;
    mismatches += line.ends_with(",mismatch");
  }
  CHECK(rows >= 10);
  CHECK(mismatches == 0);
  CHECK(run({"bench", "--algorithm", "nope"}).code == 2);
}

TEST_CASE("bench over planted instances checks fpt against exact") {
  const auto r = run({"bench", "--suite", "planted", "--algorithm", "fpt", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find(",skip") == std::string::npos);
}
