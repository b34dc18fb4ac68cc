#include "hcc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcc/hcd.hpp"
#include "hcc/instance_io.hpp"
#include "hcc/oracle.hpp"
#include "hcc/phcd.hpp"
#include "hcc/report.hpp"
#include "hcc/subgraph.hpp"

namespace hcc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string input;
  int k = 0, p = 0, s = 0, a = 0;
  std::vector<int> seed_set;
  std::string charges;
  std::string algorithm = "auto";
  std::string problem;
  bool json = false;
  std::uint64_t rng_seed = 0;
  std::uint64_t cut_cap = 0;
  bool k2_is_hc = false;
  int threads = 1;
  std::vector<int> clusters;
  int noise = 0;
  double density = 1.0;
  std::string suite = "fixtures";

  // The parsed subcommand, and flags treated as given without it.
  const CLI::App* app = nullptr;
  std::set<std::string> implied;
  bool has(const std::string& flag) const {
    if (implied.count(flag)) return true;
    const CLI::Option* opt = app ? app->get_option_no_throw("--" + flag) : nullptr;
    return opt && opt->count() > 0;
  }
  void need(const std::string& flag) const {
    if (!has(flag)) throw UsageError("--" + flag + " is required");
  }
};

struct Outcome {
  RunReport report;
  int code = kExitNo;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

void fill_stats(RunReport& r, const SolverStats& st, double ms) {
  r.stats.elapsed_ms = ms;
  r.stats.branch_nodes = st.branch_nodes;
  r.stats.cuts_enumerated = st.cuts_enumerated;
  r.stats.convolutions = st.convolutions;
}

struct CertificateError : std::logic_error {
  CertificateError() : std::logic_error("certificate failed verification") {}
};

void check(bool ok) {
  if (!ok) throw CertificateError();
}

void set_partition_certificate(RunReport& r, const Graph& g, const Partition& p) {
  r.certificate.partition = canonical_partition(p);
  r.certificate.deleted_edges = inter_block_edges(g, p);
}

// One solver run. `algorithm` is already validated for the problem.
Outcome solve(const std::string& problem, const std::string& algorithm, const Graph& g, const Args& args,
              const SolveOptions& base) {
  Outcome o;
  RunReport& r = o.report;
  SolverStats st;
  SolveOptions opts = base;
  opts.stats = &st;
  const HcConvention conv = opts.convention;
  const bool brute = algorithm == "oracle";
  const auto start = std::chrono::steady_clock::now();

  if (problem == "hcd-exact") {
    std::optional<HcdSolution> sol;
    if (brute) {
      if (auto best = oracle::brute_hcd(g, conv)) sol = solution_from_partition(g, best->optimal.front());
    } else {
      sol = exact_hcd(g, opts);
    }
    if (sol) {
      const int value = static_cast<int>(sol->deleted_edges.size());
      check(verify_hcd_solution(g, *sol, value, conv));
      r.answer = {true, value};
      set_partition_certificate(r, g, sol->partition);
    }
  } else if (problem == "hcd-fpt") {
    args.need("k");
    r.params.k = args.k;
    std::optional<HcdSolution> sol;
    if (algorithm == "oracle") {
      if (auto best = oracle::brute_hcd(g, conv); best && best->min_deletions <= args.k)
        sol = solution_from_partition(g, best->optimal.front());
    } else if (algorithm == "exact") {
      if (auto opt = exact_hcd(g, opts); opt && static_cast<int>(opt->deleted_edges.size()) <= args.k) sol = opt;
    } else {
      sol = hcd_fpt(HcdInstance{g, args.k}, opts);
    }
    if (sol) {
      check(verify_hcd_solution(g, *sol, args.k, conv));
      r.answer.yes = true;
      set_partition_certificate(r, g, sol->partition);
    }
  } else if (problem == "phcd") {
    args.need("p");
    args.need("k");
    r.params.p = args.p;
    r.params.k = args.k;
    std::optional<Partition> clusters;
    if (brute) {
      clusters = oracle::brute_phcd(g, args.p, args.k, conv);
    } else {
      clusters = solve_phcd(PhcdInstance{g, args.p, args.k}, opts).partition;
    }
    if (clusters) {
      check(verify_phcd_solution(g, *clusters, args.p, args.k, conv));
      r.answer.yes = true;
      set_partition_certificate(r, g, *clusters);
    }
  } else if (problem == "seeded") {
    args.need("seed-set");
    args.need("a");
    args.need("k");
    r.params.seed_set = args.seed_set;
    r.params.a = args.a;
    r.params.k = args.k;
    for (int v : args.seed_set)
      if (v < 0 || v >= g.vertex_count()) throw UsageError("seed vertex " + std::to_string(v) + " out of range");
    const SeededInstance inst{g, VertexSet::from_vector(args.seed_set), args.a, args.k};
    std::optional<VertexSet> c =
        brute ? oracle::brute_seeded(g, inst.seed, args.a, args.k, conv) : solve_seeded(inst, opts);
    if (c) {
      check(seeded_feasible(inst, *c, conv));
      r.answer.yes = true;
      r.certificate.cluster = *c;
    }
  } else if (problem == "isolated") {
    args.need("s");
    args.need("k");
    r.params.s = args.s;
    r.params.k = args.k;
    IsolatedInstance inst{g, {}, args.k, args.s};
    if (args.has("charges")) inst.charges = read_charges_file(args.charges, g.vertex_count());
    std::optional<VertexSet> c;
    if (brute) {
      const auto zeros = std::vector<int>(g.vertex_count(), 0);
      c = oracle::brute_isolated(g, inst.charges.empty() ? zeros : inst.charges, args.k, args.s, conv);
    } else {
      c = solve_isolated(inst, opts);
    }
    if (c) {
      check(isolated_feasible(inst, *c, conv));
      r.answer.yes = true;
      r.certificate.cluster = *c;
    }
  } else if (problem == "cuts") {
    args.need("k");
    r.params.k = args.k;
    std::vector<VertexSet> sides;
    for (const Cut& c : oracle::brute_cuts(g, args.k)) sides.push_back(c.side1);
    st.cuts_enumerated = sides.size();
    r.answer = {true, static_cast<int>(sides.size())};
    r.certificate.cuts = sides;
  } else {
    throw UsageError("unknown problem " + problem);
  }

  fill_stats(r, st, elapsed_ms(start));
  o.code = r.answer.yes ? kExitYes : kExitNo;
  return o;
}

SolveOptions options_from(const Args& args) {
  if (args.threads < 1) throw UsageError("--threads must be at least 1");
  SolveOptions opts;
  opts.convention.k2_is_hc = args.k2_is_hc;
  opts.threads = args.threads;
  if (args.has("cut-cap")) opts.cut_cap = args.cut_cap;
  return opts;
}

void emit(const RunReport& r, const Args& args, std::ostream& out) {
  if (args.json)
    out << nlohmann::json(r).dump(2) << '\n';
  else
    print_report(out, r);
}

int run_solver(const std::string& problem, const Args& args, std::ostream& out) {
  const Graph g = read_graph_file(args.input);
  Outcome o = solve(problem, args.algorithm, g, args, options_from(args));
  o.report.problem = args.problem.empty() ? problem : "oracle-" + args.problem;
  o.report.instance = std::filesystem::path(args.input).filename().string();
  emit(o.report, args, out);
  return o.code;
}

int run_oracle(const Args& args, std::ostream& out) {
  static const std::map<std::string, std::string> problems = {
      {"hcd", "hcd-exact"}, {"phcd", "phcd"}, {"seeded", "seeded"}, {"isolated", "isolated"}, {"cuts", "cuts"}};
  std::string problem = problems.at(args.problem);
  // With a budget the HCD oracle answers the decision question.
  if (problem == "hcd-exact" && args.has("k")) problem = "hcd-fpt";
  Args copy = args;
  copy.algorithm = "oracle";
  return run_solver(problem, copy, out);
}

int run_gen(const Args& args, std::ostream& out) {
  PlantedSpec spec;
  spec.cluster_sizes = args.clusters;
  spec.noise_edges = args.noise;
  spec.rng_seed = args.rng_seed;
  spec.density = args.density;
  const PlantedInstance inst = generate_planted(spec);
  out << "# planted clusters:";
  for (const VertexSet& c : inst.clusters) out << ' ' << c;
  out << '\n' << serialize_graph(inst.graph);
  return kExitYes;
}

struct BenchInstance {
  std::string name;
  Graph graph;
};

std::vector<BenchInstance> bench_suite(const std::string& suite) {
  std::vector<BenchInstance> out;
  if (suite == "fixtures") {
    for (const auto& [name, g] : fixtures()) out.push_back({name, g});
    return out;
  }
  struct Row {
    std::vector<int> sizes;
    int noise;
  };
  const std::vector<Row> grid = {{{4, 4}, 1},    {{5, 5}, 2},    {{3, 3, 3}, 2},    {{3, 4}, 3},
                                 {{4, 4, 4}, 3}, {{6, 6}, 2},    {{5, 5, 5}, 3},    {{4, 4, 4, 4}, 4}};
  std::uint64_t seed = 1;
  for (const Row& row : grid) {
    PlantedSpec spec;
    spec.cluster_sizes = row.sizes;
    spec.noise_edges = row.noise;
    spec.rng_seed = seed++;
    std::string name = "planted";
    for (int c : row.sizes) name += "-" + std::to_string(c);
    name += "+" + std::to_string(row.noise);
    out.push_back({name, generate_planted(spec).graph});
  }
  return out;
}

int run_bench(const Args& args, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> all = {"exact", "fpt", "phcd", "seeded", "isolated"};
  const std::vector<std::string> algorithms = args.algorithm == "all" ? all : std::vector{args.algorithm};
  const SolveOptions opts = options_from(args);
  int mismatches = 0;

  out << "instance,algorithm,answer,ms,nodes,oracle\n";
  for (const BenchInstance& inst : bench_suite(args.suite)) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    Args local = args;
    local.a = std::min(args.a, n - 1);
    local.s = std::min(args.s, n);
    local.seed_set = {0};
    local.implied = {"k", "p", "s", "a", "seed-set"};

    for (const std::string& alg : algorithms) {
      static const std::map<std::string, std::string> problem_of = {
          {"exact", "hcd-exact"}, {"fpt", "hcd-fpt"}, {"phcd", "phcd"}, {"seeded", "seeded"}, {"isolated", "isolated"}};
      const std::string problem = problem_of.at(alg);
      const int cap = (problem == "hcd-exact" || problem == "hcd-fpt" || problem == "phcd")
                          ? oracle::kMaxPartitionVertices
                          : oracle::kMaxSubsetVertices;
      std::string answer = "error", verdict = "skip";
      double ms = 0;
      std::uint64_t nodes = 0;
      try {
        const Outcome o = solve(problem, "auto", g, local, opts);
        ms = o.report.stats.elapsed_ms;
        nodes = o.report.stats.branch_nodes;
        answer = o.report.answer.value ? std::to_string(*o.report.answer.value) : o.report.answer.yes ? "yes" : "no";
        // Past the oracle cap the FPT answer is still checked against exact_hcd.
        const bool exact_ref = problem == "hcd-fpt" && n > cap;
        if (n <= cap || exact_ref) {
          const Outcome ref = solve(problem, exact_ref ? "exact" : "oracle", g, local, opts);
          const bool same = o.report.answer == ref.report.answer;
          verdict = same ? "match" : "mismatch";
          mismatches += !same;
        }
      } catch (const CertificateError& e) {
        err << inst.name << ' ' << alg << ": " << e.what() << '\n';
        verdict = "mismatch";
        ++mismatches;
      } catch (const std::exception& e) {
        err << inst.name << ' ' << alg << ": " << e.what() << '\n';
      }
      out << inst.name << ',' << alg << ',' << answer << ',' << std::fixed << std::setprecision(3) << ms
          << std::defaultfloat << ',' << nodes << ',' << verdict << '\n';
    }
  }
  return mismatches == 0 ? kExitYes : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Highly connected clustering and isolation solvers"};
  app.name("hcc");
  app.require_subcommand(1);
  Args args;

  const std::vector<std::string> problems = {"hcd", "phcd", "seeded", "isolated", "cuts"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", args.input, "Graph file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", args.json, "Structured report on stdout");
    sub->add_option("--k2-is-hc", args.k2_is_hc, "Treat K2 as highly connected");
    sub->add_option("--threads", args.threads, "Worker threads for independent branches");
  };
  auto numeric = [&](CLI::App* sub, const std::string& flag, int& target, const std::string& help) {
    sub->add_option("--" + flag, target, help)->check(CLI::NonNegativeNumber);
  };
  auto instance_flags = [&](CLI::App* sub) {
    numeric(sub, "k", args.k, "Deletion budget");
    numeric(sub, "p", args.p, "Maximum number of clusters");
    numeric(sub, "s", args.s, "Size of the isolated cluster");
    numeric(sub, "a", args.a, "Vertices to add to the seed");
    sub->add_option("--seed-set", args.seed_set, "Seed vertices, comma separated")->delimiter(',');
    sub->add_option("--charges", args.charges, "Per-vertex charges file")->check(CLI::ExistingFile);
    sub->add_option("--cut-cap", args.cut_cap, "Answer NO after this many cuts");
  };
  auto algorithm = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--algorithm", args.algorithm, "Algorithm")->check(CLI::IsMember(allowed));
  };

  struct Solver {
    const char* name;
    const char* help;
    std::vector<std::string> algorithms;
  };
  const std::vector<Solver> solvers = {
      {"hcd-exact", "Minimum deletions by subset convolution", {"auto", "exact", "oracle"}},
      {"hcd-fpt", "Decide HCD within budget k", {"auto", "fpt", "exact", "oracle"}},
      {"phcd", "At most p clusters within budget k", {"auto", "oracle"}},
      {"seeded", "Grow a seed set into one cluster", {"auto", "oracle"}},
      {"isolated", "Find an isolated highly connected subgraph", {"auto", "oracle"}},
  };
  std::map<CLI::App*, std::string> solver_of;
  for (const Solver& s : solvers) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    instance_flags(sub);
    algorithm(sub, s.algorithms);
    solver_of[sub] = s.name;
  }

  CLI::App* orc = app.add_subcommand("oracle", "Brute-force reference answers");
  common(orc);
  instance_flags(orc);
  orc->add_option("--problem", args.problem, "hcd|phcd|seeded|isolated|cuts")
      ->required()
      ->check(CLI::IsMember(problems));

  CLI::App* gen = app.add_subcommand("gen", "Planted instance on stdout");
  gen->add_option("--rng-seed", args.rng_seed, "Generator seed");
  gen->add_option("--clusters", args.clusters, "Cluster sizes, comma separated")->required()->delimiter(',');
  gen->add_option("--noise", args.noise, "Inter-cluster noise edges")->check(CLI::NonNegativeNumber);
  gen->add_option("--density", args.density, "Edge probability inside clusters");

  CLI::App* bench = app.add_subcommand("bench", "CSV timings with oracle cross-check");
  bench->add_option("--k2-is-hc", args.k2_is_hc, "Treat K2 as highly connected");
  bench->add_option("--threads", args.threads, "Worker threads for independent branches");
  bench->add_option("--suite", args.suite, "fixtures|planted")->check(CLI::IsMember({"fixtures", "planted"}));
  bench->add_option("--algorithm", args.algorithm, "all|exact|fpt|phcd|seeded|isolated")
      ->check(CLI::IsMember({"all", "exact", "fpt", "phcd", "seeded", "isolated"}));
  args.k = 3;
  args.p = 2;
  args.s = 4;
  args.a = 3;
  numeric(bench, "k", args.k, "Budget for fpt, phcd, seeded, isolated");
  numeric(bench, "p", args.p, "Cluster limit for phcd");
  numeric(bench, "s", args.s, "Cluster size for isolated");
  numeric(bench, "a", args.a, "Growth for seeded (seed is vertex 0)");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  args.app = chosen;
  try {
    if (chosen == gen) return run_gen(args, out);
    if (chosen == bench) {
      if (args.algorithm == "auto") args.algorithm = "all";
      return run_bench(args, out, err);
    }
    if (chosen == orc) return run_oracle(args, out);
    return run_solver(solver_of.at(chosen), args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << chosen->help();
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace hcc::cli
