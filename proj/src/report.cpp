#include "hcc/report.hpp"

#include <ostream>

using nlohmann::json;

namespace hcc {

namespace {

json set_json(const VertexSet& s) { return s.to_vector(); }

VertexSet set_from(const json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw json::other_error::create(501, "vertex out of range", &j);
    s.insert(x);
  }
  return s;
}

json sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(set_json(s));
  return out;
}

std::vector<VertexSet> sets_from(const json& j) {
  std::vector<VertexSet> out;
  for (const auto& s : j) out.push_back(set_from(s));
  return out;
}

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void take(const json& j, const char* key, std::optional<T>& v) {
  if (auto it = j.find(key); it != j.end()) v = it->template get<T>();
}

void print_set_list(std::ostream& os, const std::vector<VertexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) os << (i ? " " : "") << sets[i];
}

}  // namespace

void to_json(json& j, const RunReport& r) {
  json params = json::object();
  put(params, "k", r.params.k);
  put(params, "p", r.params.p);
  put(params, "s", r.params.s);
  put(params, "a", r.params.a);
  put(params, "seed_set", r.params.seed_set);

  json answer = r.answer.value ? json(*r.answer.value) : json(r.answer.yes ? "yes" : "no");

  json cert = json::object();
  if (r.certificate.partition) cert["partition"] = sets_json(*r.certificate.partition);
  if (r.certificate.deleted_edges) {
    json edges = json::array();
    for (const Edge& e : *r.certificate.deleted_edges) edges.push_back({e.u, e.v});
    cert["deleted_edges"] = edges;
  }
  if (r.certificate.cluster) cert["cluster"] = set_json(*r.certificate.cluster);
  if (r.certificate.cuts) cert["cuts"] = sets_json(*r.certificate.cuts);

  j = json{{"problem", r.problem},
           {"instance", r.instance},
           {"params", params},
           {"answer", answer},
           {"certificate", r.certificate.empty() ? json(nullptr) : cert},
           {"stats",
            {{"elapsed_ms", r.stats.elapsed_ms},
             {"branch_nodes", r.stats.branch_nodes},
             {"cuts_enumerated", r.stats.cuts_enumerated},
             {"convolutions", r.stats.convolutions}}}};
}

void from_json(const json& j, RunReport& r) {
  r = RunReport{};
  r.problem = j.at("problem").get<std::string>();
  r.instance = j.at("instance").get<std::string>();

  const json& params = j.at("params");
  take(params, "k", r.params.k);
  take(params, "p", r.params.p);
  take(params, "s", r.params.s);
  take(params, "a", r.params.a);
  take(params, "seed_set", r.params.seed_set);

  const json& answer = j.at("answer");
  if (answer.is_number_integer()) {
    r.answer.yes = true;
    r.answer.value = answer.get<int>();
  } else {
    const auto word = answer.get<std::string>();
    if (word != "yes" && word != "no") throw json::other_error::create(501, "answer must be yes, no or a number", &j);
    r.answer.yes = word == "yes";
  }

  const json& cert = j.at("certificate");
  if (!cert.is_null()) {
    if (cert.contains("partition")) r.certificate.partition = sets_from(cert["partition"]);
    if (cert.contains("deleted_edges")) {
      std::vector<Edge> edges;
      for (const auto& e : cert["deleted_edges"]) edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>()});
      r.certificate.deleted_edges = edges;
    }
    if (cert.contains("cluster")) r.certificate.cluster = set_from(cert["cluster"]);
    if (cert.contains("cuts")) r.certificate.cuts = sets_from(cert["cuts"]);
  }

  const json& stats = j.at("stats");
  r.stats.elapsed_ms = stats.at("elapsed_ms").get<double>();
  r.stats.branch_nodes = stats.at("branch_nodes").get<std::uint64_t>();
  r.stats.cuts_enumerated = stats.at("cuts_enumerated").get<std::uint64_t>();
  r.stats.convolutions = stats.at("convolutions").get<std::uint64_t>();
}

void print_report(std::ostream& os, const RunReport& r) {
  os << "problem:  " << r.problem << '\n';
  os << "instance: " << r.instance << '\n';
  os << "params:  ";
  if (r.params.k) os << " k=" << *r.params.k;
  if (r.params.p) os << " p=" << *r.params.p;
  if (r.params.s) os << " s=" << *r.params.s;
  if (r.params.a) os << " a=" << *r.params.a;
  if (r.params.seed_set) os << " seed=" << VertexSet::from_vector(*r.params.seed_set);
  os << '\n';
  os << "answer:   ";
  if (r.answer.value)
    os << *r.answer.value;
  else
    os << (r.answer.yes ? "yes" : "no");
  os << '\n';

  const Certificate& c = r.certificate;
  if (c.deleted_edges) {
    os << "deleted:  " << c.deleted_edges->size() << " edge(s)";
    for (const Edge& e : *c.deleted_edges) os << ' ' << e;
    os << '\n';
  }
  if (c.partition) {
    os << "clusters: ";
    print_set_list(os, *c.partition);
    os << '\n';
  }
  if (c.cluster) os << "cluster:  " << *c.cluster << '\n';
  if (c.cuts) {
    os << "cuts:     " << c.cuts->size() << " (side1 listed)\n";
    for (const auto& s : *c.cuts) os << "  " << s << '\n';
  }
  os << "stats:    " << r.stats.elapsed_ms << " ms, " << r.stats.branch_nodes << " nodes, " << r.stats.cuts_enumerated
     << " cuts, " << r.stats.convolutions << " convolutions\n";
}

}  // namespace hcc
