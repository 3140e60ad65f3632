#include <sstream>

#include <json.hpp>

#include "oumv/harness.hpp"

namespace oumv {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json run_to_json(const ReductionRun& r, bool timing) {
  Json j;
  j["family"] = r.family;
  j["variant"] = r.variant;
  j["adapter"] = r.adapter;
  j["n"] = r.n;
  j["dimension"] = r.dimension;
  j["seed"] = r.seed;
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  j["formula_nodes"] = r.formula_nodes ? Json(*r.formula_nodes) : Json(nullptr);
  j["rule"] = r.rule;
  j["total_updates"] = r.total_updates;
  j["total_queries"] = r.total_queries;
  j["max_updates_per_pair"] = r.max_updates_per_pair;
  j["insertions"] = r.insertions;
  j["deletions"] = r.deletions;
  j["max_degree"] = r.max_degree;
  j["bipartite"] = r.bipartite;
  if (r.min_lambda2 >= 0) j["min_lambda2"] = fmt(r.min_lambda2);
  j["mismatches"] = r.mismatches;
  j["first_mismatch"] = r.first_mismatch;
  j["ok"] = r.ok;
  j["error"] = r.error;
  if (!r.repro.empty()) j["repro"] = Json::parse(r.repro);
  Json pairs = Json::array();
  for (const PairRecord& p : r.pairs)
    pairs.push_back({{"pair", p.index},
                     {"updates", p.updates},
                     {"queries", p.queries},
                     {"answer", p.answer},
                     {"decoded", p.decoded},
                     {"oracle", p.oracle}});
  j["pairs"] = pairs;
  if (timing) {
    j["build_ms"] = r.build_ms;
    j["update_ms"] = r.update_ms;
    j["query_ms"] = r.query_ms;
    j["wall_ms"] = r.wall_ms;
  }
  return j;
}

}  // namespace

std::string run_json(const std::vector<ReductionRun>& runs, bool timing) {
  Json out = Json::array();
  for (const ReductionRun& r : runs) out.push_back(run_to_json(r, timing));
  return out.dump(2) + "\n";
}

std::string run_csv(const std::vector<ReductionRun>& runs, bool timing) {
  std::ostringstream os;
  os << "family,variant,adapter,n,dimension,seed,nodes,edges,pairs,total_updates,total_queries,"
        "max_updates_per_pair,max_degree,mismatches,ok";
  if (timing) os << ",build_ms,update_ms,query_ms,wall_ms";
  os << "\n";
  for (const ReductionRun& r : runs) {
    os << r.family << ',' << r.variant << ',' << r.adapter << ',' << r.n << ',' << r.dimension << ',' << r.seed << ','
       << r.nodes << ',' << r.edges << ',' << r.pairs.size() << ',' << r.total_updates << ',' << r.total_queries << ','
       << r.max_updates_per_pair << ',' << r.max_degree << ',' << r.mismatches << ',' << (r.ok ? 1 : 0);
    if (timing) os << ',' << fmt(r.build_ms) << ',' << fmt(r.update_ms) << ',' << fmt(r.query_ms) << ',' << fmt(r.wall_ms);
    os << "\n";
  }
  return os.str();
}

std::string verify_json(const std::vector<VerificationReport>& reports) {
  Json out = Json::array();
  for (const VerificationReport& rep : reports) {
    Json j;
    j["family"] = rep.config.family;
    j["variant"] = rep.config.variant;
    j["n"] = rep.config.n;
    j["seed"] = rep.config.seed;
    j["trials"] = rep.config.trials;
    j["pass"] = rep.pass;
    Json items = Json::array();
    for (const CheckItem& c : rep.items) items.push_back({{"check", c.name}, {"pass", c.pass}, {"value", c.value}});
    j["checks"] = items;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string verify_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "family,variant,n,seed,check,pass,value\n";
  for (const VerificationReport& rep : reports)
    for (const CheckItem& c : rep.items)
      os << rep.config.family << ',' << rep.config.variant << ',' << rep.config.n << ',' << rep.config.seed << ','
         << c.name << ',' << (c.pass ? 1 : 0) << ',' << field(c.value) << "\n";
  return os.str();
}

std::string bench_csv(const RunConfig& config, const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream os;
  os << "family,variant,n,N,m,updates,queries,mismatches";
  if (timing) os << ",build_ms,update_ms,query_ms";
  os << "\n";
  for (const BenchRow& r : rows) {
    os << config.family << ',' << config.variant << ',' << r.n << ',' << r.nodes << ',' << r.edges << ',' << r.updates
       << ',' << r.queries << ',' << r.mismatches;
    if (timing) os << ',' << fmt(r.build_ms) << ',' << fmt(r.update_ms) << ',' << fmt(r.query_ms);
    os << "\n";
  }
  return os.str();
}

std::string rounds_csv(const ReductionRun& run) {
  std::ostringstream os;
  os << "round,updates,answer,decoded,oracle\n";
  for (const PairRecord& p : run.pairs)
    os << p.index << ',' << p.updates << ',' << p.answer << ',' << (p.decoded ? 1 : 0) << ',' << (p.oracle ? 1 : 0)
       << "\n";
  return os.str();
}

}  // namespace oumv
