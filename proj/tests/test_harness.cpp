#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "oumv/harness.hpp"

using namespace oumv;

namespace {

const CheckItem* item(const VerificationReport& rep, const std::string& name) {
  for (const CheckItem& c : rep.items)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("every n=2 single-pair instance runs without mismatches") {
  RunConfig c;
  DriverFactory factory;
  RunOptions opt;
  opt.verify_answers = true;
  int runs = 0, ones = 0;
  for (std::uint64_t k = 0; k < 256; ++k) {
    OuMvInstance inst = enumerate_instance(2, k);
    ReductionRun r = run_config(c, inst, factory, opt);
    CHECK(r.ok);
    CHECK(r.mismatches == 0);
    CHECK(r.total_queries == 1);
    CHECK(r.max_updates_per_pair <= 6 * 2);
    CHECK(r.pairs[0].oracle == oracle::vmv_transposed(inst.pairs[0].u, inst.matrix, inst.pairs[0].v));
    ones += r.pairs[0].oracle;
    ++runs;
  }
  CHECK(runs == 256);
  CHECK(ones > 0);
}

TEST_CASE("a broken adapter fails on the first planted-one pair") {
  RunConfig c;
  c.family = "stpath";
  c.adapter = "broken-bfs";
  OuMvInstance inst = generate_instance(4, InstanceMode::planted_one, 3);
  int first_one = 0;
  for (std::size_t k = 0; k < inst.truth.size() && !first_one; ++k)
    if (inst.truth[k]) first_one = static_cast<int>(k + 1);
  REQUIRE(first_one > 0);
  DriverFactory factory;
  ReductionRun r = run_config(c, inst, factory);
  CHECK_FALSE(r.ok);
  CHECK(r.first_mismatch == first_one);
  CHECK(r.pairs.size() == static_cast<std::size_t>(first_one));
  nlohmann::json repro = nlohmann::json::parse(r.repro);
  CHECK(repro["pairs"].size() == static_cast<std::size_t>(first_one));
  CHECK(repro["failing_pair"] == first_one - 1);
  CHECK(!repro["updates"].empty());

  c.adapter = "recompute";
  CHECK(run_config(c, inst, factory).ok);
}

TEST_CASE("verify reports") {
  RunConfig c;
  c.n = 4;
  c.trials = 4;
  VerificationReport rep = verify_construction(c);
  CHECK(rep.pass);
  REQUIRE(item(rep, "node_formula"));
  CHECK(item(rep, "node_formula")->value == "N=98 formula=98");
  CHECK(item(rep, "update_budget")->pass);

  RunConfig e;
  e.family = "stpath";
  e.variant = "expander";
  e.n = 2;
  e.trials = 2;
  VerificationReport ex = verify_construction(e);
  CHECK(ex.pass);
  REQUIRE(item(ex, "expansion_certificate"));
  CHECK(item(ex, "expansion_certificate")->pass);
}

TEST_CASE("bench is deterministic") {
  RunConfig c;
  c.trials = 2;
  std::vector<BenchRow> a = bench(c, {2, 3, 4});
  std::vector<BenchRow> b = bench(c, {2, 3, 4});
  REQUIRE(a.size() == 3);
  CHECK(a[2].nodes == 98);
  CHECK(bench_csv(c, a) == bench_csv(c, b));
  for (const BenchRow& r : a) CHECK(r.mismatches == 0);
}

TEST_CASE("export formats agree") {
  for (std::string family : {"matching", "stpath", "densest"}) {
    RunConfig c;
    c.family = family;
    c.n = 3;
    std::ostringstream edges, dot, map;
    export_graph(c, "edgelist", edges);
    export_graph(c, "dot", dot);
    export_graph(c, "map", map);
    std::istringstream is(edges.str());
    DynamicGraph g = read_edge_list(is);
    std::ostringstream again;
    write_edge_list(again, g);
    CHECK(again.str() == edges.str());

    int labelled = 0;
    std::istringstream ds(dot.str());
    for (std::string line; std::getline(ds, line);)
      if (line.find("[label=") != std::string::npos) ++labelled;
    CHECK(labelled == g.node_count());

    std::set<std::string> names;
    std::set<int> ids;
    std::istringstream ms(map.str());
    std::string name;
    int id = 0;
    while (ms >> name >> id) {
      names.insert(name);
      ids.insert(id);
    }
    CHECK(static_cast<int>(names.size()) == g.node_count());
    CHECK(static_cast<int>(ids.size()) == g.node_count());
  }
  RunConfig c;
  std::ostringstream os;
  CHECK_THROWS(export_graph(c, "svg", os));
}

TEST_CASE("reports are byte-identical across runs") {
  for (std::string family : {"matching", "stpath"}) {
    RunConfig c;
    c.family = family;
    c.n = 4;
    DriverFactory f1, f2;
    std::vector<ReductionRun> a, b;
    for (int k = 0; k < 3; ++k) {
      a.push_back(run_config(c, trial_instance(c, k), f1));
      b.push_back(run_config(c, trial_instance(c, k), f2));
    }
    CHECK(run_json(a) == run_json(b));
    CHECK(run_csv(a) == run_csv(b));
    CHECK(run_json(a, true) != run_json(a));
    CHECK(verify_json({verify_construction(c)}) == verify_json({verify_construction(c)}));
  }
}

TEST_CASE("configuration errors") {
  RunConfig c;
  c.family = "nope";
  CHECK_THROWS(normalise(c));
  c.family = "st";
  CHECK(normalise(c).family == "stpath");
  c.variant = "decremental";
  CHECK_NOTHROW(normalise(c));
  CHECK(working_dimension(normalise(c), 3) == 4);
  RunConfig d;
  d.family = "densest";
  CHECK(working_dimension(normalise(d), 2) == 3);
  CHECK_THROWS(make_adapter("fast"));
}
