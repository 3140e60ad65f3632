#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oumv/harness.hpp"

using namespace oumv;

namespace {

void emit(const std::string& out, const std::string& json, const std::string& csv) {
  if (out.empty()) {
    std::cout << json;
    return;
  }
  std::ofstream(out + ".json") << json;
  std::ofstream(out + ".csv") << csv;
}

std::vector<OuMvInstance> instances(const RunConfig& c, const std::string& file) {
  std::vector<OuMvInstance> out;
  if (!file.empty()) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot open instance file " + file);
    out.push_back(read_instance(is));
    return out;
  }
  for (int k = 0; k < c.trials; ++k) out.push_back(trial_instance(c, k));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic graph reductions from online matrix-vector multiplication"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  RunConfig c;
  std::vector<int> ns{2};
  std::string out, format = "dot", instance_file;
  bool timing = false;
  app.add_option("--family", c.family, "matching | stpath | densest")->capture_default_str();
  app.add_option("--variant", c.variant, "const | varying | approx | expander | powerlaw | decremental | incremental")
      ->capture_default_str();
  app.add_option("--n", ns, "dimension; bench accepts a comma-separated list")->delimiter(',')->capture_default_str();
  app.add_option("--t", c.t, "degree exponent of the varying variants")->capture_default_str();
  app.add_option("--delta", c.delta, "approximation slack")->capture_default_str();
  app.add_option("--beta", c.beta, "power-law exponent")->capture_default_str();
  app.add_option("--d", c.d, "expander or gadget degree; 0 keeps the default")->capture_default_str();
  app.add_option("--seed", c.seed, "seed")->capture_default_str();
  app.add_option("--trials", c.trials, "number of instances")->capture_default_str();
  app.add_option("--adapter", c.adapter, "recompute | recompute-bfs | recompute-matching | recompute-densest | broken-bfs")
      ->capture_default_str();
  app.add_option("--mode", c.mode, "mixed | uniform | planted_one | planted_zero | sparse")->capture_default_str();
  app.add_option("--out", out, "output prefix; writes PREFIX.json and PREFIX.csv");
  app.add_option("--format", format, "export format: dot | edgelist | map")->capture_default_str();
  app.add_option("--instance", instance_file, "instance file for run");
  app.add_flag("--timing", timing, "add wall-time columns (reports stop being byte-identical)");

  CLI::App* build = app.add_subcommand("build", "build a reduction and print its statistics");
  CLI::App* run = app.add_subcommand("run", "run reductions against an adapter");
  CLI::App* verify = app.add_subcommand("verify", "run structural and decoding checks");
  CLI::App* bench_cmd = app.add_subcommand("bench", "count updates and queries per n");
  CLI::App* export_cmd = app.add_subcommand("export", "write the reduction graph");

  CLI11_PARSE(app, argc, argv);

  try {
    c.n = ns.front();
    c = normalise(c);
    if (build->parsed()) {
      DriverFactory factory;
      OuMvInstance inst = trial_instance(c, 0);
      int dim = working_dimension(c, c.n);
      auto driver = factory.make(c, dim == c.n ? inst : pad_instance(inst, dim));
      DegreeStats st = degree_stats(driver->graph());
      nlohmann::ordered_json j;
      j["family"] = driver->family();
      j["variant"] = driver->variant();
      j["n"] = c.n;
      j["dimension"] = dim;
      j["nodes"] = driver->graph().node_count();
      j["edges"] = driver->graph().edge_count();
      j["max_degree"] = st.max_degree;
      if (auto f = driver->formula_nodes()) j["formula_nodes"] = *f;
      j["rule"] = driver->rule();
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (run->parsed()) {
      DriverFactory factory;
      RunOptions opt;
      opt.verify_answers = true;
      std::vector<ReductionRun> runs;
      for (const OuMvInstance& inst : instances(c, instance_file)) runs.push_back(run_config(c, inst, factory, opt));
      bool ok = true;
      for (const ReductionRun& r : runs) ok = ok && r.ok;
      emit(out, run_json(runs, timing), run_csv(runs, timing));
      if (!out.empty() && (c.variant == "decremental" || c.variant == "incremental"))
        for (std::size_t k = 0; k < runs.size(); ++k)
          std::ofstream(out + ".rounds" + std::to_string(k + 1) + ".csv") << rounds_csv(runs[k]);
      return ok ? 0 : 1;
    }
    if (verify->parsed()) {
      VerificationReport rep = verify_construction(c);
      emit(out, verify_json({rep}), verify_csv({rep}));
      if (!out.empty())
        for (const CheckItem& item : rep.items)
          std::cout << (item.pass ? "ok   " : "FAIL ") << item.name << "  " << item.value << "\n";
      return rep.pass ? 0 : 1;
    }
    if (bench_cmd->parsed()) {
      std::vector<BenchRow> rows = bench(c, ns);
      std::string csv = bench_csv(c, rows, timing);
      if (out.empty())
        std::cout << csv;
      else
        std::ofstream(out + ".csv") << csv;
      for (const BenchRow& r : rows)
        if (r.mismatches) return 1;
      return 0;
    }
    if (export_cmd->parsed()) {
      if (out.empty()) {
        export_graph(c, format, std::cout);
      } else {
        std::ofstream os(out);
        export_graph(c, format, os);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
