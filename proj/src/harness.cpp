#include "oumv/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "oumv/densest_gadgets.hpp"
#include "oumv/expansion.hpp"
#include "oumv/partial_gadgets.hpp"
#include "oumv/powerlaw.hpp"
#include "oumv/stpath_gadgets.hpp"

namespace oumv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

bool one_of(const std::string& x, std::initializer_list<const char*> options) {
  for (const char* o : options)
    if (x == o) return true;
  return false;
}

int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::mutex factory_mutex;

}  // namespace

RunConfig normalise(RunConfig c) {
  if (one_of(c.family, {"st", "st-path", "stpath"})) c.family = "stpath";
  if (one_of(c.family, {"dense", "densest"})) c.family = "densest";
  if (c.variant == "constant") c.variant = "const";
  if (c.variant == "power-law") c.variant = "powerlaw";
  bool ok = false;
  if (c.family == "matching")
    ok = one_of(c.variant, {"const", "varying", "expander", "powerlaw", "decremental", "incremental"});
  else if (c.family == "stpath")
    ok = one_of(c.variant, {"const", "approx", "varying", "expander", "powerlaw", "decremental", "incremental"});
  else if (c.family == "densest")
    ok = one_of(c.variant, {"const", "expander", "powerlaw"});
  if (!ok) throw std::invalid_argument("unknown family/variant: " + c.family + "/" + c.variant);
  if (c.n < 1) throw std::invalid_argument("n must be positive");
  if (c.trials < 1) throw std::invalid_argument("trials must be positive");
  return c;
}

int working_dimension(const RunConfig& c, int n) {
  if (c.family == "stpath") return std::max(2, next_power_of_two(n));
  if (c.family == "densest") return std::max(3, n);
  return n;
}

std::unique_ptr<ReductionDriver> DriverFactory::make(const RunConfig& c, const OuMvInstance& inst) {
  const BitMatrix& m = inst.matrix;
  int n = inst.n();
  if (c.variant == "decremental" || c.variant == "incremental") {
    PartialFamily f = c.family == "stpath" ? PartialFamily::stpath : PartialFamily::matching;
    return c.variant == "decremental" ? make_decremental_driver(f, m) : make_incremental_driver(f, inst);
  }
  if (c.family == "matching") {
    if (c.variant == "powerlaw") {
      std::string key = std::to_string(n) + "/" + fmt(c.beta) + "/" + std::to_string(c.seed);
      std::shared_ptr<const MatchingPowerLawHost> host;
      {
        std::lock_guard<std::mutex> lock(factory_mutex);
        auto it = hosts_.find(key);
        if (it != hosts_.end()) host = it->second;
      }
      if (!host) {
        host = build_matching_powerlaw_host(n, c.beta, c.seed);
        std::lock_guard<std::mutex> lock(factory_mutex);
        hosts_.emplace(key, host);
      }
      return make_matching_powerlaw_driver(host, m);
    }
    MatchingVariant v = c.variant == "const"     ? MatchingVariant::constant
                        : c.variant == "varying" ? MatchingVariant::varying
                                                 : MatchingVariant::expander;
    return make_matching_driver(v, m, c.t, c.d ? c.d : 4, c.seed);
  }
  if (c.family == "stpath") {
    if (c.variant == "const") return make_st_driver(StVariant::constant, m);
    if (c.variant == "approx") return make_st_driver(StVariant::approx, m, c.delta);
    if (c.variant == "varying") return make_st_driver(StVariant::varying, m, c.t);
    if (c.variant == "expander") return make_st_driver(StVariant::expander, m, 0.0, c.d ? c.d : 4, c.seed);
    return make_st_driver(StVariant::powerlaw, m, c.beta, 4, c.seed);
  }
  DenseVariant v = c.variant == "const"      ? DenseVariant::constant
                   : c.variant == "expander" ? DenseVariant::expander
                                             : DenseVariant::powerlaw;
  return make_dense_driver(v, m, c.beta, c.d, c.seed);
}

namespace {

std::string repro_json(const ReductionDriver& driver, const OuMvInstance& inst, int failing,
                       const std::vector<UpdateOp>& history) {
  nlohmann::ordered_json j;
  j["family"] = driver.family();
  j["variant"] = driver.variant();
  j["n"] = inst.n();
  j["failing_pair"] = failing;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 1; i <= inst.n(); ++i) rows.push_back(inst.matrix.row_string(i));
  j["matrix"] = rows;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (int k = 0; k <= failing && k < static_cast<int>(inst.pairs.size()); ++k)
    pairs.push_back({{"u", inst.pairs[k].u.to_string()},
                     {"v", inst.pairs[k].v.to_string()},
                     {"truth", static_cast<bool>(inst.truth[k])}});
  j["pairs"] = pairs;
  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  for (const UpdateOp& op : history) ops.push_back(to_string(op));
  j["updates"] = ops;
  return j.dump();
}

}  // namespace

ReductionRun run_reduction(ReductionDriver& driver, const OuMvInstance& inst, AlgorithmAdapter& adapter,
                           const RunOptions& options) {
  Clock::time_point start = Clock::now();
  ReductionRun run;
  run.family = driver.family();
  run.variant = driver.variant();
  run.adapter = adapter.name();
  run.n = inst.n();
  run.dimension = driver.dimension();
  run.rule = driver.rule();
  run.formula_nodes = driver.formula_nodes();
  const DynamicGraph& g0 = driver.graph();
  run.nodes = g0.node_count();
  run.edges = g0.edge_count();
  if (inst.n() != driver.dimension())
    throw std::invalid_argument("instance dimension " + std::to_string(inst.n()) + " differs from the driver's " +
                                std::to_string(driver.dimension()));

  adapter.init(g0, driver.base_matching());
  run.max_degree = degree_stats(g0).max_degree;
  if (options.check_bipartite) run.bipartite = is_bipartite(g0).bipartite;
  if (options.check_expansion) run.min_lambda2 = laplacian_lambda2(g0);

  std::vector<UpdateOp> history;
  int pair_index = -1;
  auto feed = [&](const std::vector<UpdateOp>& ops) {
    Clock::time_point t = Clock::now();
    for (const UpdateOp& op : ops) {
      adapter.apply(op);
      history.push_back(op);
      if (op.kind == UpdateOp::Kind::insert)
        ++run.insertions;
      else
        ++run.deletions;
      const DynamicGraph& g = adapter.graph();
      if (options.check_degree) run.max_degree = std::max({run.max_degree, g.degree(op.a), g.degree(op.b)});
      if (options.check_bipartite && run.bipartite && !is_bipartite(g).bipartite) run.bipartite = false;
      if (options.check_expansion) run.min_lambda2 = std::min(run.min_lambda2, laplacian_lambda2(g));
    }
    run.update_ms += ms_since(t);
    run.total_updates += static_cast<std::int64_t>(ops.size());
    if (pair_index >= 0) run.pairs[static_cast<std::size_t>(pair_index)].updates += static_cast<int>(ops.size());
  };

  try {
    for (std::size_t k = 0; k < inst.pairs.size(); ++k) {
      const VectorPair& p = inst.pairs[k];
      run.pairs.push_back({static_cast<int>(k + 1), 0, 0, "", 0, false, static_cast<bool>(inst.truth[k])});
      pair_index = static_cast<int>(k);
      feed(driver.begin_pair(p.u, p.v));

      Clock::time_point t = Clock::now();
      Query q = driver.query();
      Answer a = adapter.query(q);
      run.query_ms += ms_since(t);
      PairRecord& rec = run.pairs.back();
      ++rec.queries;
      ++run.total_queries;
      rec.answer = a.to_string(q.kind);
      rec.value = a.value;
      if (options.verify_answers && !same_answer(q.kind, a, reference_answer(adapter.graph(), q))) {
        run.answers_verified = false;
        run.ok = false;
      }
      rec.decoded = driver.decode(a);
      bool mismatch = rec.decoded != rec.oracle;

      feed(driver.end_pair());
      run.max_updates_per_pair = std::max(run.max_updates_per_pair, rec.updates);
      if (mismatch) {
        ++run.mismatches;
        run.ok = false;
        if (run.first_mismatch < 0) {
          run.first_mismatch = static_cast<int>(k + 1);
          run.repro = repro_json(driver, inst, static_cast<int>(k), history);
        }
        if (options.fail_fast) break;
      }
    }
    if (!adapter.graph().same_edges(driver.graph())) {
      run.ok = false;
      run.error = "adapter graph diverged from the reduction graph";
    }
  } catch (const std::exception& e) {
    run.ok = false;
    run.error = "pair " + std::to_string(pair_index + 1) + " after " + std::to_string(history.size()) +
                " updates: " + e.what();
    run.repro = repro_json(driver, inst, pair_index, history);
  }
  run.wall_ms = ms_since(start);
  return run;
}

ReductionRun run_config(const RunConfig& config, const OuMvInstance& inst, DriverFactory& factory,
                        const RunOptions& options) {
  RunConfig c = normalise(config);
  int dim = working_dimension(c, inst.n());
  OuMvInstance padded = dim == inst.n() ? inst : pad_instance(inst, dim);
  Clock::time_point t = Clock::now();
  std::unique_ptr<ReductionDriver> driver = factory.make(c, padded);
  double build_ms = ms_since(t);
  std::unique_ptr<AlgorithmAdapter> adapter = make_adapter(c.adapter);
  ReductionRun run = run_reduction(*driver, padded, *adapter, options);
  run.n = inst.n();
  run.seed = c.seed;
  run.build_ms = build_ms;
  return run;
}

void VerificationReport::add(const std::string& name, bool ok, const std::string& value) {
  items.push_back({name, ok, value});
  pass = pass && ok;
}

OuMvInstance trial_instance(const RunConfig& config, int trial) {
  static const InstanceMode cycle[] = {InstanceMode::uniform, InstanceMode::planted_one, InstanceMode::planted_zero,
                                       InstanceMode::sparse};
  InstanceMode mode = config.mode == "mixed" ? cycle[trial % 4] : parse_instance_mode(config.mode);
  return generate_instance(config.n, mode, config.seed * 1000003ULL + static_cast<std::uint64_t>(trial));
}

namespace {

// Runs f(k) for k in [0, count) on up to hardware_concurrency threads.
void parallel_for(int count, const std::function<void(int)>& f) {
  int workers = std::max(1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  if (workers == 1) {
    for (int k = 0; k < count; ++k) f(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int k = next++; k < count; k = next++) f(k);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::optional<std::int64_t> closed_formula(const RunConfig& c, int n) {
  std::int64_t x = n;
  if (c.family == "matching" && c.variant == "const") return 4 * x * x + 8 * x + 2;
  if (c.family == "matching" && c.variant == "expander") return 16 * x * x + 16 * x + 2;
  if (c.family == "stpath" && c.variant == "const") return 4 * x * x + 2 * x - 2;
  if (c.family == "densest" && c.variant == "const") return x * x * x * x + 2 * x * x;
  if (c.family == "densest" && c.variant == "expander") return 2 * x * x * x * x + 4 * x * x;
  return std::nullopt;
}

std::optional<int> update_budget(const RunConfig& c, int n) {
  if (c.family == "densest") return c.variant == "powerlaw" ? std::nullopt : std::optional<int>(8 * n);
  if (c.variant == "const") return 6 * n;
  if (c.variant == "expander") return 10 * n;
  return std::nullopt;
}

PowerLawReport additive_check(const DynamicGraph& g, double alpha, double beta) {
  PowerLawParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.variant = PowerLawParams::Variant::additive;
  p.c = 1.0;
  return check_power_law(degree_stats(g).histogram, p);
}

std::string histogram_string(const std::map<int, std::int64_t>& h) {
  std::string out;
  for (const auto& [d, c] : h) out += (out.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(c);
  return out;
}

void power_law_items(const RunConfig& c, const OuMvInstance& inst, VerificationReport& rep) {
  int n = inst.n();
  if (c.family == "matching") {
    PowerLawMatchingState s = build_matching_powerlaw(n, c.beta, c.seed, inst.matrix);
    PowerLawReport r = additive_check(s.graph, s.embedding.alpha, c.beta);
    rep.add("power_law_additive", r.deviating_nodes <= 4,
            "deviating_nodes=" + std::to_string(r.deviating_nodes) + " alpha=" + fmt(s.embedding.alpha));
  } else if (c.family == "stpath") {
    StPowerLawState s = build_st_powerlaw(n, c.beta, c.seed, inst.matrix);
    PowerLawReport r = additive_check(s.graph, s.embedding.alpha, c.beta);
    rep.add("power_law_additive", r.deviating_nodes <= 4,
            "deviating_nodes=" + std::to_string(r.deviating_nodes) + " alpha=" + fmt(s.embedding.alpha));
  } else {
    DenseBuild b = build_dense_powerlaw(n, c.beta, inst.matrix);
    PowerLawReport r = additive_check(b.graph, b.layout.alpha, c.beta);
    rep.add("power_law_additive", r.deviating_nodes <= 4,
            "deviating_nodes=" + std::to_string(r.deviating_nodes) + " alpha=" + fmt(b.layout.alpha));
    std::map<int, std::int64_t> core;
    for (NodeId v = 0; v < b.layout.core_nodes; ++v) ++core[b.graph.degree(v)];
    std::int64_t x = n;
    int d = b.layout.d;
    std::map<int, std::int64_t> expect{{2, 4 * x * x + 8 * x}, {2 * d, x * x * x * x}, {2 * d + 1, 2 * x * x}};
    rep.add("core_histogram", core == expect, "observed=" + histogram_string(core) + " expected=" +
                                                  histogram_string(expect));
  }
}

}  // namespace

VerificationReport verify_construction(const RunConfig& config) {
  VerificationReport rep;
  RunConfig c = normalise(config);
  rep.config = c;
  int dim = working_dimension(c, c.n);

  RunOptions opt;
  opt.verify_answers = true;
  opt.fail_fast = true;
  bool plain = c.family != "densest" && one_of(c.variant, {"const", "expander", "varying", "approx"});
  opt.check_bipartite = plain;
  opt.check_expansion = c.variant == "expander" && c.family != "densest" && dim <= 4;

  DriverFactory factory;
  std::vector<OuMvInstance> instances;
  for (int k = 0; k < c.trials; ++k) instances.push_back(trial_instance(c, k));
  std::vector<ReductionRun> runs(instances.size());
  if (c.family == "matching" && c.variant == "powerlaw")
    factory.make(c, instances[0]);  // builds the shared host once
  parallel_for(c.trials, [&](int k) { runs[static_cast<std::size_t>(k)] = run_config(c, instances[k], factory, opt); });

  int mismatches = 0, errors = 0, pairs = 0, max_updates = 0, max_degree = 0;
  bool one_query = true, bipartite = true, verified = true, monotone = true;
  double min_lambda2 = -1.0;
  std::string first_error;
  for (const ReductionRun& r : runs) {
    mismatches += r.mismatches;
    if (!r.error.empty()) {
      ++errors;
      if (first_error.empty()) first_error = r.error;
    }
    pairs += static_cast<int>(r.pairs.size());
    max_updates = std::max(max_updates, r.max_updates_per_pair);
    max_degree = std::max(max_degree, r.max_degree);
    bipartite = bipartite && r.bipartite;
    verified = verified && r.answers_verified;
    for (const PairRecord& p : r.pairs) one_query = one_query && p.queries == 1;
    if (opt.check_expansion) min_lambda2 = min_lambda2 < 0 ? r.min_lambda2 : std::min(min_lambda2, r.min_lambda2);
    if (c.variant == "decremental") monotone = monotone && r.insertions == 0;
    if (c.variant == "incremental") monotone = monotone && r.deletions == 0;
  }
  const ReductionRun& first = runs.front();

  rep.add("oracle_equivalence", mismatches == 0 && errors == 0,
          "pairs=" + std::to_string(pairs) + " mismatches=" + std::to_string(mismatches) +
              (first_error.empty() ? "" : " error=" + first_error));
  rep.add("reference_answers", verified, verified ? "adapter equals reference" : "adapter differs from reference");
  rep.add("one_query_per_pair", one_query, "pairs=" + std::to_string(pairs));

  std::optional<int> budget = update_budget(c, dim);
  std::string per_n = "max=" + std::to_string(max_updates) + " c=" + fmt(static_cast<double>(max_updates) / dim);
  if (budget)
    rep.add("update_budget", max_updates <= *budget, per_n + " bound=" + std::to_string(*budget));
  else
    rep.add("update_budget", true, per_n);

  if (std::optional<std::int64_t> f = closed_formula(c, dim))
    rep.add("node_formula", first.nodes == *f, "N=" + std::to_string(first.nodes) + " formula=" + std::to_string(*f));
  else if (first.formula_nodes)
    rep.add("node_formula", first.nodes == *first.formula_nodes,
            "N=" + std::to_string(first.nodes) + " formula=" + std::to_string(*first.formula_nodes));
  else
    rep.add("node_count", true, "N=" + std::to_string(first.nodes));

  if (c.variant == "const" && c.family != "densest")
    rep.add("max_degree", max_degree <= 3, "max=" + std::to_string(max_degree) + " bound=3");
  else if (c.variant == "const")
    rep.add("max_degree", max_degree <= 7, "max=" + std::to_string(max_degree) + " bound=7");
  else if (c.variant == "varying") {
    double scale = std::pow(static_cast<double>(dim), 2.0 * c.t / (c.t + 1.0));
    rep.add("max_degree", true, "max=" + std::to_string(max_degree) + " fitted_c=" + fmt(max_degree / scale));
  } else
    rep.add("max_degree", true, "max=" + std::to_string(max_degree));

  if (c.variant == "const" && c.family != "densest") rep.add("bipartite", bipartite, bipartite ? "after every op" : "violated");

  if (c.family == "matching" && one_of(c.variant, {"const", "varying", "expander"})) {
    bool ok = true;
    for (const ReductionRun& r : runs)
      for (const PairRecord& p : r.pairs) ok = ok && (2 * p.value == r.nodes || 2 * p.value == r.nodes - 2);
    rep.add("matching_dichotomy", ok, ok ? "size in {N/2-1, N/2}" : "size outside {N/2-1, N/2}");
  }

  if (c.family == "stpath" && one_of(c.variant, {"const", "expander"})) {
    std::int64_t floor = 4LL * log2_exact(dim) + 3;
    bool ok = true;
    for (const ReductionRun& r : runs)
      for (const PairRecord& p : r.pairs)
        ok = ok && (p.value == kInfinity || p.value >= floor) && ((p.value == floor) == p.oracle);
    rep.add("distance_floor", ok, "floor=" + std::to_string(floor));
  }

  if (c.family == "stpath" && c.variant == "approx") {
    auto [t1, t0] = measure_approx_thresholds(dim, c.delta);
    double ratio = static_cast<double>(t0) / t1;
    rep.add("approx_gap", ratio >= 3.0 - c.delta,
            "T1=" + std::to_string(t1) + " T0=" + std::to_string(t0) + " ratio=" + fmt(ratio));
  }

  if (c.variant == "expander") {
    if (opt.check_expansion)
      rep.add("expansion_certificate", min_lambda2 / 2 > 0, "min_lambda2/2=" + fmt(min_lambda2 / 2));
    else {
      double l2 = laplacian_lambda2(factory.make(c, pad_instance(instances[0], dim))->graph());
      rep.add("expansion_certificate", l2 / 2 > 0, "initial lambda2/2=" + fmt(l2 / 2));
    }
  }

  if (c.variant == "decremental" || c.variant == "incremental")
    rep.add("monotone_stream", monotone, c.variant == "decremental" ? "deletions only" : "insertions only");

  if (c.variant == "powerlaw") power_law_items(c, pad_instance(instances[0], dim), rep);
  return rep;
}

std::vector<BenchRow> bench(const RunConfig& config, const std::vector<int>& n_list) {
  RunConfig c = normalise(config);
  std::vector<BenchRow> rows;
  for (int n : n_list) {
    c.n = n;
    DriverFactory factory;
    RunOptions opt;
    opt.check_degree = false;
    opt.fail_fast = false;
    ReductionRun r = run_config(c, trial_instance(c, 0), factory, opt);
    if (!r.error.empty()) throw std::runtime_error("bench n=" + std::to_string(n) + ": " + r.error);
    rows.push_back({n, r.nodes, r.edges, r.total_updates, r.total_queries, r.mismatches, r.build_ms, r.update_ms,
                    r.query_ms});
  }
  return rows;
}

void export_graph(const RunConfig& config, const std::string& format, std::ostream& os) {
  RunConfig c = normalise(config);
  OuMvInstance inst = trial_instance(c, 0);
  int dim = working_dimension(c, c.n);
  DriverFactory factory;
  std::unique_ptr<ReductionDriver> driver = factory.make(c, dim == c.n ? inst : pad_instance(inst, dim));
  if (format == "dot")
    write_dot(os, driver->graph(), driver->layout().dot_style());
  else if (format == "edgelist")
    write_edge_list(os, driver->graph());
  else if (format == "map")
    driver->layout().write_map(os);
  else
    throw std::invalid_argument("unknown export format: " + format);
}

}  // namespace oumv
