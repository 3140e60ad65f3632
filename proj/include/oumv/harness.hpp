#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oumv/adapter.hpp"
#include "oumv/driver.hpp"
#include "oumv/instance.hpp"
#include "oumv/matching_gadgets.hpp"

namespace oumv {

// One reduction cell: family, variant and their parameters.
struct RunConfig {
  std::string family = "matching";  // matching | stpath | densest
  std::string variant = "const";    // const | varying | approx | expander | powerlaw | decremental | incremental
  int n = 2;
  double t = 0.5;
  double delta = 1.0;
  double beta = 3.0;
  int d = 0;  // 0 keeps the variant default
  std::uint64_t seed = 1;
  int trials = 1;
  std::string adapter = "recompute";
  std::string mode = "mixed";  // instance generator; "mixed" cycles through every mode
};

// Normalises aliases ("st" -> "stpath") and rejects unknown family/variant pairs.
RunConfig normalise(RunConfig config);

// Dimension the reduction is built for: powers of two for the st families, at least 3
// for densest subgraph.
int working_dimension(const RunConfig& config, int n);

// Builds drivers; caches the instance-independent power-law matching host.
class DriverFactory {
 public:
  // `inst` must already have the working dimension.
  std::unique_ptr<ReductionDriver> make(const RunConfig& config, const OuMvInstance& inst);

 private:
  std::map<std::string, std::shared_ptr<const MatchingPowerLawHost>> hosts_;
};

struct RunOptions {
  bool check_degree = true;
  bool check_bipartite = false;
  bool check_expansion = false;  // lambda_2 after every update op
  bool verify_answers = false;   // adapter answer against the reference solver
  bool fail_fast = true;
};

struct PairRecord {
  int index = 0;
  int updates = 0;
  int queries = 0;
  std::string answer;
  std::int64_t value = 0;
  bool decoded = false;
  bool oracle = false;
};

struct ReductionRun {
  std::string family, variant, adapter;
  int n = 0;          // instance dimension
  int dimension = 0;  // working dimension
  std::uint64_t seed = 0;
  int nodes = 0;
  std::int64_t edges = 0;
  std::optional<std::int64_t> formula_nodes;
  std::string rule;
  std::vector<PairRecord> pairs;
  std::int64_t total_updates = 0;
  std::int64_t total_queries = 0;
  int max_updates_per_pair = 0;
  int mismatches = 0;
  int first_mismatch = -1;
  std::int64_t insertions = 0, deletions = 0;
  int max_degree = 0;         // over the initial graph and every update op
  bool bipartite = true;      // after every op, when checked
  double min_lambda2 = -1.0;  // over every op, when checked
  bool answers_verified = true;
  bool ok = true;
  std::string error;
  std::string repro;  // JSON: instance plus the update log prefix
  double wall_ms = 0.0, build_ms = 0.0, update_ms = 0.0, query_ms = 0.0;
};

// Processes every pair: updates through the adapter, one query, decode, oracle comparison.
ReductionRun run_reduction(ReductionDriver& driver, const OuMvInstance& inst, AlgorithmAdapter& adapter,
                           const RunOptions& options = {});

// Pads the instance, builds the driver and runs it.
ReductionRun run_config(const RunConfig& config, const OuMvInstance& inst, DriverFactory& factory,
                        const RunOptions& options = {});

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string value;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckItem> items;
  bool pass = true;

  void add(const std::string& name, bool pass, const std::string& value);
};

// Instance generator of trial k: cycles through uniform, planted_one, planted_zero, sparse.
OuMvInstance trial_instance(const RunConfig& config, int trial);

VerificationReport verify_construction(const RunConfig& config);

struct BenchRow {
  int n = 0;
  int nodes = 0;
  std::int64_t edges = 0;
  std::int64_t updates = 0;
  std::int64_t queries = 0;
  int mismatches = 0;
  double build_ms = 0.0, update_ms = 0.0, query_ms = 0.0;
};

std::vector<BenchRow> bench(const RunConfig& config, const std::vector<int>& n_list);

// Builds the reduction for M of a seeded instance and writes "dot", "edgelist" or "map".
void export_graph(const RunConfig& config, const std::string& format, std::ostream& os);

// Reports. Timing columns are written only when `timing` is set, so default reports
// are byte-identical across runs with the same seeds.
std::string run_json(const std::vector<ReductionRun>& runs, bool timing = false);
std::string run_csv(const std::vector<ReductionRun>& runs, bool timing = false);
std::string verify_json(const std::vector<VerificationReport>& reports);
std::string verify_csv(const std::vector<VerificationReport>& reports);
std::string bench_csv(const RunConfig& config, const std::vector<BenchRow>& rows, bool timing = false);
// Round-by-round rows: round, updates, answer, decoded bit, oracle bit.
std::string rounds_csv(const ReductionRun& run);

}  // namespace oumv
