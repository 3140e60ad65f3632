#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oumv/graph.hpp"

namespace oumv {

struct PowerLawParams {
  enum class Variant { exact, beta_varying, additive, multiplicative };
  double alpha = 0.0;
  double beta = 3.0;
  Variant variant = Variant::exact;
  double beta1 = 0.0, beta2 = 0.0;  // beta_varying
  double c = 0.0;                   // additive
  double epsilon = 0.0;             // multiplicative

  void validate() const;
};

double zeta(double s);

// floor(e^alpha / d^beta).
std::int64_t power_law_count(double alpha, double beta, int d);
int max_realisable_degree(double alpha, double beta);

struct DegreeCheck {
  int degree;
  std::int64_t observed;
  double lower;
  double upper;
  bool ok;
};

struct PowerLawReport {
  bool pass = true;
  std::vector<DegreeCheck> degrees;
  std::int64_t deviating_nodes = 0;  // nodes that would have to change degree class
  int deviating_classes = 0;         // classes whose count differs from floor(e^a/d^b)
};

// Degree 0 is ignored. For additive(c) only realisable degrees are checked.
PowerLawReport check_power_law(const std::map<int, std::int64_t>& histogram, const PowerLawParams& params);

// Smallest alpha with floor(e^alpha / d^beta) >= need[d] for every d.
double alpha_for_counts(const std::map<int, std::int64_t>& need, double beta);

struct PowerLawHost {
  DynamicGraph graph;
  double alpha = 0.0;
  double beta = 0.0;
  std::map<int, std::int64_t> targets;
  int parity_fix = 0;  // degree-1 nodes dropped to make the degree sum even
};

// Degree sequence floor(e^alpha/d^beta), realised by Havel-Hakimi with seeded tie-breaking.
PowerLawHost generate_power_law_host(double alpha, double beta, std::uint64_t seed);

struct MakeSpaceResult {
  bool ok = false;
  std::string failure;
  std::map<int, std::vector<NodeId>> freed;  // isolated host nodes per original degree class
  int deviations = 0;                        // host nodes left one degree off
};

// Isolates need[d] host nodes of each degree class d in {1,2,3} while preserving the
// degrees of every other host node, by the rewiring procedures for pendant, degree-2
// and degree-3 nodes.
MakeSpaceResult make_space(DynamicGraph& host, const std::map<int, std::int64_t>& need, std::mt19937_64& rng);

// A host with space made for a reduction: the freed nodes are removed and the rest renumbered.
struct PreparedHost {
  DynamicGraph graph;
  std::map<int, std::int64_t> need;
  double alpha = 0.0;
  double beta = 0.0;
  std::map<int, std::int64_t> targets;
  int parity_fix = 0;
  int deviations = 0;
  int attempts = 0;
};

// Builds a host in which every class d has at least 2 need[d] + slack nodes and frees
// need[d] nodes per class. The host grows by 25% per failed attempt.
PreparedHost prepare_host(const std::map<int, std::int64_t>& need, double beta, int slack, std::uint64_t seed,
                          int max_attempts = 12);

struct Embedding {
  DynamicGraph graph;       // ids [0, reduction_nodes) are the reduction graph
  int reduction_nodes = 0;
  int host_nodes = 0;       // remaining host nodes after embedding
  double alpha = 0.0;
  double beta = 0.0;
  std::map<int, std::int64_t> targets;
  int parity_fix = 0;
  int deviations = 0;
  int attempts = 0;
};

std::map<int, std::int64_t> degree_need(const DynamicGraph& reduction);

// Places the reduction on the freed nodes: reduction ids first, host ids shifted after them.
Embedding embed(const DynamicGraph& reduction, const PreparedHost& host);

Embedding embed_in_power_law_host(const DynamicGraph& reduction, double beta, int slack, std::uint64_t seed,
                                  int max_attempts = 12);

}  // namespace oumv
