#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "oumv/driver.hpp"
#include "oumv/expansion.hpp"
#include "oumv/graph.hpp"
#include "oumv/instance.hpp"
#include "oumv/layout.hpp"
#include "oumv/powerlaw.hpp"

namespace oumv {

enum class StVariant { constant, approx, varying, expander, powerlaw };

struct ApproxParams {
  double delta = 1.0;
  int alpha = 8;  // ceil(12/delta - 4)

  static ApproxParams from_delta(double delta);
};

bool is_power_of_two(int n);
int log2_exact(int n);

// Forest roots and leaves by tree index, 1-based. For the triple-forest variants the
// trees of one side are split into U, M and L groups of n trees each.
struct Forest {
  std::vector<NodeId> root;                 // [1..trees]
  std::vector<std::vector<NodeId>> leaf;    // [1..trees][1..leaves]
};

struct ForestLayout {
  StVariant variant = StVariant::constant;
  int n = 0;
  int log_n = 0;
  int depth = 0;  // depth of the L3/L4 forest
  double t = 0.0;
  ApproxParams approx;
  Layout labels;  // layer function included
  NodeId s = -1, t_node = -1;
  std::vector<NodeId> l2, r2;  // [1..n]
  Forest lu, lm, ll, ru, rm, rl;  // lm/rm are the only forests of the plain variants
  int threshold = 0;              // bit = 1 iff dist <= threshold
  int t1 = 0, t0 = 0;             // approx: measured one and zero distances
  double cutoff = 0.0;            // approx: midpoint of [t1, t0]
  ExpansionCertificate certificate;
  std::vector<NodeId> dummies;
  std::int64_t formula_nodes = 0;
  int target_layer = 0;
};

struct StBuild {
  DynamicGraph graph;
  ForestLayout layout;
};

StBuild build_st_const(int n, const BitMatrix& m);
// Paths of alpha*log n interior nodes replace the cross edges; thresholds measured on probes.
StBuild build_st_approx(int n, double delta, const BitMatrix& m);
StBuild build_st_varying(int n, double t, const BitMatrix& m);
StBuild build_st_expander(int n, const BitMatrix& m, int d = 4, std::uint64_t seed = 1);

// Distances of the approx construction on planted probes: {T1, T0}.
std::pair<int, int> measure_approx_thresholds(int n, double delta);

// Delete-then-insert update of the (L2[i], L3[i]) and (R2[j], R3[j]) edges.
int apply_pair_st(DynamicGraph& g, const ForestLayout& layout, const BitVector& u, const BitVector& v);
// Insert-then-delete update of the (L2[i], LM[i] or LU[i]) and (R2[j], RM[j] or RU[j]) edges.
int apply_pair_st_expander(DynamicGraph& g, const ForestLayout& layout, const BitVector& u, const BitVector& v);

bool decode_st(const ForestLayout& layout, int distance);
bool decide_st(const DynamicGraph& g, const ForestLayout& layout);

struct StPowerLawState {
  DynamicGraph graph;  // reduction ids first, then the host
  ForestLayout layout;
  Embedding embedding;  // statistics; embedding.graph is moved into `graph`
  int reduction_nodes = 0;
};

StBuild build_st_powerlaw_reduction(int n, const BitMatrix& m);
StPowerLawState build_st_powerlaw(int n, double beta, std::uint64_t seed, const BitMatrix& m);

std::unique_ptr<ReductionDriver> make_st_driver(StVariant variant, const BitMatrix& m, double param = 0.0, int d = 4,
                                                std::uint64_t seed = 1);

}  // namespace oumv
