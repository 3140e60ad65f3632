#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "oumv/driver.hpp"
#include "oumv/expansion.hpp"
#include "oumv/graph.hpp"
#include "oumv/instance.hpp"
#include "oumv/layout.hpp"
#include "oumv/matching.hpp"
#include "oumv/powerlaw.hpp"

namespace oumv {

enum class MatchingVariant { constant, varying, expander, powerlaw };

struct MatchingLayout {
  MatchingVariant variant = MatchingVariant::constant;
  int n = 0;      // input dimension
  int dim = 0;    // working dimension: 2n for the expander variant
  int width = 0;  // L4[i,0..width] per subgadget
  double t = 0.0;
  Layout labels;
  Matching base;  // canonical matching; L2[0] and R2[0] stay free
  std::int64_t formula_nodes = 0;
  NodeId source = -1;  // L2[0]
  NodeId sink = -1;    // R2[0]
  // 1-based by vector index.
  std::vector<NodeId> l2, r2, l3_head, r3_head, l4_head, r4_head;
  ExpansionCertificate certificate;  // expander variant
  int overlay_edges = 0;
};

struct MatchingBuild {
  DynamicGraph graph;
  MatchingLayout layout;
};

MatchingBuild build_matching_const(int n, const BitMatrix& m);

// Subgadgets of 2l+2 nodes with l = ceil(n^((1-t)/(1+t))); cross edge (L4[i,j'], R4[j,i'])
// with i' = ceil(i n^(-2t/(t+1))), j' likewise.
MatchingBuild build_matching_varying(int n, double t, const BitMatrix& m);

// Works on the augmented instance of dimension 2n; degree-d expanders on L2, L4, R2, R4.
MatchingBuild build_matching_expander(int n, const BitMatrix& m, int d = 4, std::uint64_t seed = 1);

// Makes the u/v edges (L2[i], L3[i,0]) and (R2[j], R3[j,0]) match the pair. Returns the
// number of update ops.
int apply_pair_matching(DynamicGraph& g, const MatchingLayout& layout, const BitVector& u, const BitVector& v);

// Inserts the new pair's edges before deleting the old ones. Accepts vectors of dimension
// n (padded with zeros) or 2n.
int apply_pair_matching_expander(DynamicGraph& g, const MatchingLayout& layout, const BitVector& u,
                                 const BitVector& v);

// 1 iff the canonical matching has an augmenting path from L2[0] to R2[0].
bool decide_matching(const DynamicGraph& g, const MatchingLayout& layout);
// 1 iff the maximum matching is perfect.
bool decide_matching_exact(const DynamicGraph& g, const MatchingLayout& layout);

// Rewire (a,c),(b,d) -> (c,d). A pendant rewire pairs two degree-2 nodes a, b.
struct Rewire {
  NodeId a, b, c, d;
  bool pendant = false;
};

// Host half of the power-law construction; independent of M and reusable across instances.
struct MatchingPowerLawHost {
  int n = 0;
  double beta = 0.0;
  PreparedHost host;
  std::vector<Rewire> rewires;          // host ids; 2n regular ones, then 2 pendant ones
  std::vector<std::array<int, 3>> m;    // m[k][l]: host matching after k regular, l pendant rewires
};

std::shared_ptr<const MatchingPowerLawHost> build_matching_powerlaw_host(int n, double beta, std::uint64_t seed);

struct PowerLawMatchingState {
  DynamicGraph graph;
  MatchingLayout layout;  // reduction ids [0, reduction_nodes)
  std::shared_ptr<const MatchingPowerLawHost> host;
  Embedding embedding;    // statistics; embedding.graph is moved into `graph`
  int reduction_nodes = 0;
};

// Reduction graph of the power-law variant before any u/v edges.
MatchingBuild build_matching_powerlaw_reduction(int n, const BitMatrix& m);

PowerLawMatchingState build_matching_powerlaw(int n, double beta, std::uint64_t seed, const BitMatrix& m);
PowerLawMatchingState build_matching_powerlaw(std::shared_ptr<const MatchingPowerLawHost> host, const BitMatrix& m);

struct PowerLawPairOps {
  std::vector<UpdateOp> apply;
  int regular = 0;  // k
  int pendant = 0;  // l
};

// u/v edges plus compensating rewires; restores the degree histogram of the whole graph.
PowerLawPairOps apply_pair_powerlaw_matching(PowerLawMatchingState& state, const BitVector& u, const BitVector& v);
bool decode_powerlaw_matching(const PowerLawMatchingState& state, const PowerLawPairOps& ops, int matching_size);
void rollback(DynamicGraph& g, const std::vector<UpdateOp>& ops);

// Applies, decides with the exact solver, then rolls back.
bool apply_and_decide_powerlaw_matching(PowerLawMatchingState& state, const BitVector& u, const BitVector& v);

std::unique_ptr<ReductionDriver> make_matching_driver(MatchingVariant variant, const BitMatrix& m, double t = 0.0,
                                                      int d = 4, std::uint64_t seed = 1);
std::unique_ptr<ReductionDriver> make_matching_powerlaw_driver(std::shared_ptr<const MatchingPowerLawHost> host,
                                                               const BitMatrix& m);

}  // namespace oumv
