#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "oumv/density.hpp"
#include "oumv/driver.hpp"
#include "oumv/expansion.hpp"
#include "oumv/graph.hpp"
#include "oumv/instance.hpp"
#include "oumv/layout.hpp"

namespace oumv {

// A 2d-regular graph on `nodes` nodes as a union of d circulant cycles.
struct CirculantGadget {
  int nodes = 0;
  int d = 0;
  std::vector<int> strides;
  std::vector<Edge> edges;  // local ids [0, nodes)
  std::int64_t min_cut = 0;
};

// Prefers strides coprime to `nodes` (Hamiltonian cycles); falls back to other strides
// when too few exist. Resamples until the union is simple and 6-edge-connected.
// Requires nodes >= 2d + 1.
CirculantGadget build_vector_gadget(int nodes, int d, std::uint64_t seed = 0);

// The vector gadget with the edge (0, strides[0]) removed; its endpoints are the
// designated nodes 0 and 1 after relabelling.
CirculantGadget build_matrix_gadget(int nodes, int d, std::uint64_t seed = 0);

enum class DenseVariant { constant, expander, powerlaw };

struct DenseLayout {
  DenseVariant variant = DenseVariant::constant;
  int n = 0;
  int d = 3;
  int d_prime = 0;       // expander variant
  int vector_nodes = 0;  // max(n, 2d+1)
  int matrix_nodes = 0;  // max(n^2, 2d+1)
  Layout labels;
  std::vector<std::vector<NodeId>> u, v;                // [1..n][1..vector_nodes]
  std::vector<std::vector<std::vector<NodeId>>> m;      // [1..n][1..n][0..matrix_nodes-1]
  std::vector<std::array<Edge, 2>> u_removal, v_removal;  // [1..n]; node-disjoint
  std::vector<std::array<NodeId, 4>> u_cycle, v_cycle;    // power-law: C[a..d] by removal endpoint
  std::vector<std::vector<std::vector<Edge>>> m_removed;  // edges removed for M_ij = 0
  CirculantGadget vector_gadget, matrix_gadget;
  Rational threshold{0};  // d + 1/(matrix_nodes + 2 vector_nodes)
  int core_nodes = 0;     // reduction nodes (G0, plus cycles in the power-law variant)
  std::int64_t formula_nodes = 0;
  ExpansionCertificate certificate;
  double alpha = 0.0, beta = 0.0;  // power-law host
  std::map<int, std::int64_t> targets;
  int deviations = 0;
};

struct DenseBuild {
  DynamicGraph graph;
  DenseLayout layout;
};

DenseBuild build_dense_const(int n, const BitMatrix& m, int d = 3);
// G0 with d, a d'-regular expander on copies of its nodes and a perfect matching between them.
DenseBuild build_dense_expander(int n, const BitMatrix& m, int d = 6, int d_prime = 4, std::uint64_t seed = 1);
// d = 3; beta > 2.74 (zeta(beta - 1) < 2).
DenseBuild build_dense_powerlaw(int n, double beta, const BitMatrix& m);

// Restores every vector gadget, then removes two edges from each gadget of a zero bit.
int apply_pair_dense(DynamicGraph& g, const DenseLayout& layout, const BitVector& u, const BitVector& v);

bool decode_dense(const DenseLayout& layout, const Rational& density);
bool decide_dense(const DynamicGraph& g, const DenseLayout& layout, DensestResult* result = nullptr);

std::unique_ptr<ReductionDriver> make_dense_driver(DenseVariant variant, const BitMatrix& m, double beta = 3.0,
                                                   int d = 0, std::uint64_t seed = 1);

}  // namespace oumv
