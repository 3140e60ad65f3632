#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "oumv/densest_gadgets.hpp"

using namespace oumv;

namespace {

DynamicGraph gadget_graph(const CirculantGadget& c) {
  DynamicGraph g(c.nodes);
  for (auto [a, b] : c.edges) g.add_static_edge(a, b);
  return g;
}

std::vector<NodeId> planted_set(const DenseLayout& l, int i, int j) {
  std::vector<NodeId> s(l.u[i].begin() + 1, l.u[i].end());
  s.insert(s.end(), l.v[j].begin() + 1, l.v[j].end());
  s.insert(s.end(), l.m[i][j].begin(), l.m[i][j].end());
  return s;
}

}  // namespace

TEST_CASE("vector gadget") {
  CirculantGadget c = build_vector_gadget(7, 3);
  DynamicGraph g = gadget_graph(c);
  for (NodeId v = 0; v < 7; ++v) CHECK(g.degree(v) == 6);
  CHECK(global_min_cut(g) >= 6);
  CHECK(c.min_cut >= 6);
  CHECK(densest_subgraph(g).density == Rational(3));
  CHECK(oracle::densest(g) == Rational(3));

  CirculantGadget big = build_vector_gadget(16, 3);
  DynamicGraph h = gadget_graph(big);
  CHECK(global_min_cut(h) >= 6);
  std::mt19937_64 rng(1);
  std::vector<Edge> edges = h.edges();
  for (int k = 0; k < 50; ++k) {
    std::shuffle(edges.begin(), edges.end(), rng);
    DynamicGraph cut = h;
    for (int x = 0; x < 5; ++x) cut.remove_static_edge(edges[x].first, edges[x].second);
    CHECK(is_connected(cut));
  }
}

TEST_CASE("matrix gadget misses one designated edge") {
  CirculantGadget m = build_matrix_gadget(9, 3);
  DynamicGraph g = gadget_graph(m);
  CHECK(g.edge_count() == 9 * 3 - 1);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 5);
  CHECK(global_min_cut(g) >= 5);
}

TEST_CASE("constant-degree construction") {
  std::mt19937_64 rng(3);
  BitMatrix m = oracle::random_matrix(3, rng);
  DenseBuild b = build_dense_const(3, m);
  const DenseLayout& l = b.layout;
  CHECK(l.vector_nodes == 7);
  CHECK(l.matrix_nodes == 9);
  CHECK(b.graph.node_count() == 9 * 9 + 2 * 3 * 7);
  CHECK(degree_stats(b.graph).max_degree == 7);
  CHECK(l.threshold == Rational(3) + Rational(1, 9 + 2 * 7));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (m.get(i, j))
        for (NodeId v : l.m[i][j]) CHECK(b.graph.degree(v) == 6);
  CHECK_THROWS(build_dense_const(2, BitMatrix(2)));
}

TEST_CASE("without padding the node count is n^4 + 2n^2") {
  DenseBuild b = build_dense_const(7, BitMatrix::identity(7));
  CHECK(b.graph.node_count() == 7 * 7 * 7 * 7 + 2 * 7 * 7);
  CHECK(b.layout.threshold == Rational(3) + Rational(1, 49 + 14));
}

TEST_CASE("a planted triple reaches the threshold exactly") {
  BitMatrix m(3);
  m.set(2, 3, true);
  DenseBuild b = build_dense_const(3, m);
  apply_pair_dense(b.graph, b.layout, oracle::unit(3, 2), oracle::unit(3, 3));
  CHECK(density_of(b.graph, planted_set(b.layout, 2, 3)) == b.layout.threshold);
  DensestResult r;
  CHECK(decide_dense(b.graph, b.layout, &r));
  CHECK(r.density >= b.layout.threshold);
  apply_pair_dense(b.graph, b.layout, BitVector(3), oracle::unit(3, 3));
  CHECK_FALSE(decide_dense(b.graph, b.layout));
}

TEST_CASE("constant-degree decisions and a dual-solver check") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    BitMatrix m = oracle::random_matrix(3, rng, 0.3);
    DenseBuild b = build_dense_const(3, m);
    for (int p = 0; p < 3; ++p) {
      BitVector u = oracle::random_vector(3, rng), v = oracle::random_vector(3, rng);
      int ops = apply_pair_dense(b.graph, b.layout, u, v);
      CHECK(ops <= 8 * 3);
      DensestResult r;
      CHECK(decide_dense(b.graph, b.layout, &r) == vmv(u, m, v));
      CHECK(densest_subgraph(b.graph, FlowAlgorithm::push_relabel).density == r.density);
      CHECK(degree_stats(b.graph).max_degree <= 7);
    }
  }
}

TEST_CASE("single-gadget probe against subset enumeration") {
  DenseBuild b = build_dense_const(3, BitMatrix::ones(3));
  apply_pair_dense(b.graph, b.layout, BitVector::from_string("111"), BitVector::from_string("111"));
  for (int extra : {0, 2}) {
    std::vector<NodeId> nodes(b.layout.u[1].begin() + 1, b.layout.u[1].end());
    nodes.insert(nodes.end(), b.layout.m[1][1].begin(), b.layout.m[1][1].end());
    nodes.insert(nodes.end(), b.layout.v[1].begin() + 1, b.layout.v[1].begin() + 1 + extra);
    DynamicGraph probe = induced_subgraph(b.graph, nodes);
    REQUIRE(probe.node_count() <= 18);
    CHECK(densest_subgraph(probe).density == oracle::densest(probe));
  }
}

TEST_CASE("expander construction") {
  std::mt19937_64 rng(5);
  BitMatrix m = oracle::random_matrix(3, rng);
  DenseBuild b = build_dense_expander(3, m);
  const DenseLayout& l = b.layout;
  CHECK(b.graph.node_count() == 2 * l.core_nodes);
  CHECK(l.certificate.value > 0);
  for (NodeId v : l.labels.members("G1")) CHECK(b.graph.degree(v) == l.d_prime + 1);
  CHECK(l.d_prime + 1 <= l.d - 1);
  for (int k = 0; k < 20; ++k) {
    BitVector u = oracle::random_vector(3, rng), v = oracle::random_vector(3, rng);
    apply_pair_dense(b.graph, l, u, v);
    CHECK(decide_dense(b.graph, l) == vmv(u, m, v));
  }
  CHECK_THROWS(build_dense_expander(3, m, 6, 5));
}

TEST_CASE("power-law construction") {
  CHECK_THROWS(build_dense_powerlaw(3, 2.5, BitMatrix(3)));
  std::mt19937_64 rng(6);
  BitMatrix m = oracle::random_matrix(3, rng);
  DenseBuild b = build_dense_powerlaw(3, 3.0, m);
  const DenseLayout& l = b.layout;
  std::vector<NodeId> cycle_nodes = l.labels.members("C");
  CHECK(cycle_nodes.size() == 4 * (9 + 6));
  auto hist = degree_stats(b.graph).histogram;
  for (int k = 0; k < 10; ++k) {
    BitVector u = oracle::random_vector(3, rng), v = oracle::random_vector(3, rng);
    apply_pair_dense(b.graph, l, u, v);
    for (NodeId c : cycle_nodes) CHECK(b.graph.degree(c) == 2);
    CHECK(degree_stats(b.graph).histogram == hist);
    CHECK(decide_dense(b.graph, l) == vmv(u, m, v));
  }
}

TEST_CASE("power-law core histogram") {
  // With n >= 2d+1 no gadget is padded and the core has the closed-form histogram.
  DenseBuild b = build_dense_powerlaw(7, 3.0, BitMatrix::identity(7));
  std::map<int, std::int64_t> core;
  for (NodeId v = 0; v < b.layout.core_nodes; ++v) ++core[b.graph.degree(v)];
  CHECK(core == std::map<int, std::int64_t>{{2, 4 * 49 + 8 * 7}, {6, 49 * 49}, {7, 2 * 49}});
  // Padding at n=3 adds degree-2d vector nodes.
  DenseBuild s = build_dense_powerlaw(3, 3.0, BitMatrix::identity(3));
  std::map<int, std::int64_t> small;
  for (NodeId v = 0; v < s.layout.core_nodes; ++v) ++small[s.graph.degree(v)];
  CHECK(small == std::map<int, std::int64_t>{{2, 4 * 9 + 8 * 3}, {6, 81 + 2 * 3 * 4}, {7, 2 * 9}});
}
