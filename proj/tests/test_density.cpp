#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "oumv/density.hpp"

using namespace oumv;

TEST_CASE("small closed forms") {
  DynamicGraph e(2);
  e.add_static_edge(0, 1);
  CHECK(densest_subgraph(e).density == Rational(1, 2));
  for (int k = 2; k <= 7; ++k) {
    DynamicGraph g(k + 2);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) g.add_static_edge(a, b);
    g.add_static_edge(k, k + 1);
    DensestResult r = densest_subgraph(g);
    CHECK(r.density == Rational(k - 1, 2));
    CHECK(density_of(g, r.nodes) == r.density);
  }
}

TEST_CASE("exact densest subgraph equals subset enumeration") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    int n = 4 + k % 15;
    DynamicGraph g = oracle::random_graph(n, 0.15 + 0.07 * (k % 8), rng);
    Rational truth = oracle::densest(g);
    DensestResult a = densest_subgraph(g, FlowAlgorithm::dinic);
    DensestResult b = densest_subgraph(g, FlowAlgorithm::push_relabel);
    CHECK(a.density == truth);
    CHECK(b.density == truth);
    CHECK(density_of(g, a.nodes) == truth);
    CHECK(peeling_lower_bound(g).density * 2 >= truth);
  }
}

TEST_CASE("threshold oracle is strict") {
  DynamicGraph g(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.add_static_edge(a, b);
  std::vector<NodeId> w;
  CHECK(density_exceeds(g, Rational(3, 2) - Rational(1, 100), &w));
  CHECK(density_of(g, w) > Rational(3, 2) - Rational(1, 100));
  CHECK_FALSE(density_exceeds(g, Rational(3, 2), &w));
}

TEST_CASE("core numbers of a clique with a tail") {
  DynamicGraph g(6);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.add_static_edge(a, b);
  g.add_static_edge(3, 4);
  g.add_static_edge(4, 5);
  std::vector<int> c = core_numbers(g);
  CHECK(c[0] == 3);
  CHECK(c[4] == 1);
  CHECK(c[5] == 1);
}
