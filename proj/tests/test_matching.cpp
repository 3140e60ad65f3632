#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "oumv/matching.hpp"
#include "oumv/matching_gadgets.hpp"

using namespace oumv;

TEST_CASE("trivial matchings") {
  CHECK(max_matching_size(DynamicGraph(0)) == 0);
  DynamicGraph g(8);
  for (int k = 0; k < 4; ++k) g.add_static_edge(2 * k, 2 * k + 1);
  CHECK(max_matching_size(g) == 4);
}

TEST_CASE("maximum matching equals exhaustive search") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + k % 9;
    DynamicGraph g = oracle::random_graph(n, 0.2 + 0.05 * (k % 10), rng);
    Matching m = max_matching(g);
    validate_matching(g, m);
    CHECK(m.size() == oracle::matching_size(g));
    CHECK(edmonds_blossom(g, Matching(n)).size() == m.size());
  }
}

TEST_CASE("Hopcroft-Karp agrees with the blossom algorithm on bipartite graphs") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 60; ++k) {
    DynamicGraph g = oracle::random_bipartite(12, 14, 0.12, rng);
    std::vector<int> side(26, 0);
    for (int v = 12; v < 26; ++v) side[v] = 1;
    Matching hk = hopcroft_karp(g, side, Matching(26));
    validate_matching(g, hk);
    CHECK(hk.size() == edmonds_blossom(g, Matching(26)).size());
  }
}

TEST_CASE("hints do not change the optimum") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    DynamicGraph g = oracle::random_graph(10, 0.3, rng);
    Matching first = max_matching(g);
    auto e = g.edges();
    if (e.empty()) continue;
    g.delete_edge(e[0].first, e[0].second);
    Matching hint = restrict_matching(g, first);
    validate_matching(g, hint);
    CHECK(max_matching(g, &hint).size() == oracle::matching_size(g));
  }
}

TEST_CASE("validate_matching rejects non-edges") {
  DynamicGraph g(3);
  g.add_static_edge(0, 1);
  Matching m(3);
  m.match(1, 2);
  CHECK_THROWS(validate_matching(g, m));
}

TEST_CASE("augmenting path probes") {
  DynamicGraph g(2);
  g.add_static_edge(0, 1);
  CHECK(augmenting_path_exists(g, Matching(2), 0, 1));
  DynamicGraph h(4);
  h.add_static_edge(0, 1);
  h.add_static_edge(2, 3);
  CHECK_FALSE(augmenting_path_exists(h, Matching(4), 0, 3));
}

TEST_CASE("augmenting path from the base matching decides perfection") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) {
    BitMatrix m = oracle::random_matrix(3, rng);
    MatchingBuild b = build_matching_const(3, m);
    apply_pair_matching(b.graph, b.layout, oracle::random_vector(3, rng), oracle::random_vector(3, rng));
    bool path = augmenting_path_exists(b.graph, b.layout.base, b.layout.source, b.layout.sink);
    CHECK(path == (2 * max_matching_size(b.graph) == b.graph.node_count()));
  }
}
