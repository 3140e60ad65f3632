#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "oumv/graph.hpp"
#include "oumv/stpath_gadgets.hpp"

using namespace oumv;

TEST_CASE("insert then delete restores the graph") {
  DynamicGraph g(3);
  g.add_static_edge(0, 2);
  DynamicGraph before = g;
  g.insert_edge(1, 2);
  g.delete_edge(1, 2);
  CHECK(g.same_edges(before));
  CHECK(g.log().size() == 2);
  CHECK(g.log()[0] == UpdateOp{UpdateOp::Kind::insert, 1, 2});
}

TEST_CASE("simple graph contract") {
  DynamicGraph g(3);
  CHECK_THROWS(g.insert_edge(1, 1));
  g.insert_edge(1, 2);
  CHECK_THROWS(g.insert_edge(1, 2));
  CHECK_THROWS(g.insert_edge(2, 1));
  CHECK_THROWS(g.delete_edge(0, 1));
  CHECK_THROWS(g.insert_edge(0, 3));
}

TEST_CASE("static edges are not logged") {
  DynamicGraph g(2);
  g.add_static_edge(0, 1);
  CHECK(g.log().empty());
  g.set_logging(false);
  g.delete_edge(0, 1);
  CHECK(g.log().empty());
}

TEST_CASE("bfs distances") {
  DynamicGraph g(4);
  CHECK(bfs_distance(g, 2, 2) == 0);
  g.add_static_edge(0, 1);
  g.add_static_edge(1, 2);
  CHECK(bfs_distance(g, 0, 2) == 2);
  CHECK(bfs_distance(g, 0, 3) == kInfinity);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    DynamicGraph r = oracle::random_graph(15, 0.15, rng);
    for (int t = 1; t < 15; ++t) CHECK(bfs_distance(r, 0, t) == oracle::distance(r, 0, t));
  }
}

TEST_CASE("st gadget planted-one distance") {
  BitMatrix ones = BitMatrix::ones(2);
  StBuild b = build_st_const(2, ones);
  BitVector all = BitVector::from_string("11");
  apply_pair_st(b.graph, b.layout, all, all);
  CHECK(bfs_distance(b.graph, b.layout.s, b.layout.t_node) == 7);
}

TEST_CASE("degree statistics") {
  DynamicGraph empty(5);
  DegreeStats e = degree_stats(empty);
  CHECK(e.max_degree == 0);
  CHECK(e.histogram == std::map<int, std::int64_t>{{0, 5}});
  DynamicGraph star(5);
  for (int v = 1; v < 5; ++v) star.add_static_edge(0, v);
  CHECK(degree_stats(star).max_degree == 4);
}

TEST_CASE("bipartiteness and components") {
  DynamicGraph g(5);
  g.add_static_edge(0, 1);
  g.add_static_edge(1, 2);
  g.add_static_edge(3, 4);
  CHECK(is_bipartite(g).bipartite);
  CHECK_FALSE(is_connected(g));
  int count = 0;
  component_ids(g, &count);
  CHECK(count == 2);
  g.add_static_edge(0, 2);
  CHECK_FALSE(is_bipartite(g).bipartite);
}

TEST_CASE("global minimum cut against enumeration") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    DynamicGraph g = oracle::random_graph(3 + k % 9, 0.5, rng);
    CHECK(global_min_cut(g) == oracle::min_cut(g));
  }
}

TEST_CASE("edge list round trip and dot output") {
  std::mt19937_64 rng(8);
  DynamicGraph g = oracle::random_graph(12, 0.3, rng);
  std::stringstream ss;
  write_edge_list(ss, g);
  DynamicGraph back = read_edge_list(ss);
  CHECK(back.node_count() == g.node_count());
  CHECK(back.same_edges(g));
  std::stringstream dot;
  write_dot(dot, g);
  std::string s = dot.str();
  int nodes = 0;
  for (std::size_t p = s.find(" [label="); p != std::string::npos; p = s.find(" [label=", p + 1)) ++nodes;
  CHECK(nodes == g.node_count());
  int edges = 0;
  for (std::size_t p = s.find(" -- "); p != std::string::npos; p = s.find(" -- ", p + 1)) ++edges;
  CHECK(edges == g.edge_count());
}

TEST_CASE("induced subgraph") {
  DynamicGraph g(4);
  g.add_static_edge(0, 1);
  g.add_static_edge(1, 2);
  g.add_static_edge(2, 3);
  DynamicGraph h = induced_subgraph(g, {1, 2, 3});
  CHECK(h.node_count() == 3);
  CHECK(h.edge_count() == 2);
}
