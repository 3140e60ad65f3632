#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "oumv/expander.hpp"
#include "oumv/expansion.hpp"

using namespace oumv;

TEST_CASE("random regular expander") {
  Expander e = build_expander({8, 4, 0.1, 3});
  for (NodeId v = 0; v < 8; ++v) CHECK(e.graph.degree(v) == 4);
  CHECK(e.certificate.value >= 0.1);
  CHECK(oracle::expansion(e.graph) >= Rational(1, 10));
}

TEST_CASE("small node counts give the complete graph") {
  Expander e = build_expander({6, 5, 0.1, 1});
  CHECK(e.graph.edge_count() == 15);
  ExpansionCertificate c = edge_expansion_exact(e.graph);
  CHECK(c.exact_value == Rational(3));
  CHECK(c.witness.size() == 3);
}

TEST_CASE("odd degree sum is rejected") { CHECK_THROWS(build_expander({5, 3, 0.1, 1})); }

TEST_CASE("seeded expanders are reproducible") {
  Expander a = build_expander({30, 4, 0.1, 9});
  Expander b = build_expander({30, 4, 0.1, 9});
  CHECK(a.graph.same_edges(b.graph));
}

TEST_CASE("overlay onto isolated nodes") {
  DynamicGraph g(20);
  std::vector<NodeId> targets;
  for (NodeId v = 0; v < 20; v += 2) targets.push_back(v);
  ExpanderSpec spec{10, 4, 0.1, 2};
  Overlay o = overlay_expander(g, targets, spec);
  CHECK(o.added.size() == 20);
  CHECK(o.dummies.empty());
  Overlay again = overlay_expander(g, targets, spec);
  CHECK(again.added.empty());
}

TEST_CASE("dummy overlay keeps the graph bipartite") {
  DynamicGraph g(12);
  for (int k = 0; k < 6; ++k) g.add_static_edge(2 * k, 2 * k + 1);
  std::vector<NodeId> targets{0, 2, 4, 6, 8, 10};
  Overlay o = overlay_expander(g, targets, {6, 4, 0.1, 5}, true);
  CHECK(o.dummies.size() == 12);
  CHECK(g.node_count() == 24);
  CHECK(is_bipartite(g).bipartite);
  for (NodeId x : o.dummies) CHECK(g.degree(x) == 2);
}
