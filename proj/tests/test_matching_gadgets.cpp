#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "oumv/expansion.hpp"
#include "oumv/matching_gadgets.hpp"

using namespace oumv;

namespace {

std::set<Edge> l2_l3_edges(const DynamicGraph& g, const MatchingLayout& l) {
  std::set<Edge> out;
  for (auto [a, b] : g.edges()) {
    const std::string &ga = l.labels.group(a), &gb = l.labels.group(b);
    if ((ga == "L2" && gb == "L3") || (ga == "L3" && gb == "L2")) out.insert(make_edge(a, b));
  }
  return out;
}

std::map<std::string, std::map<int, std::int64_t>> group_histograms(const DynamicGraph& g, const Layout& l) {
  std::map<std::string, std::map<int, std::int64_t>> out;
  for (NodeId v = 0; v < l.size(); ++v) ++out[l.group(v)][g.degree(v)];
  return out;
}

}  // namespace

TEST_CASE("node counts of the constant-degree gadget") {
  CHECK(build_matching_const(2, BitMatrix(2)).graph.node_count() == 34);
  CHECK(build_matching_const(4, BitMatrix(4)).graph.node_count() == 98);
}

TEST_CASE("without u/v edges the maximum matching misses one pair") {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 3, 5}) {
    MatchingBuild zero = build_matching_const(n, BitMatrix(n));
    CHECK(2 * max_matching_size(zero.graph) == zero.graph.node_count() - 2);
    MatchingBuild b = build_matching_const(n, oracle::random_matrix(n, rng));
    CHECK(2 * max_matching_size(b.graph) == b.graph.node_count() - 2);
    CHECK(is_bipartite(b.graph).bipartite);
    CHECK(degree_stats(b.graph).max_degree <= 3);
    validate_matching(b.graph, b.layout.base);
    CHECK(2 * b.layout.base.size() == b.graph.node_count() - 2);
  }
}

TEST_CASE("pair updates touch only the u/v edges") {
  MatchingBuild b = build_matching_const(3, BitMatrix::identity(3));
  BitVector zeros(3), ones = BitVector::from_string("111");
  CHECK(apply_pair_matching(b.graph, b.layout, zeros, zeros) == 0);
  CHECK(apply_pair_matching(b.graph, b.layout, ones, ones) == 6);
  CHECK(apply_pair_matching(b.graph, b.layout, zeros, zeros) == 6);
  CHECK(b.graph.log().back().kind == UpdateOp::Kind::erase);

  std::mt19937_64 rng(4);
  MatchingBuild c = build_matching_const(4, oracle::random_matrix(4, rng));
  for (int k = 0; k < 20; ++k) {
    BitVector u = oracle::random_vector(4, rng), v = oracle::random_vector(4, rng);
    apply_pair_matching(c.graph, c.layout, u, v);
    std::set<Edge> want;
    for (int i = 1; i <= 4; ++i)
      if (u.get(i)) want.insert(make_edge(c.layout.l2[i], c.layout.l3_head[i]));
    CHECK(l2_l3_edges(c.graph, c.layout) == want);
    CHECK(degree_stats(c.graph).max_degree <= 3);
  }
}

TEST_CASE("constant-degree gadget decides every n=2 instance") {
  for (std::uint64_t k = 0; k < 256; ++k) {
    OuMvInstance inst = enumerate_instance(2, k);
    MatchingBuild b = build_matching_const(2, inst.matrix);
    apply_pair_matching(b.graph, b.layout, inst.pairs[0].u, inst.pairs[0].v);
    CHECK(decide_matching(b.graph, b.layout) == inst.truth[0]);
    CHECK(decide_matching_exact(b.graph, b.layout) == inst.truth[0]);
  }
}

TEST_CASE("a single aligned triple yields a perfect matching") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      BitMatrix m(3);
      m.set(i, j, true);
      MatchingBuild b = build_matching_const(3, m);
      apply_pair_matching(b.graph, b.layout, oracle::unit(3, i), oracle::unit(3, j));
      CHECK(2 * max_matching_size(b.graph) == b.graph.node_count());
    }
}

TEST_CASE("planted-one stream decodes to ones") {
  OuMvInstance inst = generate_instance(8, InstanceMode::planted_one, 3);
  MatchingBuild b = build_matching_const(8, inst.matrix);
  for (const VectorPair& p : inst.pairs) {
    apply_pair_matching(b.graph, b.layout, p.u, p.v);
    CHECK(decide_matching_exact(b.graph, b.layout));
  }
}

TEST_CASE("varying gadget") {
  std::mt19937_64 rng(6);
  BitMatrix m = oracle::random_matrix(4, rng);
  MatchingBuild c = build_matching_const(4, m);
  MatchingBuild v0 = build_matching_varying(4, 0.0, m);
  CHECK(v0.graph.node_count() == c.graph.node_count());
  CHECK(v0.graph.same_edges(c.graph));

  MatchingBuild v1 = build_matching_varying(4, 1.0, BitMatrix::ones(4));
  CHECK(v1.layout.width == 1);
  CHECK(degree_stats(v1.graph).max_degree <= 4 + 3);

  BitMatrix big = oracle::random_matrix(16, rng, 0.05);
  MatchingBuild h = build_matching_varying(16, 0.5, big);
  for (int k = 0; k < 20; ++k) {
    BitVector u = oracle::random_vector(16, rng), v = oracle::random_vector(16, rng);
    apply_pair_matching(h.graph, h.layout, u, v);
    CHECK(decide_matching_exact(h.graph, h.layout) == vmv(u, big, v));
  }
}

TEST_CASE("expander gadget size and decisions") {
  CHECK(build_matching_expander(2, BitMatrix(2)).graph.node_count() == 98);
  std::map<std::string, MatchingBuild> builds;
  for (std::uint64_t k = 0; k < 256; ++k) {
    OuMvInstance inst = enumerate_instance(2, k);
    std::string key = inst.matrix.row_string(1) + inst.matrix.row_string(2);
    if (!builds.count(key)) builds.emplace(key, build_matching_expander(2, inst.matrix));
    MatchingBuild& b = builds.at(key);
    apply_pair_matching_expander(b.graph, b.layout, inst.pairs[0].u, inst.pairs[0].v);
    CHECK(decide_matching_exact(b.graph, b.layout) == inst.truth[0]);
  }
}

TEST_CASE("expander gadget update counts") {
  MatchingBuild b = build_matching_expander(2, BitMatrix::identity(2));
  BitVector ones = BitVector::from_string("1111"), zeros(4);
  apply_pair_matching_expander(b.graph, b.layout, ones, ones);
  std::size_t mark = b.graph.log().size();
  CHECK(apply_pair_matching_expander(b.graph, b.layout, ones, ones) == 0);
  CHECK(apply_pair_matching_expander(b.graph, b.layout, zeros, zeros) == 16);
  int inserts = 0, deletes = 0;
  for (std::size_t k = mark; k < b.graph.log().size(); ++k)
    (b.graph.log()[k].kind == UpdateOp::Kind::insert ? inserts : deletes)++;
  CHECK(inserts == 8);
  CHECK(deletes == 8);
  CHECK(b.graph.log()[mark].kind == UpdateOp::Kind::insert);
}

TEST_CASE("expander gadget stays connected and certified after every op") {
  std::mt19937_64 rng(7);
  MatchingBuild b = build_matching_expander(2, oracle::random_matrix(2, rng));
  for (int k = 0; k < 3; ++k) {
    std::size_t mark = b.graph.log().size();
    DynamicGraph replay = b.graph;
    apply_pair_matching_expander(b.graph, b.layout, oracle::random_vector(2, rng), oracle::random_vector(2, rng));
    DynamicGraph g = replay;
    for (std::size_t x = mark; x < b.graph.log().size(); ++x) {
      g.apply(b.graph.log()[x]);
      CHECK(is_connected(g));
    }
  }
  MatchingBuild c = build_matching_expander(4, oracle::random_matrix(4, rng));
  for (int k = 0; k < 4; ++k) {
    std::size_t mark = c.graph.log().size();
    DynamicGraph g = c.graph;
    apply_pair_matching_expander(c.graph, c.layout, oracle::random_vector(4, rng), oracle::random_vector(4, rng));
    for (std::size_t x = mark; x < c.graph.log().size(); ++x) {
      g.apply(c.graph.log()[x]);
      CHECK(expansion_lower_bound_spectral(g).value > 0);
    }
  }
}

TEST_CASE("power-law reduction degree table") {
  // Left side of the 2n-subgadget reduction: the odd path has two pendant ends and the
  // first and last L4 node of every subgadget has no cross edge.
  for (int n : {2, 3, 4}) {
    MatchingBuild b = build_matching_powerlaw_reduction(n, BitMatrix::identity(n));
    auto h = group_histograms(b.graph, b.layout.labels);
    std::int64_t x = n;
    CHECK(h["L1"] == std::map<int, std::int64_t>{{2, x}});
    CHECK(h["L2"] == std::map<int, std::int64_t>{{1, 2}, {2, x - 1}});
    CHECK(h["L3"] == std::map<int, std::int64_t>{{1, 2 * x}, {2, 2 * x * x}});
    CHECK(h["L4"] == std::map<int, std::int64_t>{{2, 4 * x}, {3, 2 * x * x - 2 * x}});
    CHECK(h["R4"] == h["L4"]);
  }
}

TEST_CASE("power-law host matching table equals a from-scratch solver") {
  auto host = build_matching_powerlaw_host(2, 3.0, 1);
  REQUIRE(host->rewires.size() == 6);
  for (int l = 0; l <= 2; ++l) {
    DynamicGraph g = host->host.graph;
    for (int k = 0; k < l; ++k) {
      const Rewire& r = host->rewires[4 + k];
      g.delete_edge(r.a, r.c);
      g.delete_edge(r.b, r.d);
      g.insert_edge(r.c, r.d);
    }
    for (int k = 0; k <= 4; ++k) {
      CHECK(host->m[k][l] == edmonds_blossom(g, Matching(g.node_count())).size());
      if (k < 4) {
        const Rewire& r = host->rewires[k];
        g.delete_edge(r.a, r.c);
        g.delete_edge(r.b, r.d);
        g.insert_edge(r.c, r.d);
      }
    }
  }
}

TEST_CASE("power-law variant decodes and restores its histogram") {
  std::mt19937_64 rng(8);
  BitMatrix m = oracle::random_matrix(2, rng);
  PowerLawMatchingState s = build_matching_powerlaw(2, 3.0, 1, m);
  std::map<int, std::int64_t> hist = degree_stats(s.graph).histogram;
  for (int k = 0; k < 20; ++k) {
    BitVector u = oracle::random_vector(2, rng), v = oracle::random_vector(2, rng);
    PowerLawPairOps ops = apply_pair_powerlaw_matching(s, u, v);
    CHECK(degree_stats(s.graph).histogram == hist);
    CHECK(decode_powerlaw_matching(s, ops, max_matching(s.graph).size()) == vmv(u, m, v));
    rollback(s.graph, ops.apply);
    CHECK(degree_stats(s.graph).histogram == hist);
  }
  BitVector zero(2);
  CHECK_FALSE(apply_and_decide_powerlaw_matching(s, zero, zero));
}
