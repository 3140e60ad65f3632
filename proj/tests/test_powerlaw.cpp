#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "oumv/matching_gadgets.hpp"
#include "oumv/powerlaw.hpp"

using namespace oumv;

namespace {

PowerLawParams additive(double alpha, double beta) {
  PowerLawParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.variant = PowerLawParams::Variant::additive;
  p.c = 1.0;
  return p;
}

std::map<int, std::int64_t> exact_histogram(double alpha, double beta) {
  std::map<int, std::int64_t> h;
  for (int d = 1; d <= max_realisable_degree(alpha, beta); ++d)
    if (std::int64_t c = power_law_count(alpha, beta, d)) h[d] = c;
  return h;
}

}  // namespace

TEST_CASE("zeta values") {
  CHECK(zeta(2.0) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-6));
  CHECK(zeta(3.0) == doctest::Approx(1.2020569).epsilon(1e-6));
}

TEST_CASE("an exact histogram passes every variant") {
  double alpha = 7.0, beta = 2.5;
  std::map<int, std::int64_t> h = exact_histogram(alpha, beta);
  PowerLawParams p;
  p.alpha = alpha;
  p.beta = beta;
  for (auto v : {PowerLawParams::Variant::exact, PowerLawParams::Variant::additive,
                 PowerLawParams::Variant::multiplicative}) {
    p.variant = v;
    p.c = 1.0;
    p.epsilon = 0.1;
    CHECK(check_power_law(h, p).pass);
  }
}

TEST_CASE("moving one node by one degree is an additive deviation of one") {
  double alpha = 7.0, beta = 2.5;
  std::map<int, std::int64_t> h = exact_histogram(alpha, beta);
  --h[2];
  ++h[3];
  PowerLawReport r = check_power_law(h, additive(alpha, beta));
  CHECK(r.pass);
  CHECK(r.deviating_classes == 2);
  PowerLawParams exact = additive(alpha, beta);
  exact.variant = PowerLawParams::Variant::exact;
  CHECK_FALSE(check_power_law(h, exact).pass);
}

TEST_CASE("alpha_for_counts is the smallest sufficient alpha") {
  std::map<int, std::int64_t> need{{1, 40}, {2, 30}, {3, 20}};
  double a = alpha_for_counts(need, 3.0);
  for (auto [d, c] : need) CHECK(power_law_count(a, 3.0, d) >= c);
  bool short_somewhere = false;
  for (auto [d, c] : need) short_somewhere = short_somewhere || power_law_count(a - 1e-3, 3.0, d) < c;
  CHECK(short_somewhere);
}

TEST_CASE("generated hosts realise their targets") {
  PowerLawHost h = generate_power_law_host(6.0, 2.5, 3);
  DegreeStats st = degree_stats(h.graph);
  for (auto [d, c] : h.targets) {
    std::int64_t got = st.histogram.count(d) ? st.histogram.at(d) : 0;
    CHECK(got == c - (d == 1 ? h.parity_fix : 0));
  }
}

TEST_CASE("make_space frees the needed nodes and keeps the rest of the histogram") {
  PowerLawHost h = generate_power_law_host(7.0, 2.5, 5);
  std::map<int, std::int64_t> before = degree_stats(h.graph).histogram;
  std::mt19937_64 rng(5);
  std::map<int, std::int64_t> need{{1, 6}, {2, 5}, {3, 4}};
  MakeSpaceResult r = make_space(h.graph, need, rng);
  REQUIRE(r.ok);
  std::set<NodeId> freed;
  for (auto& [d, nodes] : r.freed)
    for (NodeId v : nodes) {
      CHECK(h.graph.degree(v) == 0);
      freed.insert(v);
    }
  std::map<int, std::int64_t> after;
  for (NodeId v = 0; v < h.graph.node_count(); ++v)
    if (!freed.count(v)) ++after[h.graph.degree(v)];
  std::int64_t off = 0;
  for (auto [d, c] : before) {
    std::int64_t want = c - (need.count(d) ? need[d] : 0);
    off += std::abs((after.count(d) ? after[d] : 0) - want);
  }
  CHECK(off <= 2 * r.deviations);
  CHECK(r.deviations <= 4);
}

TEST_CASE("matching power-law host has at most four off-by-one nodes") {
  for (double beta : {2.5, 3.0}) {
    PowerLawMatchingState s = build_matching_powerlaw(3, beta, 1, BitMatrix::identity(3));
    PowerLawReport r = check_power_law(degree_stats(s.graph).histogram, additive(s.embedding.alpha, beta));
    CHECK(r.deviating_nodes <= 4);
  }
}
