#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "oumv/expansion.hpp"

using namespace oumv;

namespace {

DynamicGraph complete(int n) {
  DynamicGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_static_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("exact expansion of small graphs") {
  DynamicGraph c4(4);
  for (int v = 0; v < 4; ++v) c4.add_static_edge(v, (v + 1) % 4);
  CHECK(edge_expansion_exact(c4).exact_value == Rational(1));
  DynamicGraph two(4);
  two.add_static_edge(0, 1);
  two.add_static_edge(2, 3);
  ExpansionCertificate c = edge_expansion_exact(two);
  CHECK(c.exact_value == Rational(0));
  CHECK(c.disconnected);
  CHECK(edge_expansion_exact(complete(4)).exact_value == Rational(2));
}

TEST_CASE("complete graph spectrum") {
  for (int n = 3; n <= 9; ++n) CHECK(laplacian_lambda2(complete(n)) == doctest::Approx(n).epsilon(1e-6));
}

TEST_CASE("spectral bound never exceeds exact expansion") {
  DynamicGraph p3(3);
  p3.add_static_edge(0, 1);
  p3.add_static_edge(1, 2);
  CHECK(expansion_lower_bound_spectral(p3).value <= edge_expansion_exact(p3).value + 1e-9);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 25; ++k) {
    int n = 6 + k % 17;
    DynamicGraph g = oracle::random_graph(n, 0.35, rng);
    ExpansionCertificate exact = edge_expansion_exact(g);
    double bound = expansion_lower_bound_spectral(g).value;
    CHECK(bound <= exact.value + 1e-9);
    if (n <= 16) CHECK(exact.exact_value == oracle::expansion(g));
  }
}

TEST_CASE("power iteration agrees with the dense solver") {
  std::mt19937_64 rng(12);
  DynamicGraph g = oracle::random_graph(60, 0.1, rng);
  std::string dense, power;
  double a = laplacian_lambda2(g, 1500, 1e-9, &dense);
  double b = laplacian_lambda2(g, 10, 1e-9, &power);
  CHECK(dense == "dense");
  CHECK(power == "power");
  CHECK(b == doctest::Approx(a).epsilon(1e-4));
}

TEST_CASE("enumeration is capped") { CHECK_THROWS(edge_expansion_exact(complete(23))); }
