#include "oumv/expansion.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace oumv {

ExpansionCertificate edge_expansion_exact(const DynamicGraph& g, int cap) {
  int n = g.node_count();
  if (n > cap)
    throw std::invalid_argument("exact expansion limited to " + std::to_string(cap) + " nodes (got " +
                                std::to_string(n) + "); use the spectral certificate");
  ExpansionCertificate c;
  c.method = ExpansionCertificate::Method::exact;
  c.solver = "enumeration";
  if (n < 2) return c;
  std::vector<std::uint32_t> nb(n, 0);
  for (auto [a, b] : g.edges()) {
    nb[a] |= 1U << b;
    nb[b] |= 1U << a;
  }
  std::uint32_t set = 0;
  std::int64_t cut = 0;
  bool have = false;
  Rational best(0);
  std::uint32_t best_set = 0;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    int v = std::countr_zero(k);
    std::uint32_t bit = 1U << v;
    int inside = std::popcount(nb[v] & set);
    int deg = std::popcount(nb[v]);
    if (set & bit) {
      set &= ~bit;
      cut -= deg - 2 * inside;
    } else {
      set |= bit;
      cut += deg - 2 * inside;
    }
    int size = std::popcount(set);
    if (size == 0 || 2 * size > n) continue;
    Rational r(cut, size);
    if (!have || r < best) {
      best = r;
      best_set = set;
      have = true;
    }
  }
  c.exact_value = best;
  c.value = boost::rational_cast<double>(best);
  c.disconnected = best == Rational(0);
  for (int v = 0; v < n; ++v)
    if (best_set & (1U << v)) c.witness.push_back(v);
  return c;
}

namespace {

double dense_lambda2(const DynamicGraph& g) {
  int n = g.node_count();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (auto [a, b] : g.edges()) {
    lap(a, b) -= 1.0;
    lap(b, a) -= 1.0;
    lap(a, a) += 1.0;
    lap(b, b) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1);
}

// Power iteration on (c I - L) restricted to the complement of the all-ones vector.
double power_lambda2(const DynamicGraph& g, double rel_tol) {
  int n = g.node_count();
  std::vector<Eigen::Triplet<double>> trips;
  double maxdeg = 0;
  for (NodeId v = 0; v < n; ++v) {
    trips.emplace_back(v, v, g.degree(v));
    maxdeg = std::max(maxdeg, static_cast<double>(g.degree(v)));
    for (NodeId w : g.neighbors(v)) trips.emplace_back(v, w, -1.0);
  }
  Eigen::SparseMatrix<double> lap(n, n);
  lap.setFromTriplets(trips.begin(), trips.end());
  double shift = 2.0 * maxdeg + 1.0;
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = gauss(rng);
  auto deflate = [&](Eigen::VectorXd& y) {
    y.array() -= y.mean();
    y.normalize();
  };
  deflate(x);
  double mu = 0, prev = -1;
  for (int it = 0; it < 200000; ++it) {
    Eigen::VectorXd y = shift * x - lap * x;
    deflate(y);
    mu = y.dot(lap * y);
    x = y;
    if (prev >= 0 && std::abs(mu - prev) <= rel_tol * std::max(1e-12, std::abs(mu)) * 1e-3) break;
    prev = mu;
  }
  return mu;
}

}  // namespace

double laplacian_lambda2(const DynamicGraph& g, int dense_limit, double rel_tol, std::string* solver) {
  int n = g.node_count();
  if (n < 2) return 0.0;
  if (n <= dense_limit) {
    if (solver) *solver = "dense";
    return dense_lambda2(g);
  }
  if (solver) *solver = "power";
  return power_lambda2(g, rel_tol);
}

ExpansionCertificate expansion_lower_bound_spectral(const DynamicGraph& g, int dense_limit, double rel_tol) {
  ExpansionCertificate c;
  c.method = ExpansionCertificate::Method::spectral;
  if (g.node_count() < 2) return c;
  if (!is_connected(g)) {
    c.disconnected = true;
    c.solver = "none";
    return c;
  }
  c.lambda2 = laplacian_lambda2(g, dense_limit, rel_tol, &c.solver);
  double slack = (c.solver == "dense" ? 1e-9 : rel_tol) * std::max(1.0, std::abs(c.lambda2));
  c.value = std::max(0.0, c.lambda2 / 2.0 - slack);
  return c;
}

ExpansionCertificate certify_expansion(const DynamicGraph& g) {
  if (g.node_count() <= kExhaustiveExpansionCap) return edge_expansion_exact(g);
  return expansion_lower_bound_spectral(g);
}

}  // namespace oumv
