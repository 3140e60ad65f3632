#include "oumv/density.hpp"

#include <algorithm>
#include <stdexcept>

namespace oumv {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational density_of(const DynamicGraph& g, const std::vector<NodeId>& nodes) {
  if (nodes.empty()) return Rational(0);
  std::vector<char> in(g.node_count(), 0);
  for (NodeId v : nodes) in[v] = 1;
  std::int64_t e = 0;
  for (NodeId v : nodes)
    for (NodeId w : g.neighbors(v))
      if (in[w] && v < w) ++e;
  return Rational(e, static_cast<std::int64_t>(nodes.size()));
}

namespace {

struct Peel {
  std::vector<NodeId> order;
  std::vector<int> core;
  std::size_t best_prefix = 0;  // nodes removed before the densest remainder
  Rational best{0};
};

// Minimum-degree peeling with a bucket queue.
Peel peel(const DynamicGraph& g) {
  int n = g.node_count();
  Peel p;
  p.core.assign(n, 0);
  std::vector<int> deg(n);
  int maxd = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxd = std::max(maxd, deg[v]);
  }
  std::vector<std::vector<NodeId>> bucket(maxd + 1);
  for (NodeId v = n - 1; v >= 0; --v) bucket[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::int64_t edges = g.edge_count();
  int cur = 0, running = 0;
  if (n > 0) p.best = Rational(edges, n);
  for (int step = 0; step < n; ++step) {
    NodeId v = -1;
    while (v < 0) {
      while (bucket[cur].empty()) ++cur;
      NodeId x = bucket[cur].back();
      bucket[cur].pop_back();
      if (!removed[x] && deg[x] == cur) v = x;
    }
    removed[v] = 1;
    running = std::max(running, deg[v]);
    p.core[v] = running;
    p.order.push_back(v);
    edges -= deg[v];
    for (NodeId w : g.neighbors(v))
      if (!removed[w]) {
        --deg[w];
        bucket[deg[w]].push_back(w);
        if (deg[w] < cur) cur = deg[w];
      }
    int left = n - step - 1;
    if (left > 0) {
      Rational r(edges, left);
      if (r > p.best) {
        p.best = r;
        p.best_prefix = static_cast<std::size_t>(step + 1);
      }
    }
  }
  return p;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

std::vector<int> core_numbers(const DynamicGraph& g) { return peel(g).core; }

DensestResult peeling_lower_bound(const DynamicGraph& g) {
  DensestResult r;
  if (g.node_count() == 0) return r;
  Peel p = peel(g);
  r.density = p.best;
  r.nodes.assign(p.order.begin() + static_cast<std::ptrdiff_t>(p.best_prefix), p.order.end());
  std::sort(r.nodes.begin(), r.nodes.end());
  return r;
}

bool density_exceeds(const DynamicGraph& g, const Rational& lambda, std::vector<NodeId>* witness, FlowAlgorithm algo) {
  int n = g.node_count();
  std::int64_t p = lambda.numerator(), q = lambda.denominator();
  if (p < 0) throw std::invalid_argument("negative density threshold");
  // min over S of sum_{v in S} (2p - q deg v) + q cut(S), shifted by the negative weights.
  int s = n, t = n + 1;
  FlowNetwork net(n + 2);
  Capacity negative = 0;
  for (NodeId v = 0; v < n; ++v) {
    Capacity w = 2 * p - q * g.degree(v);
    if (w > 0) net.add_arc(v, t, w);
    if (w < 0) {
      net.add_arc(s, v, -w);
      negative += -w;
    }
  }
  for (auto [a, b] : g.edges()) net.add_arc(a, b, q, q);
  Capacity cut = algo == FlowAlgorithm::dinic ? net.dinic(s, t) : net.push_relabel(s, t);
  if (cut >= negative) return false;
  if (witness) {
    witness->clear();
    auto side = net.source_side(t);
    for (NodeId v = 0; v < n; ++v)
      if (side[v]) witness->push_back(v);
  }
  return true;
}

DensestResult densest_subgraph(const DynamicGraph& g, FlowAlgorithm algo) {
  DensestResult result;
  int n = g.node_count();
  if (n == 0) return result;
  if (g.edge_count() == 0) {
    result.nodes = {0};
    return result;
  }
  Peel p = peel(g);
  DensestResult best;
  best.density = p.best;
  best.nodes.assign(p.order.begin() + static_cast<std::ptrdiff_t>(p.best_prefix), p.order.end());

  // The optimum S has minimum internal degree >= its density, so it lies in the
  // ceil(lower bound)-core.
  std::int64_t kmin = ceil_div(best.density.numerator(), best.density.denominator());
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < n; ++v)
    if (p.core[v] >= kmin) keep.push_back(v);
  DynamicGraph h = induced_subgraph(g, keep);
  // Dinkelbach iteration: each cut either certifies optimality or yields a strictly denser set.
  std::vector<NodeId> witness;
  while (density_exceeds(h, best.density, &witness, algo)) {
    best.density = density_of(h, witness);
    best.nodes.clear();
    for (NodeId v : witness) best.nodes.push_back(keep[v]);
  }
  std::sort(best.nodes.begin(), best.nodes.end());
  return best;
}

}  // namespace oumv
