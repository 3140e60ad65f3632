#include "oumv/expander.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace oumv {

void ExpanderSpec::validate() const {
  if (nodes < 1) throw std::invalid_argument("expander: node count must be positive");
  if (degree < 3) throw std::invalid_argument("expander: degree must be at least 3");
  if (nodes > degree + 1 && (static_cast<std::int64_t>(nodes) * degree) % 2 != 0)
    throw std::invalid_argument("expander: odd degree sum (" + std::to_string(nodes) + " nodes of degree " +
                                std::to_string(degree) + ")");
}

namespace {

DynamicGraph complete_graph(int n) {
  DynamicGraph g(n);
  g.set_logging(false);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) g.add_static_edge(a, b);
  g.set_logging(true);
  return g;
}

bool try_pairing(int n, int d, std::mt19937_64& rng, DynamicGraph& out) {
  std::vector<NodeId> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (NodeId v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  DynamicGraph g(n);
  g.set_logging(false);
  for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
    NodeId a = stubs[k], b = stubs[k + 1];
    if (a == b || g.has_edge(a, b)) return false;
    g.add_static_edge(a, b);
  }
  g.set_logging(true);
  out = std::move(g);
  return true;
}

}  // namespace

Expander build_expander(const ExpanderSpec& spec) {
  spec.validate();
  Expander e;
  if (spec.nodes <= spec.degree + 1) {
    e.graph = complete_graph(spec.nodes);
    e.certificate = certify_expansion(e.graph);
    e.attempts = 1;
    return e;
  }
  for (int attempt = 1; attempt <= kExpanderMaxAttempts; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    DynamicGraph g;
    if (!try_pairing(spec.nodes, spec.degree, rng, g)) continue;
    if (!is_connected(g)) continue;
    ExpansionCertificate cert = certify_expansion(g);
    if (cert.value < spec.min_h0) continue;
    e.graph = std::move(g);
    e.certificate = cert;
    e.attempts = attempt;
    return e;
  }
  throw std::runtime_error("expander: no certified " + std::to_string(spec.degree) + "-regular graph on " +
                           std::to_string(spec.nodes) + " nodes after " + std::to_string(kExpanderMaxAttempts) +
                           " attempts; relax min_h0");
}

Overlay overlay_graph(DynamicGraph& g, const std::vector<NodeId>& targets, const DynamicGraph& expander,
                      bool dummies) {
  if (static_cast<int>(targets.size()) != expander.node_count())
    throw std::invalid_argument("overlay: target count differs from expander size");
  Overlay out;
  for (auto [a, b] : expander.edges()) {
    NodeId x = targets[a], y = targets[b];
    if (dummies) {
      NodeId z = g.add_node();
      g.add_static_edge(x, z);
      g.add_static_edge(z, y);
      out.dummies.push_back(z);
      out.added.push_back(make_edge(x, z));
      out.added.push_back(make_edge(z, y));
    } else if (!g.has_edge(x, y)) {
      g.add_static_edge(x, y);
      out.added.push_back(make_edge(x, y));
    }
  }
  return out;
}

Overlay overlay_expander(DynamicGraph& g, const std::vector<NodeId>& targets, const ExpanderSpec& spec,
                         bool dummies) {
  ExpanderSpec s = spec;
  s.nodes = static_cast<int>(targets.size());
  return overlay_graph(g, targets, build_expander(s).graph, dummies);
}

}  // namespace oumv
