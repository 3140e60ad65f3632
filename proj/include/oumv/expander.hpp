#pragma once

#include <cstdint>
#include <vector>

#include "oumv/expansion.hpp"
#include "oumv/graph.hpp"

namespace oumv {

struct ExpanderSpec {
  int nodes = 0;
  int degree = 4;
  double min_h0 = 0.1;
  std::uint64_t seed = 1;

  void validate() const;
};

struct Expander {
  DynamicGraph graph;
  ExpansionCertificate certificate;
  int attempts = 0;
};

constexpr int kExpanderMaxAttempts = 1000;

// Random d-regular graph from a stub pairing, resampled until simple and certified.
// With nodes <= d + 1 the complete graph on the nodes is returned instead.
Expander build_expander(const ExpanderSpec& spec);

struct Overlay {
  std::vector<Edge> added;
  std::vector<NodeId> dummies;
};

// Maps expander node k to targets[k]. In dummy mode every expander edge (a,b) becomes a
// path a-x-b through a fresh node x. Edges already present are skipped.
Overlay overlay_expander(DynamicGraph& g, const std::vector<NodeId>& targets, const ExpanderSpec& spec,
                         bool dummies = false);

// Same, with an expander built beforehand.
Overlay overlay_graph(DynamicGraph& g, const std::vector<NodeId>& targets, const DynamicGraph& expander,
                      bool dummies = false);

}  // namespace oumv
