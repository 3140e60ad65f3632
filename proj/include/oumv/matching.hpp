#pragma once

#include <vector>

#include "oumv/graph.hpp"

namespace oumv {

constexpr NodeId kUnmatched = -1;

// Partner map; mate[v] == kUnmatched for free nodes.
struct Matching {
  std::vector<NodeId> mate;

  Matching() = default;
  explicit Matching(int nodes) : mate(nodes, kUnmatched) {}

  int size() const;
  bool matched(NodeId v) const { return mate[v] != kUnmatched; }
  void match(NodeId a, NodeId b);
  std::vector<Edge> pairs() const;
};

// Throws when the partner map is not involutive or uses a non-edge.
void validate_matching(const DynamicGraph& g, const Matching& m);

// Keeps only the pairs of `hint` that are still edges of g.
Matching restrict_matching(const DynamicGraph& g, const Matching& hint);

Matching hopcroft_karp(const DynamicGraph& g, const std::vector<int>& side, Matching start);
Matching edmonds_blossom(const DynamicGraph& g, Matching start);

// Exact maximum matching. Bipartite graphs use Hopcroft-Karp, others the blossom algorithm.
// A hint, when given, seeds the augmentation; otherwise pendant peeling plus greedy seeds it.
Matching max_matching(const DynamicGraph& g, const Matching* hint = nullptr);
int max_matching_size(const DynamicGraph& g);

bool augmenting_path_exists(const DynamicGraph& g, const Matching& m, NodeId s, NodeId t);

}  // namespace oumv
