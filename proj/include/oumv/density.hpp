#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "oumv/flow.hpp"
#include "oumv/graph.hpp"

namespace oumv {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

struct DensestResult {
  Rational density{0};
  std::vector<NodeId> nodes;
};

Rational density_of(const DynamicGraph& g, const std::vector<NodeId>& nodes);

// Core number of every node (Batagelj-Zaversnik bucket peeling).
std::vector<int> core_numbers(const DynamicGraph& g);

// Greedy peeling; returns the densest prefix seen, a 1/2-approximation.
DensestResult peeling_lower_bound(const DynamicGraph& g);

// Exact densest subgraph. Peeling gives a start value and prunes to its core; Dinkelbach
// iteration then solves one minimum cut on the parametric network per improvement.
DensestResult densest_subgraph(const DynamicGraph& g, FlowAlgorithm algo = FlowAlgorithm::dinic);

// True iff some nonempty S has |E(S)| > lambda |S|; fills `witness` with such an S.
bool density_exceeds(const DynamicGraph& g, const Rational& lambda, std::vector<NodeId>* witness,
                     FlowAlgorithm algo = FlowAlgorithm::dinic);

}  // namespace oumv
