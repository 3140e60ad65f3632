#pragma once

#include <cstdint>
#include <vector>

namespace oumv {

using Capacity = std::int64_t;

// Residual network with paired arcs; arc k and k^1 are mutual reverses.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  int node_count() const { return static_cast<int>(head_.size()); }
  void add_arc(int from, int to, Capacity cap, Capacity reverse_cap = 0);

  Capacity dinic(int s, int t);
  Capacity push_relabel(int s, int t);

  // Nodes that cannot reach t in the residual network; after a maximum flow or
  // maximum preflow this is the source side of a minimum cut.
  std::vector<char> source_side(int t) const;

 private:
  struct Arc {
    int to;
    Capacity cap;
  };
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
};

enum class FlowAlgorithm { dinic, push_relabel };

}  // namespace oumv
