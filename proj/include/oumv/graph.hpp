#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oumv {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct UpdateOp {
  enum class Kind { insert, erase };
  Kind kind;
  NodeId a;
  NodeId b;

  bool operator==(const UpdateOp&) const = default;
};

std::string to_string(const UpdateOp& op);

// Simple undirected graph with sorted adjacency and an append-only update log.
class DynamicGraph {
 public:
  DynamicGraph() = default;
  explicit DynamicGraph(int nodes);

  int node_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return m_; }
  NodeId add_node();

  bool has_edge(NodeId a, NodeId b) const;
  void insert_edge(NodeId a, NodeId b);
  void delete_edge(NodeId a, NodeId b);
  void apply(const UpdateOp& op);

  // Construction-time edges are not logged; the log records dynamic updates only.
  void add_static_edge(NodeId a, NodeId b);
  void remove_static_edge(NodeId a, NodeId b);

  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(NodeId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  std::vector<Edge> edges() const;

  const std::vector<UpdateOp>& log() const { return log_; }
  void clear_log() { log_.clear(); }
  void set_logging(bool on) { logging_ = on; }

  bool same_edges(const DynamicGraph& other) const;

 private:
  void check_pair(NodeId a, NodeId b) const;
  void link(NodeId a, NodeId b);
  void unlink(NodeId a, NodeId b);

  std::vector<std::vector<NodeId>> adj_;
  std::int64_t m_ = 0;
  std::vector<UpdateOp> log_;
  bool logging_ = true;
};

DynamicGraph induced_subgraph(const DynamicGraph& g, const std::vector<NodeId>& nodes);

constexpr int kInfinity = -1;

// Hop distance, or kInfinity when t is unreachable.
int bfs_distance(const DynamicGraph& g, NodeId s, NodeId t);
std::vector<int> bfs_all(const DynamicGraph& g, NodeId s);
bool is_connected(const DynamicGraph& g);
std::vector<int> component_ids(const DynamicGraph& g, int* count = nullptr);

struct DegreeStats {
  int max_degree = 0;
  std::map<int, std::int64_t> histogram;
};

DegreeStats degree_stats(const DynamicGraph& g);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> color;
};

BipartiteResult is_bipartite(const DynamicGraph& g);

// Stoer-Wagner global minimum cut; 0 for disconnected graphs.
std::int64_t global_min_cut(const DynamicGraph& g);

void write_edge_list(std::ostream& os, const DynamicGraph& g);
DynamicGraph read_edge_list(std::istream& is);

struct DotStyle {
  std::vector<std::string> labels;
  std::vector<int> rank;
  std::vector<std::string> color;
  std::vector<Edge> highlighted;
};

void write_dot(std::ostream& os, const DynamicGraph& g, const DotStyle& style = {});

}  // namespace oumv
