#include "oumv/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>

namespace oumv {

std::string to_string(const UpdateOp& op) {
  return std::string(op.kind == UpdateOp::Kind::insert ? "insert" : "delete") + "(" + std::to_string(op.a) + "," +
         std::to_string(op.b) + ")";
}

DynamicGraph::DynamicGraph(int nodes) {
  if (nodes < 0) throw std::invalid_argument("negative node count");
  adj_.resize(static_cast<std::size_t>(nodes));
}

NodeId DynamicGraph::add_node() {
  adj_.emplace_back();
  return static_cast<NodeId>(adj_.size() - 1);
}

void DynamicGraph::check_pair(NodeId a, NodeId b) const {
  int n = node_count();
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::out_of_range("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
  if (a == b) throw std::invalid_argument("self-loop at node " + std::to_string(a));
}

bool DynamicGraph::has_edge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count() || a == b) return false;
  const auto& small = degree(a) <= degree(b) ? adj_[static_cast<std::size_t>(a)] : adj_[static_cast<std::size_t>(b)];
  NodeId other = degree(a) <= degree(b) ? b : a;
  return std::binary_search(small.begin(), small.end(), other);
}

void DynamicGraph::link(NodeId a, NodeId b) {
  auto& la = adj_[static_cast<std::size_t>(a)];
  auto& lb = adj_[static_cast<std::size_t>(b)];
  la.insert(std::lower_bound(la.begin(), la.end(), b), b);
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++m_;
}

void DynamicGraph::unlink(NodeId a, NodeId b) {
  auto& la = adj_[static_cast<std::size_t>(a)];
  auto& lb = adj_[static_cast<std::size_t>(b)];
  la.erase(std::lower_bound(la.begin(), la.end(), b));
  lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
  --m_;
}

void DynamicGraph::insert_edge(NodeId a, NodeId b) {
  check_pair(a, b);
  if (has_edge(a, b)) throw std::logic_error("duplicate insert of edge " + std::to_string(a) + "-" + std::to_string(b));
  link(a, b);
  if (logging_) log_.push_back({UpdateOp::Kind::insert, a, b});
}

void DynamicGraph::delete_edge(NodeId a, NodeId b) {
  check_pair(a, b);
  if (!has_edge(a, b)) throw std::logic_error("delete of missing edge " + std::to_string(a) + "-" + std::to_string(b));
  unlink(a, b);
  if (logging_) log_.push_back({UpdateOp::Kind::erase, a, b});
}

void DynamicGraph::apply(const UpdateOp& op) {
  if (op.kind == UpdateOp::Kind::insert)
    insert_edge(op.a, op.b);
  else
    delete_edge(op.a, op.b);
}

void DynamicGraph::add_static_edge(NodeId a, NodeId b) {
  check_pair(a, b);
  if (has_edge(a, b)) throw std::logic_error("duplicate static edge " + std::to_string(a) + "-" + std::to_string(b));
  link(a, b);
}

void DynamicGraph::remove_static_edge(NodeId a, NodeId b) {
  check_pair(a, b);
  if (!has_edge(a, b)) throw std::logic_error("missing static edge " + std::to_string(a) + "-" + std::to_string(b));
  unlink(a, b);
}

std::vector<Edge> DynamicGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (NodeId a = 0; a < node_count(); ++a)
    for (NodeId b : neighbors(a))
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool DynamicGraph::same_edges(const DynamicGraph& other) const {
  return node_count() == other.node_count() && adj_ == other.adj_;
}

DynamicGraph induced_subgraph(const DynamicGraph& g, const std::vector<NodeId>& nodes) {
  std::vector<int> index(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) index[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k);
  DynamicGraph h(static_cast<int>(nodes.size()));
  h.set_logging(false);
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (NodeId w : g.neighbors(nodes[k])) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(k)) h.add_static_edge(static_cast<NodeId>(k), j);
    }
  return h;
}

std::vector<int> bfs_all(const DynamicGraph& g, NodeId s) {
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), kInfinity);
  std::vector<NodeId> queue{s};
  dist[static_cast<std::size_t>(s)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId x = queue[head];
    for (NodeId y : g.neighbors(x))
      if (dist[static_cast<std::size_t>(y)] == kInfinity) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

int bfs_distance(const DynamicGraph& g, NodeId s, NodeId t) {
  if (s == t) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), kInfinity);
  std::vector<NodeId> queue{s};
  dist[static_cast<std::size_t>(s)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId x = queue[head];
    for (NodeId y : g.neighbors(x))
      if (dist[static_cast<std::size_t>(y)] == kInfinity) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        if (y == t) return dist[static_cast<std::size_t>(y)];
        queue.push_back(y);
      }
  }
  return kInfinity;
}

std::vector<int> component_ids(const DynamicGraph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.node_count()), -1);
  int c = 0;
  std::vector<NodeId> stack;
  for (NodeId r = 0; r < g.node_count(); ++r) {
    if (comp[static_cast<std::size_t>(r)] >= 0) continue;
    comp[static_cast<std::size_t>(r)] = c;
    stack.push_back(r);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : g.neighbors(x))
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = c;
          stack.push_back(y);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const DynamicGraph& g) {
  int c = 0;
  component_ids(g, &c);
  return c <= 1;
}

DegreeStats degree_stats(const DynamicGraph& g) {
  DegreeStats s;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    int d = g.degree(v);
    s.max_degree = std::max(s.max_degree, d);
    ++s.histogram[d];
  }
  return s;
}

BipartiteResult is_bipartite(const DynamicGraph& g) {
  BipartiteResult r;
  r.color.assign(static_cast<std::size_t>(g.node_count()), -1);
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (r.color[static_cast<std::size_t>(s)] >= 0) continue;
    r.color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId x = queue[head];
      for (NodeId y : g.neighbors(x)) {
        int& cy = r.color[static_cast<std::size_t>(y)];
        if (cy < 0) {
          cy = 1 - r.color[static_cast<std::size_t>(x)];
          queue.push_back(y);
        } else if (cy == r.color[static_cast<std::size_t>(x)]) {
          r.color.clear();
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  return r;
}

std::int64_t global_min_cut(const DynamicGraph& g) {
  int n = g.node_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  // Dense Stoer-Wagner; ties in the maximum-adjacency order go to the smallest id.
  std::vector<std::vector<std::int64_t>> w(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (auto [a, b] : g.edges()) {
    w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    w[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  std::vector<int> alive(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) alive[static_cast<std::size_t>(i)] = i;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  while (alive.size() > 1) {
    std::size_t k = alive.size();
    std::vector<std::int64_t> key(k, 0);
    std::vector<bool> added(k, false);
    int prev = -1, last = -1;
    for (std::size_t step = 0; step < k; ++step) {
      int sel = -1;
      for (std::size_t q = 0; q < k; ++q)
        if (!added[q] && (sel < 0 || key[q] > key[static_cast<std::size_t>(sel)])) sel = static_cast<int>(q);
      added[static_cast<std::size_t>(sel)] = true;
      prev = last;
      last = sel;
      if (step + 1 == k) best = std::min(best, key[static_cast<std::size_t>(sel)]);
      for (std::size_t q = 0; q < k; ++q)
        if (!added[q]) key[q] += w[static_cast<std::size_t>(alive[static_cast<std::size_t>(sel)])][static_cast<std::size_t>(alive[q])];
    }
    int a = alive[static_cast<std::size_t>(prev)], b = alive[static_cast<std::size_t>(last)];
    for (int x : alive) {
      w[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] += w[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)];
      w[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] = w[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
    }
    w[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 0;
    alive.erase(alive.begin() + last);
  }
  return best;
}

void write_edge_list(std::ostream& os, const DynamicGraph& g) {
  os << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
}

DynamicGraph read_edge_list(std::istream& is) {
  long long n = 0, m = 0;
  if (!(is >> n >> m) || n < 0 || m < 0) throw std::runtime_error("edge list: bad header");
  DynamicGraph g(static_cast<int>(n));
  g.set_logging(false);
  for (long long k = 0; k < m; ++k) {
    NodeId a = 0, b = 0;
    if (!(is >> a >> b)) throw std::runtime_error("edge list: truncated at edge " + std::to_string(k));
    g.add_static_edge(a, b);
  }
  g.set_logging(true);
  return g;
}

void write_dot(std::ostream& os, const DynamicGraph& g, const DotStyle& style) {
  std::set<Edge> hl;
  for (auto e : style.highlighted) hl.insert(make_edge(e.first, e.second));
  os << "graph G {\n  node [shape=circle, fontsize=9];\n";
  bool ranked = static_cast<int>(style.rank.size()) == g.node_count();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    os << "  " << v << " [label=\"";
    if (static_cast<int>(style.labels.size()) == g.node_count())
      os << style.labels[static_cast<std::size_t>(v)];
    else
      os << v;
    os << '"';
    if (static_cast<int>(style.color.size()) == g.node_count() && !style.color[static_cast<std::size_t>(v)].empty())
      os << ", style=filled, fillcolor=\"" << style.color[static_cast<std::size_t>(v)] << '"';
    os << "];\n";
  }
  if (ranked) {
    std::map<int, std::vector<NodeId>> by_rank;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (style.rank[static_cast<std::size_t>(v)] >= 0) by_rank[style.rank[static_cast<std::size_t>(v)]].push_back(v);
    for (const auto& [r, nodes] : by_rank) {
      os << "  { rank=same;";
      for (NodeId v : nodes) os << ' ' << v << ';';
      os << " }\n";
    }
  }
  for (auto [a, b] : g.edges()) {
    os << "  " << a << " -- " << b;
    if (hl.count({a, b})) os << " [color=red, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
}

}  // namespace oumv
