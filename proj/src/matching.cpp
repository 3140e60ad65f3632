#include "oumv/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace oumv {

int Matching::size() const {
  int c = 0;
  for (NodeId v = 0; v < static_cast<NodeId>(mate.size()); ++v)
    if (mate[v] > v) ++c;
  return c;
}

void Matching::match(NodeId a, NodeId b) {
  mate[a] = b;
  mate[b] = a;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (NodeId v = 0; v < static_cast<NodeId>(mate.size()); ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  return out;
}

void validate_matching(const DynamicGraph& g, const Matching& m) {
  if (static_cast<int>(m.mate.size()) != g.node_count()) throw std::invalid_argument("matching size differs from graph");
  for (NodeId v = 0; v < g.node_count(); ++v) {
    NodeId w = m.mate[v];
    if (w == kUnmatched) continue;
    if (w < 0 || w >= g.node_count() || m.mate[w] != v)
      throw std::invalid_argument("matching is not involutive at node " + std::to_string(v));
    if (!g.has_edge(v, w))
      throw std::invalid_argument("matched pair " + std::to_string(v) + "-" + std::to_string(w) + " is not an edge");
  }
}

Matching restrict_matching(const DynamicGraph& g, const Matching& hint) {
  Matching m(g.node_count());
  if (static_cast<int>(hint.mate.size()) != g.node_count()) return m;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    NodeId w = hint.mate[v];
    if (w > v && w < g.node_count() && hint.mate[w] == v && g.has_edge(v, w)) m.match(v, w);
  }
  return m;
}

namespace {

// Pendant peeling (always safe for maximum matchings) followed by min-degree greedy.
Matching initial_matching(const DynamicGraph& g) {
  int n = g.node_count();
  Matching m(n);
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  std::vector<NodeId> pending;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) pending.push_back(v);
  }
  auto remove = [&](NodeId x) {
    gone[x] = 1;
    for (NodeId y : g.neighbors(x))
      if (!gone[y] && --deg[y] == 1) pending.push_back(y);
  };
  auto drain = [&]() {
    while (!pending.empty()) {
      NodeId v = pending.back();
      pending.pop_back();
      if (gone[v] || deg[v] != 1) continue;
      NodeId w = kUnmatched;
      for (NodeId y : g.neighbors(v))
        if (!gone[y]) {
          w = y;
          break;
        }
      m.match(v, w);
      gone[v] = 1;
      remove(w);
    }
  };
  drain();
  for (NodeId v = 0; v < n; ++v) {
    if (gone[v]) continue;
    NodeId best = kUnmatched;
    for (NodeId y : g.neighbors(v))
      if (!gone[y] && (best == kUnmatched || deg[y] < deg[best])) best = y;
    if (best == kUnmatched) continue;
    m.match(v, best);
    remove(v);
    remove(best);
    drain();
  }
  return m;
}

class Blossom {
 public:
  Blossom(const DynamicGraph& g, Matching& m)
      : g_(g), m_(m), n_(g.node_count()), parent_(n_, -1), base_(n_), used_(n_, 0), in_blossom_(n_, 0), dead_(n_, 0), lca_mark_(n_, 0), stamp_(n_, 0) {
    for (int v = 0; v < n_; ++v) base_[v] = v;
  }

  // Alternating-tree search from root. Free nodes other than `target` are treated as absent
  // when target >= 0. Returns the free endpoint reached, or -1.
  NodeId search(NodeId root, NodeId target) {
    for (NodeId v : touched_) {
      parent_[v] = -1;
      base_[v] = v;
      used_[v] = 0;
    }
    touched_.clear();
    queue_.clear();
    ++sid_;
    touch(root);
    used_[root] = 1;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      NodeId v = queue_[head];
      for (NodeId to : g_.neighbors(v)) {
        if (dead_[to] || base_[v] == base_[to] || m_.mate[v] == to) continue;
        if (target >= 0 && to != target && to != root && m_.mate[to] == kUnmatched) continue;
        touch(to);
        if (to == root || (m_.mate[to] != kUnmatched && parent_[m_.mate[to]] != -1)) {
          NodeId cur = lca(v, to);
          for (NodeId x : touched_) in_blossom_[x] = 0;
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          std::size_t count = touched_.size();
          for (std::size_t k = 0; k < count; ++k) {
            NodeId x = touched_[k];
            if (in_blossom_[base_[x]]) {
              base_[x] = cur;
              if (!used_[x]) {
                used_[x] = 1;
                queue_.push_back(x);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (m_.mate[to] == kUnmatched) return to;
          NodeId w = m_.mate[to];
          touch(w);
          used_[w] = 1;
          queue_.push_back(w);
        }
      }
    }
    return -1;
  }

  // A failed search leaves a Hungarian tree; its nodes never lie on a later augmenting path.
  void bury() {
    for (NodeId v : touched_) dead_[v] = 1;
  }

  void augment(NodeId end) {
    NodeId v = end;
    while (v != -1) {
      NodeId pv = parent_[v];
      NodeId ppv = m_.mate[pv];
      m_.mate[v] = pv;
      m_.mate[pv] = v;
      v = ppv;
    }
  }

 private:
  void touch(NodeId v) {
    if (stamp_[v] != sid_) {
      stamp_[v] = sid_;
      touched_.push_back(v);
    }
  }

  NodeId lca(NodeId a, NodeId b) {
    ++lca_epoch_;
    while (true) {
      a = base_[a];
      lca_mark_[a] = lca_epoch_;
      if (m_.mate[a] == kUnmatched) break;
      a = parent_[m_.mate[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b] == lca_epoch_) return b;
      b = parent_[m_.mate[b]];
    }
  }

  void mark_path(NodeId v, NodeId b, NodeId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[m_.mate[v]]] = 1;
      parent_[v] = child;
      child = m_.mate[v];
      touch(child);
      v = parent_[m_.mate[v]];
    }
  }

  const DynamicGraph& g_;
  Matching& m_;
  int n_;
  std::vector<NodeId> parent_, base_;
  std::vector<char> used_, in_blossom_, dead_;
  std::vector<unsigned> lca_mark_;
  unsigned lca_epoch_ = 0;
  std::vector<unsigned> stamp_;
  unsigned sid_ = 0;
  std::vector<NodeId> touched_, queue_;
};

}  // namespace

Matching edmonds_blossom(const DynamicGraph& g, Matching m) {
  Blossom b(g, m);
  for (NodeId r = 0; r < g.node_count(); ++r) {
    if (m.mate[r] != kUnmatched || g.degree(r) == 0) continue;
    NodeId end = b.search(r, -1);
    if (end >= 0)
      b.augment(end);
    else
      b.bury();
  }
  return m;
}

Matching hopcroft_karp(const DynamicGraph& g, const std::vector<int>& side, Matching m) {
  int n = g.node_count();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<NodeId> left;
  for (NodeId v = 0; v < n; ++v)
    if (side[v] == 0) left.push_back(v);
  std::vector<int> dist(n, kInf);
  std::vector<std::size_t> it(n, 0);
  std::vector<NodeId> queue;

  auto bfs = [&]() {
    queue.clear();
    bool found = false;
    for (NodeId v : left) {
      if (m.mate[v] == kUnmatched) {
        dist[v] = 0;
        queue.push_back(v);
      } else {
        dist[v] = kInf;
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      NodeId v = queue[h];
      for (NodeId w : g.neighbors(v)) {
        NodeId x = m.mate[w];
        if (x == kUnmatched) {
          found = true;
        } else if (dist[x] == kInf) {
          dist[x] = dist[v] + 1;
          queue.push_back(x);
        }
      }
    }
    return found;
  };

  // Iterative layered DFS.
  auto dfs = [&](NodeId root) {
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
      NodeId v = stack.back();
      const auto& nb = g.neighbors(v);
      bool advanced = false;
      while (it[v] < nb.size()) {
        NodeId w = nb[it[v]++];
        NodeId x = m.mate[w];
        if (x == kUnmatched) {
          // Flip along the stack; each stack node v_k pairs with the neighbor it just advanced on.
          NodeId carry = w;
          for (std::size_t k = stack.size(); k-- > 0;) {
            NodeId u = stack[k];
            NodeId prev = m.mate[u];
            m.mate[u] = carry;
            m.mate[carry] = u;
            carry = prev;
          }
          return true;
        }
        if (dist[x] == dist[v] + 1) {
          stack.push_back(x);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[v] = kInf;
        stack.pop_back();
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (NodeId v : left)
      if (m.mate[v] == kUnmatched) dfs(v);
  }
  return m;
}

Matching max_matching(const DynamicGraph& g, const Matching* hint) {
  Matching start = hint ? restrict_matching(g, *hint) : initial_matching(g);
  auto bip = is_bipartite(g);
  if (bip.bipartite) return hopcroft_karp(g, bip.color, std::move(start));
  return edmonds_blossom(g, std::move(start));
}

int max_matching_size(const DynamicGraph& g) { return max_matching(g).size(); }

bool augmenting_path_exists(const DynamicGraph& g, const Matching& m, NodeId s, NodeId t) {
  validate_matching(g, m);
  if (m.matched(s) || m.matched(t)) throw std::invalid_argument("augmenting path endpoints must be unmatched");
  if (s == t) return false;
  Matching copy = m;
  Blossom b(g, copy);
  return b.search(s, t) == t;
}

}  // namespace oumv
