#include "oumv/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace oumv {

FlowNetwork::FlowNetwork(int nodes) : head_(nodes) {}

void FlowNetwork::add_arc(int from, int to, Capacity cap, Capacity reverse_cap) {
  if (cap < 0 || reverse_cap < 0) throw std::invalid_argument("negative capacity");
  head_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap});
  head_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, reverse_cap});
}

Capacity FlowNetwork::dinic(int s, int t) {
  int n = node_count();
  std::vector<int> level(n), it(n);
  Capacity total = 0;
  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int k : head_[v])
        if (arcs_[k].cap > 0 && level[arcs_[k].to] < 0) {
          level[arcs_[k].to] = level[v] + 1;
          queue.push_back(arcs_[k].to);
        }
    }
    return level[t] >= 0;
  };
  // Iterative blocking-flow DFS; path holds arc ids from s.
  auto blocking = [&]() {
    Capacity pushed = 0;
    std::vector<int> path;
    int v = s;
    while (true) {
      if (v == t) {
        Capacity f = std::numeric_limits<Capacity>::max();
        for (int k : path) f = std::min(f, arcs_[k].cap);
        std::size_t cut = path.size();
        for (std::size_t q = 0; q < path.size(); ++q) {
          int k = path[q];
          arcs_[k].cap -= f;
          arcs_[k ^ 1].cap += f;
          if (arcs_[k].cap == 0 && cut == path.size()) cut = q;
        }
        pushed += f;
        path.resize(cut);
        v = path.empty() ? s : arcs_[path.back()].to;
        continue;
      }
      bool moved = false;
      for (; it[v] < static_cast<int>(head_[v].size()); ++it[v]) {
        int k = head_[v][it[v]];
        if (arcs_[k].cap > 0 && level[arcs_[k].to] == level[v] + 1) {
          path.push_back(k);
          v = arcs_[k].to;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      if (v == s) break;
      level[v] = -1;
      path.pop_back();
      v = path.empty() ? s : arcs_[path.back()].to;
      ++it[v];
    }
    return pushed;
  };
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    total += blocking();
  }
  return total;
}

Capacity FlowNetwork::push_relabel(int s, int t) {
  int n = node_count();
  std::vector<Capacity> excess(n, 0);
  std::vector<int> height(n, 0), count(2 * n + 1, 0), current(n, 0);
  std::deque<int> active;
  std::vector<char> queued(n, 0);
  height[s] = n;
  count[0] = n - 1;
  count[n] = 1;
  for (int k : head_[s]) {
    Capacity c = arcs_[k].cap;
    if (c == 0) continue;
    arcs_[k].cap = 0;
    arcs_[k ^ 1].cap += c;
    excess[arcs_[k].to] += c;
    excess[s] -= c;
    int w = arcs_[k].to;
    if (w != t && w != s && !queued[w]) {
      queued[w] = 1;
      active.push_back(w);
    }
  }
  while (!active.empty()) {
    int v = active.front();
    active.pop_front();
    queued[v] = 0;
    while (excess[v] > 0) {
      if (current[v] == static_cast<int>(head_[v].size())) {
        // Relabel, with the gap heuristic.
        int old = height[v];
        int best = 2 * n;
        for (int k : head_[v])
          if (arcs_[k].cap > 0) best = std::min(best, height[arcs_[k].to] + 1);
        --count[old];
        height[v] = best;
        ++count[best];
        current[v] = 0;
        if (count[old] == 0 && old < n) {
          for (int x = 0; x < n; ++x)
            if (x != s && height[x] > old && height[x] < n) {
              --count[height[x]];
              height[x] = n + 1;
              ++count[height[x]];
              current[x] = 0;
            }
        }
        if (height[v] >= 2 * n) break;
        continue;
      }
      int k = head_[v][current[v]];
      int w = arcs_[k].to;
      if (arcs_[k].cap > 0 && height[v] == height[w] + 1) {
        Capacity f = std::min(excess[v], arcs_[k].cap);
        arcs_[k].cap -= f;
        arcs_[k ^ 1].cap += f;
        excess[v] -= f;
        excess[w] += f;
        if (w != s && w != t && !queued[w]) {
          queued[w] = 1;
          active.push_back(w);
        }
      } else {
        ++current[v];
      }
    }
  }
  return excess[t];
}

std::vector<char> FlowNetwork::source_side(int t) const {
  std::vector<char> reaches(node_count(), 0);
  std::vector<int> stack{t};
  reaches[t] = 1;
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    for (int k : head_[y]) {
      int x = arcs_[k].to;
      if (arcs_[k ^ 1].cap > 0 && !reaches[x]) {
        reaches[x] = 1;
        stack.push_back(x);
      }
    }
  }
  for (auto& r : reaches) r = !r;
  return reaches;
}

}  // namespace oumv
