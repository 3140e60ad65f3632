#pragma once

// Brute-force oracles shared by the tests. Each one is written independently of the
// library algorithm it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "oumv/density.hpp"
#include "oumv/graph.hpp"
#include "oumv/instance.hpp"

namespace oracle {

using oumv::DynamicGraph;
using oumv::NodeId;

// vmv with the loop nesting reversed.
inline bool vmv_transposed(const oumv::BitVector& u, const oumv::BitMatrix& m, const oumv::BitVector& v) {
  bool any = false;
  for (int j = m.size(); j >= 1; --j)
    for (int i = m.size(); i >= 1; --i) any = any || (u.get(i) && m.get(i, j) && v.get(j));
  return any;
}

inline DynamicGraph random_graph(int n, double p, std::mt19937_64& rng) {
  DynamicGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_static_edge(a, b);
  return g;
}

inline DynamicGraph random_bipartite(int left, int right, double p, std::mt19937_64& rng) {
  DynamicGraph g(left + right);
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < left; ++a)
    for (int b = 0; b < right; ++b)
      if (coin(rng)) g.add_static_edge(a, left + b);
  return g;
}

// Maximum matching by exhaustive branching on the edge list.
inline int matching_size(const DynamicGraph& g) {
  std::vector<oumv::Edge> edges = g.edges();
  std::vector<char> used(static_cast<std::size_t>(g.node_count()), 0);
  int best = 0;
  std::function<void(std::size_t, int)> go = [&](std::size_t k, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - k) <= best) return;
    for (std::size_t e = k; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (used[a] || used[b]) continue;
      used[a] = used[b] = 1;
      go(e + 1, size + 1);
      used[a] = used[b] = 0;
    }
  };
  go(0, 0);
  return best;
}

// Maximum |E(S)|/|S| over all nonempty subsets.
inline oumv::Rational densest(const DynamicGraph& g) {
  int n = g.node_count();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : g.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  oumv::Rational best(0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int nodes = __builtin_popcount(s), twice = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) twice += __builtin_popcount(adj[v] & s);
    best = std::max(best, oumv::Rational(twice / 2, nodes));
  }
  return best;
}

// Minimum |E(S, V-S)| / |S| over nonempty S with |S| <= N/2.
inline oumv::Rational expansion(const DynamicGraph& g) {
  int n = g.node_count();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : g.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  oumv::Rational best(1 << 20);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (2 * size > n) continue;
    int cut = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) cut += __builtin_popcount(adj[v] & ~s & ((1u << n) - 1));
    best = std::min(best, oumv::Rational(cut, size));
  }
  return best;
}

// Minimum cut over all bipartitions into two nonempty sides.
inline std::int64_t min_cut(const DynamicGraph& g) {
  int n = g.node_count();
  std::int64_t best = -1;
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
    std::int64_t cut = 0;
    for (auto [a, b] : g.edges()) cut += ((s >> a) & 1) != ((s >> b) & 1);
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

// Hop distance by repeated relaxation; -1 when unreachable.
inline int distance(const DynamicGraph& g, NodeId s, NodeId t) {
  int n = g.node_count();
  std::vector<int> d(static_cast<std::size_t>(n), n + 1);
  d[s] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : g.edges()) {
      if (d[a] + 1 < d[b]) d[b] = d[a] + 1, changed = true;
      if (d[b] + 1 < d[a]) d[a] = d[b] + 1, changed = true;
    }
  }
  return d[t] > n ? -1 : d[t];
}

inline oumv::BitVector random_vector(int n, std::mt19937_64& rng) {
  oumv::BitVector v(n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i <= n; ++i) v.set(i, coin(rng));
  return v;
}

inline oumv::BitMatrix random_matrix(int n, std::mt19937_64& rng, double p = 0.5) {
  oumv::BitMatrix m(n);
  std::bernoulli_distribution coin(p);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i, j, coin(rng));
  return m;
}

inline oumv::BitVector unit(int n, int i) {
  oumv::BitVector v(n);
  v.set(i, true);
  return v;
}

}  // namespace oracle
