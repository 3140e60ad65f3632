#include "oumv/densest_gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "oumv/expander.hpp"
#include "oumv/powerlaw.hpp"

namespace oumv {

namespace {

DynamicGraph local_graph(int nodes, const std::vector<Edge>& edges) {
  DynamicGraph g(nodes);
  g.set_logging(false);
  for (auto [a, b] : edges) g.add_static_edge(a, b);
  return g;
}

bool circulant(int nodes, const std::vector<int>& strides, std::vector<Edge>& out) {
  DynamicGraph g(nodes);
  g.set_logging(false);
  for (int s : strides)
    for (int k = 0; k < nodes; ++k) {
      int a = k, b = (k + s) % nodes;
      if (a == b || g.has_edge(a, b)) return false;
      g.add_static_edge(a, b);
    }
  out = g.edges();
  return true;
}

}  // namespace

CirculantGadget build_vector_gadget(int nodes, int d, std::uint64_t seed) {
  if (d < 3) throw std::invalid_argument("gadget: d must be at least 3");
  if (nodes < 2 * d + 1)
    throw std::invalid_argument("gadget: a " + std::to_string(2 * d) + "-regular graph needs at least " +
                                std::to_string(2 * d + 1) + " nodes, got " + std::to_string(nodes));
  std::vector<int> coprime, other;
  for (int s = 1; 2 * s < nodes; ++s) (std::gcd(s, nodes) == 1 ? coprime : other).push_back(s);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> a = coprime, b = other;
    if (seed != 0 || attempt > 0) {
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
    }
    a.insert(a.end(), b.begin(), b.end());
    std::vector<int> strides(a.begin(), a.begin() + d);
    std::sort(strides.begin(), strides.end());
    CirculantGadget c;
    if (!circulant(nodes, strides, c.edges)) continue;
    c.min_cut = global_min_cut(local_graph(nodes, c.edges));
    if (c.min_cut < 6) continue;
    c.nodes = nodes;
    c.d = d;
    c.strides = strides;
    return c;
  }
  throw std::runtime_error("gadget: no 6-edge-connected circulant found on " + std::to_string(nodes) + " nodes");
}

CirculantGadget build_matrix_gadget(int nodes, int d, std::uint64_t seed) {
  CirculantGadget c = build_vector_gadget(nodes, d, seed);
  int s0 = c.strides.front();
  // Relabel so that the removed edge (0, s0) becomes (0, 1).
  auto relabel = [&](int x) { return x == s0 ? 1 : x == 1 ? s0 : x; };
  std::vector<Edge> edges;
  for (auto [a, b] : c.edges) {
    Edge e = make_edge(relabel(a), relabel(b));
    if (e != Edge{0, 1}) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  c.edges = edges;
  c.min_cut = global_min_cut(local_graph(nodes, c.edges));
  return c;
}

namespace {

NodeId make_node(DynamicGraph& g, Layout& lay, const std::string& name, const std::string& group, int layer = 0) {
  NodeId v = g.add_node();
  lay.attach(v, name, layer, group);
  return v;
}

// Smallest node-disjoint edges in lexicographic order, preferring those that avoid `avoid`.
std::vector<Edge> pick_removals(const std::vector<Edge>& edges, int count, const std::vector<char>& avoid,
                                bool strict) {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> out;
  std::vector<char> used(avoid.size(), 0);
  for (int pass = 0; pass < 2 && static_cast<int>(out.size()) < count; ++pass) {
    if (pass == 1 && strict) break;
    for (auto [a, b] : sorted) {
      if (static_cast<int>(out.size()) == count) break;
      if (used[a] || used[b]) continue;
      if (pass == 0 && (avoid[a] || avoid[b])) continue;
      used[a] = used[b] = 1;
      out.emplace_back(a, b);
    }
  }
  if (static_cast<int>(out.size()) < count) throw std::runtime_error("gadget: not enough removable edges");
  return out;
}

std::string gadget_name(const std::string& set, int i) { return set + "_" + std::to_string(i); }
std::string gadget_name(const std::string& set, int i, int j) {
  return set + "_" + std::to_string(i) + "," + std::to_string(j);
}

// G0: vector gadgets U_i, V_j and matrix gadgets M_ij with their cross edges. With
// `cycles`, every gadget also gets a 4-cycle that absorbs degree changes.
DenseBuild build_core(DenseVariant variant, int n, const BitMatrix& m, int d, bool cycles) {
  if (n < 1) throw std::invalid_argument("dense gadget: n must be positive");
  if (m.size() != n) throw std::invalid_argument("dense gadget: matrix dimension differs from n");
  DenseBuild b;
  DenseLayout& l = b.layout;
  DynamicGraph& g = b.graph;
  g.set_logging(false);
  l.variant = variant;
  l.n = n;
  l.d = d;
  l.vector_nodes = std::max(n, 2 * d + 1);
  l.matrix_nodes = std::max(n * n, 2 * d + 1);
  l.vector_gadget = build_vector_gadget(l.vector_nodes, d);
  l.matrix_gadget = build_matrix_gadget(l.matrix_nodes, d);
  l.threshold = Rational(d) + Rational(1, l.matrix_nodes + 2 * l.vector_nodes);

  std::vector<char> cross(l.vector_nodes, 0);
  for (int j = 0; j < n; ++j) cross[j] = 1;
  std::vector<Edge> vrem = pick_removals(l.vector_gadget.edges, 2, cross, false);
  std::vector<char> designated(l.matrix_nodes, 0);
  designated[0] = designated[1] = 1;
  std::vector<Edge> mrem = pick_removals(l.matrix_gadget.edges, cycles ? 2 : 1, designated, true);

  auto vector_gadget = [&](const std::string& set, std::vector<std::vector<NodeId>>& out,
                           std::vector<std::array<Edge, 2>>& removal) {
    out.assign(n + 1, {});
    removal.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) {
      out[i].assign(l.vector_nodes + 1, -1);
      for (int j = 1; j <= l.vector_nodes; ++j)
        out[i][j] = make_node(g, l.labels, label(gadget_name(set, i), j), set);
      for (auto [a, c] : l.vector_gadget.edges) g.add_static_edge(out[i][a + 1], out[i][c + 1]);
      for (int k = 0; k < 2; ++k) removal[i][k] = {out[i][vrem[k].first + 1], out[i][vrem[k].second + 1]};
    }
  };
  vector_gadget("U", l.u, l.u_removal);
  vector_gadget("V", l.v, l.v_removal);

  l.m.assign(n + 1, std::vector<std::vector<NodeId>>(n + 1));
  l.m_removed.assign(n + 1, std::vector<std::vector<Edge>>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<NodeId>& nodes = l.m[i][j];
      for (int k = 0; k < l.matrix_nodes; ++k)
        nodes.push_back(make_node(g, l.labels, label(gadget_name("M", i, j), k), "M"));
      for (auto [a, c] : l.matrix_gadget.edges) g.add_static_edge(nodes[a], nodes[c]);
      g.add_static_edge(l.u[i][j], nodes[0]);
      g.add_static_edge(l.v[j][i], nodes[1]);
    }

  if (cycles) {
    const char* xs = "abcd";
    auto cycle = [&](const std::string& name) {
      std::array<NodeId, 4> c{};
      for (int x = 0; x < 4; ++x) c[x] = make_node(g, l.labels, name + "[" + xs[x] + "]", "C");
      for (int x = 0; x < 4; ++x) g.add_static_edge(c[x], c[(x + 1) % 4]);
      return c;
    };
    l.u_cycle.assign(n + 1, {});
    l.v_cycle.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) l.u_cycle[i] = cycle(gadget_name("Cu", i));
    for (int j = 1; j <= n; ++j) l.v_cycle[j] = cycle(gadget_name("Cv", j));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::array<NodeId, 4> c = cycle(gadget_name("C", i, j));
        if (m.get(i, j)) continue;
        const std::vector<NodeId>& nodes = l.m[i][j];
        std::array<NodeId, 4> ends = {nodes[mrem[0].first], nodes[mrem[0].second], nodes[mrem[1].first],
                                      nodes[mrem[1].second]};
        g.remove_static_edge(ends[0], ends[1]);
        g.remove_static_edge(ends[2], ends[3]);
        g.remove_static_edge(c[0], c[1]);
        g.remove_static_edge(c[2], c[3]);
        for (int x = 0; x < 4; ++x) g.add_static_edge(ends[x], c[x]);
        l.m_removed[i][j] = {{ends[0], ends[1]}, {ends[2], ends[3]}};
      }
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (!m.get(i, j)) {
          Edge e{l.m[i][j][mrem[0].first], l.m[i][j][mrem[0].second]};
          g.remove_static_edge(e.first, e.second);
          l.m_removed[i][j] = {e};
        }
  }
  l.core_nodes = g.node_count();
  return b;
}

}  // namespace

DenseBuild build_dense_const(int n, const BitMatrix& m, int d) {
  if (n < 3) throw std::invalid_argument("dense gadget: n must be at least 3");
  DenseBuild b = build_core(DenseVariant::constant, n, m, d, false);
  std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  b.layout.formula_nodes = n2 * n2 + 2 * n2;
  b.graph.set_logging(true);
  return b;
}

DenseBuild build_dense_expander(int n, const BitMatrix& m, int d, int d_prime, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("dense gadget: n must be at least 3");
  if (d_prime > d - 2) throw std::invalid_argument("dense gadget: d' must be at most d - 2");
  if (d_prime < 3) throw std::invalid_argument("dense gadget: d' must be at least 3 for an expander");
  DenseBuild b = build_core(DenseVariant::expander, n, m, d, false);
  DenseLayout& l = b.layout;
  l.d_prime = d_prime;
  int core = l.core_nodes;
  Expander e = build_expander(ExpanderSpec{core, d_prime, 0.1, seed});
  std::vector<NodeId> copy(core);
  for (int k = 0; k < core; ++k) copy[k] = make_node(b.graph, l.labels, label("G1", k + 1), "G1");
  overlay_graph(b.graph, copy, e.graph);
  for (int k = 0; k < core; ++k) b.graph.add_static_edge(k, copy[k]);
  std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  l.formula_nodes = 2 * n2 * n2 + 4 * n2;
  l.certificate = expansion_lower_bound_spectral(b.graph);
  b.graph.set_logging(true);
  return b;
}

DenseBuild build_dense_powerlaw(int n, double beta, const BitMatrix& m) {
  if (n < 3) throw std::invalid_argument("dense gadget: n must be at least 3");
  if (!(beta > 2) || !(zeta(beta - 1) < 2))
    throw std::invalid_argument("dense gadget: power law needs zeta(beta - 1) < 2 (beta > 2.74), got beta = " +
                                std::to_string(beta));
  DenseBuild b = build_core(DenseVariant::powerlaw, n, m, 3, true);
  DenseLayout& l = b.layout;
  std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  l.formula_nodes = n2 * n2 + 6 * n2 + 8LL * n;
  std::map<int, std::int64_t> need = degree_need(b.graph);
  double alpha = alpha_for_counts(need, beta);
  // Stars for every other degree, then a perfect matching on the leftover degree-1 nodes.
  for (;; alpha += std::log(1.25)) {
    int dmax = max_realisable_degree(alpha, beta);
    std::int64_t leaves = 0;
    for (int k = 2; k <= dmax; ++k) {
      std::int64_t have = need.count(k) ? need.at(k) : 0;
      leaves += k * (power_law_count(alpha, beta, k) - have);
    }
    if (power_law_count(alpha, beta, 1) >= leaves) break;
  }
  l.alpha = alpha;
  l.beta = beta;
  int dmax = max_realisable_degree(alpha, beta);
  for (int k = 1; k <= dmax; ++k) l.targets[k] = power_law_count(alpha, beta, k);
  std::int64_t ones = l.targets[1];
  int hub = 0, leaf = 0;
  for (int k = 2; k <= dmax; ++k) {
    std::int64_t have = need.count(k) ? need.at(k) : 0;
    for (std::int64_t r = 0; r < l.targets[k] - have; ++r) {
      NodeId c = make_node(b.graph, l.labels, label("S", ++hub), "host");
      for (int x = 0; x < k; ++x) b.graph.add_static_edge(c, make_node(b.graph, l.labels, label("H", ++leaf), "host"));
      ones -= k;
    }
  }
  l.deviations = static_cast<int>(ones % 2);
  for (std::int64_t r = 0; r + 1 < ones; r += 2) {
    NodeId a = make_node(b.graph, l.labels, label("H", ++leaf), "host");
    NodeId c = make_node(b.graph, l.labels, label("H", ++leaf), "host");
    b.graph.add_static_edge(a, c);
  }
  b.graph.set_logging(true);
  return b;
}

namespace {

void restore(DynamicGraph& g, const std::array<Edge, 2>& removal, const std::vector<std::array<NodeId, 4>>& cycles,
             int i, int& ops) {
  if (!cycles.empty()) {
    const std::array<NodeId, 4>& c = cycles[i];
    std::array<NodeId, 4> ends = {removal[0].first, removal[0].second, removal[1].first, removal[1].second};
    if (!g.has_edge(ends[0], c[0])) return;
    for (int x = 0; x < 4; ++x) g.delete_edge(ends[x], c[x]);
    g.insert_edge(ends[0], ends[1]);
    g.insert_edge(ends[2], ends[3]);
    g.insert_edge(c[0], c[1]);
    g.insert_edge(c[2], c[3]);
    ops += 8;
    return;
  }
  for (auto [a, b] : removal)
    if (!g.has_edge(a, b)) {
      g.insert_edge(a, b);
      ++ops;
    }
}

void remove(DynamicGraph& g, const std::array<Edge, 2>& removal, const std::vector<std::array<NodeId, 4>>& cycles,
            int i, int& ops) {
  for (auto [a, b] : removal) g.delete_edge(a, b);
  ops += 2;
  if (cycles.empty()) return;
  const std::array<NodeId, 4>& c = cycles[i];
  std::array<NodeId, 4> ends = {removal[0].first, removal[0].second, removal[1].first, removal[1].second};
  g.delete_edge(c[0], c[1]);
  g.delete_edge(c[2], c[3]);
  for (int x = 0; x < 4; ++x) g.insert_edge(ends[x], c[x]);
  ops += 6;
}

}  // namespace

int apply_pair_dense(DynamicGraph& g, const DenseLayout& l, const BitVector& u, const BitVector& v) {
  if (u.size() != l.n || v.size() != l.n) throw std::invalid_argument("vector dimension differs from n");
  int ops = 0;
  for (int i = 1; i <= l.n; ++i) {
    restore(g, l.u_removal[i], l.u_cycle, i, ops);
    restore(g, l.v_removal[i], l.v_cycle, i, ops);
  }
  for (int i = 1; i <= l.n; ++i) {
    if (!u.get(i)) remove(g, l.u_removal[i], l.u_cycle, i, ops);
    if (!v.get(i)) remove(g, l.v_removal[i], l.v_cycle, i, ops);
  }
  return ops;
}

bool decode_dense(const DenseLayout& l, const Rational& density) { return density >= l.threshold; }

bool decide_dense(const DynamicGraph& g, const DenseLayout& l, DensestResult* result) {
  DensestResult r = densest_subgraph(g);
  bool bit = decode_dense(l, r.density);
  if (result) *result = std::move(r);
  return bit;
}

namespace {

std::string variant_name(DenseVariant v) {
  switch (v) {
    case DenseVariant::constant: return "const";
    case DenseVariant::expander: return "expander";
    case DenseVariant::powerlaw: return "powerlaw";
  }
  return "?";
}

class DenseDriver : public ReductionDriver {
 public:
  explicit DenseDriver(DenseBuild b) : layout_(std::move(b.layout)) { graph_ = std::move(b.graph); }

  std::string family() const override { return "densest"; }
  std::string variant() const override { return variant_name(layout_.variant); }
  int dimension() const override { return layout_.n; }
  const Layout& layout() const override { return layout_.labels; }
  Query query() const override { return {QueryKind::density, -1, -1}; }

  std::vector<UpdateOp> begin_pair(const BitVector& u, const BitVector& v) override {
    return record([&] { apply_pair_dense(graph_, layout_, u, v); });
  }

  bool decode(const Answer& a) const override { return decode_dense(layout_, a.density); }
  std::optional<std::int64_t> formula_nodes() const override {
    if (layout_.variant == DenseVariant::powerlaw) return std::nullopt;
    return layout_.formula_nodes;
  }
  std::string rule() const override { return "bit = 1 iff density >= " + to_string(layout_.threshold); }

 private:
  DenseLayout layout_;
};

}  // namespace

std::unique_ptr<ReductionDriver> make_dense_driver(DenseVariant variant, const BitMatrix& m, double beta, int d,
                                                   std::uint64_t seed) {
  int n = m.size();
  switch (variant) {
    case DenseVariant::constant: return std::make_unique<DenseDriver>(build_dense_const(n, m, d ? d : 3));
    case DenseVariant::expander:
      return std::make_unique<DenseDriver>(build_dense_expander(n, m, d ? d : 6, (d ? d : 6) - 2, seed));
    case DenseVariant::powerlaw: return std::make_unique<DenseDriver>(build_dense_powerlaw(n, beta, m));
  }
  throw std::invalid_argument("unknown dense variant");
}

}  // namespace oumv
