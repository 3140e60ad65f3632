#include "oumv/stpath_gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "oumv/expander.hpp"

namespace oumv {

ApproxParams ApproxParams::from_delta(double delta) {
  if (!(delta > 0 && delta < 3)) throw std::invalid_argument("approx: delta must lie in (0,3)");
  ApproxParams p;
  p.delta = delta;
  p.alpha = static_cast<int>(std::ceil(12.0 / delta - 4.0 - 1e-12));
  if (p.alpha < 1) p.alpha = 1;
  return p;
}

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

int log2_exact(int n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("n must be a power of two, got " + std::to_string(n));
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

namespace {

struct Builder {
  DynamicGraph& g;
  Layout& lay;

  NodeId node(const std::string& name, int layer, const std::string& group) {
    NodeId v = g.add_node();
    lay.attach(v, name, layer, group);
    return v;
  }

  // Complete binary tree of the given depth in heap order. `layer_at(k)` gives the layer
  // of depth k. Internal nodes are named by heap index, leaves by 1-based position.
  std::pair<NodeId, std::vector<NodeId>> tree(int depth, const std::function<std::string(int)>& internal,
                                              const std::function<std::string(int)>& leaf,
                                              const std::function<int(int)>& layer_at,
                                              const std::string& internal_group, const std::string& leaf_group) {
    int leaves = 1 << depth;
    std::vector<NodeId> heap(2 * leaves, -1);
    for (int h = 1; h < 2 * leaves; ++h) {
      int k = 0;
      while ((2 << k) <= h) ++k;
      bool is_leaf = h >= leaves;
      heap[h] = is_leaf ? node(leaf(h - leaves + 1), layer_at(k), leaf_group)
                        : node(internal(h), layer_at(k), internal_group);
      if (h > 1) g.add_static_edge(heap[h / 2], heap[h]);
    }
    std::vector<NodeId> out(leaves + 1, -1);
    for (int j = 1; j <= leaves; ++j) out[j] = heap[leaves + j - 1];
    return {heap[1], out};
  }
};

std::string idx(const std::string& set, int i, int j, int k) {
  return set + "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
}

// The s-tree: root s, internal nodes L1[k], leaves L2[i]. Mirrored for t with layers reversed.
void single_tree(Builder& b, ForestLayout& l, bool left, int first_layer) {
  std::string s = left ? "L" : "R";
  int log_n = l.log_n;
  if (log_n == 0) throw std::invalid_argument("n must be at least 2");
  auto layer_at = [&](int k) { return left ? first_layer + k : first_layer + (log_n - k); };
  auto [root, leaves] = b.tree(
      log_n, [&](int h) { return h == 1 ? std::string(left ? "s" : "t") : label(s + "1", h); },
      [&](int j) { return label(s + "2", j); }, layer_at, s + "1", s + "2");
  (left ? l.s : l.t_node) = root;
  (left ? l.l2 : l.r2) = leaves;
}

// n trees of the given depth. Left trees grow away from s; right trees grow towards t.
Forest forest(Builder& b, const std::string& internal, const std::string& name, bool left, int n, int depth, int first_layer) {
  Forest f;
  f.root.assign(n + 1, -1);
  f.leaf.assign(n + 1, {});
  std::string side = left ? "L" : "R";
  for (int i = 1; i <= n; ++i) {
    auto layer_at = [&](int k) { return left ? first_layer + k : first_layer + (depth - k); };
    auto [root, leaves] = b.tree(
        depth, [&](int h) { return label(internal, i, h); }, [&](int j) { return label(name, i, j); },
        layer_at, side + "3", side + "4");
    f.root[i] = root;
    f.leaf[i] = leaves;
  }
  return f;
}

void check_dims(int n, const BitMatrix& m) {
  log2_exact(n);
  if (n < 2) throw std::invalid_argument("st gadget: n must be at least 2");
  if (m.size() != n) throw std::invalid_argument("st gadget: matrix dimension differs from n");
}

// Plain single-forest construction. `shift` extra layers separate L4 from R4 (approx paths).
StBuild build_plain(StVariant variant, int n, int depth, int shift, const BitMatrix& m) {
  check_dims(n, m);
  StBuild out;
  ForestLayout& l = out.layout;
  l.variant = variant;
  l.n = n;
  l.log_n = log2_exact(n);
  l.depth = depth;
  out.graph.set_logging(false);
  Builder b{out.graph, l.labels};
  int ln = l.log_n;
  single_tree(b, l, true, 0);
  l.lm = forest(b, "L3", "L4", true, n, depth, ln + 1);
  int r4 = ln + 2 + depth + shift;
  l.rm = forest(b, "R3", "R4", false, n, depth, r4);
  single_tree(b, l, false, r4 + depth + 1);
  l.target_layer = r4 + depth + 1 + ln;
  l.threshold = l.target_layer;
  return out;
}

}  // namespace

StBuild build_st_const(int n, const BitMatrix& m) {
  StBuild out = build_plain(StVariant::constant, n, log2_exact(n), 0, m);
  ForestLayout& l = out.layout;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j)) out.graph.add_static_edge(l.lm.leaf[i][j], l.rm.leaf[j][i]);
  l.formula_nodes = 4LL * n * n + 2LL * n - 2;
  out.graph.set_logging(true);
  return out;
}

StBuild build_st_varying(int n, double t, const BitMatrix& m) {
  if (t < 0 || t > 1) throw std::invalid_argument("st gadget: t must lie in [0,1]");
  log2_exact(n);
  int width = std::max(1, static_cast<int>(std::ceil(std::pow(static_cast<double>(n), (1 - t) / (1 + t)) - 1e-9)));
  int depth = 0;
  while ((1 << depth) < width) ++depth;
  StBuild out = build_plain(StVariant::varying, n, depth, 0, m);
  ForestLayout& l = out.layout;
  l.t = t;
  double shrink = std::pow(static_cast<double>(n), -2.0 * t / (t + 1.0));
  auto squeeze = [&](int x) { return std::clamp(static_cast<int>(std::ceil(x * shrink - 1e-9)), 1, width); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j)) {
        NodeId a = l.lm.leaf[i][squeeze(j)], c = l.rm.leaf[j][squeeze(i)];
        if (!out.graph.has_edge(a, c)) out.graph.add_static_edge(a, c);
      }
  l.formula_nodes = 2LL * (2 * n - 1) + 2LL * n * ((2LL << depth) - 1);
  out.graph.set_logging(true);
  return out;
}

namespace {

StBuild build_approx_raw(int n, const ApproxParams& p, const BitMatrix& m) {
  int ln = log2_exact(n);
  int len = p.alpha * ln;
  StBuild out = build_plain(StVariant::approx, n, ln, len, m);
  ForestLayout& l = out.layout;
  l.approx = p;
  Builder b{out.graph, l.labels};
  int first = ln + 1 + ln + 1;  // layer of v[i,j,1]
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NodeId prev = l.lm.leaf[i][j];
      for (int k = 1; k <= len; ++k) {
        NodeId v = b.node(idx("v", i, j, k), first + k - 1, "V");
        if (m.get(i, j)) out.graph.add_static_edge(prev, v);
        prev = v;
      }
      if (m.get(i, j)) out.graph.add_static_edge(prev, l.rm.leaf[j][i]);
    }
  l.formula_nodes = 4LL * n * n + 2LL * n - 2 + static_cast<std::int64_t>(n) * n * len;
  out.graph.set_logging(true);
  return out;
}

int probe_distance(int n, const ApproxParams& p, const BitMatrix& m, const BitVector& u, const BitVector& v) {
  StBuild b = build_approx_raw(n, p, m);
  apply_pair_st(b.graph, b.layout, u, v);
  return bfs_distance(b.graph, b.layout.s, b.layout.t_node);
}

BitVector unit(int n, int i) {
  BitVector x(n);
  x.set(i, true);
  return x;
}

}  // namespace

std::pair<int, int> measure_approx_thresholds(int n, double delta) {
  ApproxParams p = ApproxParams::from_delta(delta);
  BitMatrix one(n);
  one.set(1, 1, true);
  int t1 = probe_distance(n, p, one, unit(n, 1), unit(n, 1));
  // Shortest zero configuration: three cross paths, u_1 = v_1 = 1, M_11 = 0.
  BitMatrix zero(n);
  zero.set(1, 2, true);
  zero.set(2, 2, true);
  zero.set(2, 1, true);
  int t0 = probe_distance(n, p, zero, unit(n, 1), unit(n, 1));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    OuMvInstance inst = generate_instance(n, InstanceMode::planted_zero, seed);
    for (const auto& pr : inst.pairs) {
      int d = probe_distance(n, p, inst.matrix, pr.u, pr.v);
      if (d != kInfinity && (t0 == kInfinity || d < t0)) t0 = d;
    }
  }
  return {t1, t0};
}

StBuild build_st_approx(int n, double delta, const BitMatrix& m) {
  ApproxParams p = ApproxParams::from_delta(delta);
  check_dims(n, m);
  StBuild out = build_approx_raw(n, p, m);
  auto [t1, t0] = measure_approx_thresholds(n, delta);
  ForestLayout& l = out.layout;
  l.t1 = t1;
  l.t0 = t0;
  l.cutoff = (t1 + t0) / 2.0;
  l.threshold = t1;
  return out;
}

namespace {

// Triple forests U, M, L on both sides; the all-zero pair's input edges are present.
StBuild build_triple(StVariant variant, int n, const BitMatrix& m) {
  check_dims(n, m);
  StBuild out;
  ForestLayout& l = out.layout;
  l.variant = variant;
  l.n = n;
  l.log_n = log2_exact(n);
  l.depth = l.log_n;
  out.graph.set_logging(false);
  Builder b{out.graph, l.labels};
  int ln = l.log_n;
  single_tree(b, l, true, 0);
  l.lu = forest(b, "LU3", "LU", true, n, ln, ln + 1);
  l.lm = forest(b, "LM3", "LM", true, n, ln, ln + 1);
  l.ll = forest(b, "LL3", "LL", true, n, ln, ln + 1);
  int r4 = 2 * ln + 2;
  l.ru = forest(b, "RU3", "RU", false, n, ln, r4);
  l.rm = forest(b, "RM3", "RM", false, n, ln, r4);
  l.rl = forest(b, "RL3", "RL", false, n, ln, r4);
  single_tree(b, l, false, r4 + ln + 1);
  l.target_layer = 4 * ln + 3;
  l.threshold = l.target_layer;
  for (int i = 1; i <= n; ++i) {
    out.graph.add_static_edge(l.l2[i], l.lu.root[i]);
    out.graph.add_static_edge(l.r2[i], l.ru.root[i]);
  }
  return out;
}

std::vector<NodeId> leaves_of(const std::vector<const Forest*>& fs) {
  std::vector<NodeId> out;
  for (const Forest* f : fs)
    for (std::size_t i = 1; i < f->leaf.size(); ++i) out.insert(out.end(), f->leaf[i].begin() + 1, f->leaf[i].end());
  return out;
}

}  // namespace

StBuild build_st_expander(int n, const BitMatrix& m, int d, std::uint64_t seed) {
  StBuild out = build_triple(StVariant::expander, n, m);
  ForestLayout& l = out.layout;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (m.get(i, j)) {
        out.graph.add_static_edge(l.lm.leaf[i][j], l.rm.leaf[j][i]);
      } else {
        out.graph.add_static_edge(l.lm.leaf[i][j], l.rl.leaf[j][i]);
        out.graph.add_static_edge(l.ll.leaf[i][j], l.rm.leaf[j][i]);
      }
    }
  std::vector<NodeId> l2(l.l2.begin() + 1, l.l2.end()), r2(l.r2.begin() + 1, l.r2.end());
  struct Part {
    std::vector<NodeId> targets;
    std::string name;
    int offset;  // dummy layer relative to its neighbours
  };
  std::vector<Part> parts = {{l2, "DL2", -1},
                             {leaves_of({&l.lu, &l.lm, &l.ll}), "DL4", -1},
                             {r2, "DR2", 1},
                             {leaves_of({&l.ru, &l.rm, &l.rl}), "DR4", 1}};
  std::uint64_t k = 0;
  for (const Part& p : parts) {
    ExpanderSpec spec{static_cast<int>(p.targets.size()), d, 0.1, seed * 1000003ULL + ++k};
    Overlay o = overlay_expander(out.graph, p.targets, spec, true);
    int layer = l.labels.layer(p.targets.front()) + p.offset;
    for (std::size_t x = 0; x < o.dummies.size(); ++x)
      l.labels.attach(o.dummies[x], label(p.name, static_cast<int>(x) + 1), layer, "dummy");
    l.dummies.insert(l.dummies.end(), o.dummies.begin(), o.dummies.end());
  }
  l.formula_nodes = 12LL * n * n - 2LL * n - 2 + static_cast<std::int64_t>(l.dummies.size());
  l.certificate = expansion_lower_bound_spectral(out.graph);
  out.graph.set_logging(true);
  return out;
}

StBuild build_st_powerlaw_reduction(int n, const BitMatrix& m) {
  StBuild out = build_triple(StVariant::powerlaw, n, m);
  ForestLayout& l = out.layout;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (m.get(i, j)) {
        out.graph.add_static_edge(l.lm.leaf[i][j], l.rm.leaf[j][i]);
        out.graph.add_static_edge(l.ll.leaf[i][j], l.rl.leaf[j][i]);
      } else {
        out.graph.add_static_edge(l.lm.leaf[i][j], l.rl.leaf[j][i]);
        out.graph.add_static_edge(l.ll.leaf[i][j], l.rm.leaf[j][i]);
      }
    }
  l.formula_nodes = 12LL * n * n - 2LL * n - 2;
  out.graph.set_logging(true);
  return out;
}

StPowerLawState build_st_powerlaw(int n, double beta, std::uint64_t seed, const BitMatrix& m) {
  if (beta <= 2) throw std::invalid_argument("power law: beta must exceed 2");
  StBuild red = build_st_powerlaw_reduction(n, m);
  StPowerLawState st;
  st.embedding = embed_in_power_law_host(red.graph, beta, 2 * n, seed);
  st.graph = std::move(st.embedding.graph);
  st.embedding.graph = DynamicGraph();
  st.reduction_nodes = red.graph.node_count();
  st.layout = std::move(red.layout);
  for (NodeId v = st.reduction_nodes; v < st.graph.node_count(); ++v)
    st.layout.labels.attach(v, label("H", v - st.reduction_nodes + 1), -1, "host");
  return st;
}

namespace {

int sync_edge(DynamicGraph& g, NodeId a, NodeId b, bool want) {
  if (g.has_edge(a, b) == want) return 0;
  if (want)
    g.insert_edge(a, b);
  else
    g.delete_edge(a, b);
  return 1;
}

void check_pair(const ForestLayout& l, const BitVector& u, const BitVector& v) {
  if (u.size() != l.n || v.size() != l.n) throw std::invalid_argument("vector dimension differs from n");
}

}  // namespace

int apply_pair_st(DynamicGraph& g, const ForestLayout& l, const BitVector& u, const BitVector& v) {
  check_pair(l, u, v);
  int ops = 0;
  for (int i = 1; i <= l.n; ++i) {
    if (!u.get(i)) ops += sync_edge(g, l.l2[i], l.lm.root[i], false);
    if (!v.get(i)) ops += sync_edge(g, l.r2[i], l.rm.root[i], false);
  }
  for (int i = 1; i <= l.n; ++i) {
    if (u.get(i)) ops += sync_edge(g, l.l2[i], l.lm.root[i], true);
    if (v.get(i)) ops += sync_edge(g, l.r2[i], l.rm.root[i], true);
  }
  return ops;
}

int apply_pair_st_expander(DynamicGraph& g, const ForestLayout& l, const BitVector& u, const BitVector& v) {
  check_pair(l, u, v);
  int ops = 0;
  for (int i = 1; i <= l.n; ++i) {
    ops += sync_edge(g, l.l2[i], u.get(i) ? l.lm.root[i] : l.lu.root[i], true);
    ops += sync_edge(g, l.r2[i], v.get(i) ? l.rm.root[i] : l.ru.root[i], true);
  }
  for (int i = 1; i <= l.n; ++i) {
    ops += sync_edge(g, l.l2[i], u.get(i) ? l.lu.root[i] : l.lm.root[i], false);
    ops += sync_edge(g, l.r2[i], v.get(i) ? l.ru.root[i] : l.rm.root[i], false);
  }
  return ops;
}

bool decode_st(const ForestLayout& l, int distance) {
  if (distance == kInfinity) return false;
  if (l.variant == StVariant::approx) return distance < l.cutoff;
  return distance <= l.threshold;
}

bool decide_st(const DynamicGraph& g, const ForestLayout& l) { return decode_st(l, bfs_distance(g, l.s, l.t_node)); }

namespace {

std::string variant_name(StVariant v) {
  switch (v) {
    case StVariant::constant: return "const";
    case StVariant::approx: return "approx";
    case StVariant::varying: return "varying";
    case StVariant::expander: return "expander";
    case StVariant::powerlaw: return "powerlaw";
  }
  return "?";
}

class StDriver : public ReductionDriver {
 public:
  StDriver(DynamicGraph g, ForestLayout l) : layout_(std::move(l)) { graph_ = std::move(g); }

  std::string family() const override { return "stpath"; }
  std::string variant() const override { return variant_name(layout_.variant); }
  int dimension() const override { return layout_.n; }
  const Layout& layout() const override { return layout_.labels; }
  Query query() const override { return {QueryKind::distance, layout_.s, layout_.t_node}; }

  std::vector<UpdateOp> begin_pair(const BitVector& u, const BitVector& v) override {
    return record([&] {
      if (layout_.variant == StVariant::expander || layout_.variant == StVariant::powerlaw)
        apply_pair_st_expander(graph_, layout_, u, v);
      else
        apply_pair_st(graph_, layout_, u, v);
    });
  }

  bool decode(const Answer& a) const override { return decode_st(layout_, static_cast<int>(a.value)); }
  std::optional<std::int64_t> formula_nodes() const override {
    if (layout_.variant == StVariant::powerlaw) return std::nullopt;
    return layout_.formula_nodes;
  }
  std::string rule() const override {
    if (layout_.variant == StVariant::approx)
      return "bit = 1 iff dist(s,t) < " + std::to_string(layout_.cutoff) + " (T1 = " + std::to_string(layout_.t1) +
             ", T0 = " + std::to_string(layout_.t0) + ")";
    return "bit = 1 iff dist(s,t) <= " + std::to_string(layout_.threshold);
  }

 private:
  ForestLayout layout_;
};

}  // namespace

std::unique_ptr<ReductionDriver> make_st_driver(StVariant variant, const BitMatrix& m, double param, int d,
                                                std::uint64_t seed) {
  int n = m.size();
  StBuild b;
  switch (variant) {
    case StVariant::constant: b = build_st_const(n, m); break;
    case StVariant::approx: b = build_st_approx(n, param, m); break;
    case StVariant::varying: b = build_st_varying(n, param, m); break;
    case StVariant::expander: b = build_st_expander(n, m, d, seed); break;
    case StVariant::powerlaw: {
      StPowerLawState st = build_st_powerlaw(n, param, seed, m);
      return std::make_unique<StDriver>(std::move(st.graph), std::move(st.layout));
    }
  }
  return std::make_unique<StDriver>(std::move(b.graph), std::move(b.layout));
}

}  // namespace oumv
