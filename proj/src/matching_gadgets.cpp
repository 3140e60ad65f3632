#include "oumv/matching_gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "oumv/expander.hpp"

namespace oumv {

namespace {

NodeId make_node(DynamicGraph& g, Layout& lay, const std::string& name, int layer, const std::string& group) {
  NodeId v = g.add_node();
  lay.attach(v, name, layer, group);
  return v;
}

struct Side {
  std::vector<NodeId> p1, p2;                // p1[1..dim], p2[0..dim]
  std::vector<std::vector<NodeId>> p3, p4;   // [1..count][0..width]
};

// Odd path P2[0],P1[1],P2[1],...,P1[dim],P2[dim] and `count` even paths
// P3[i,0],P4[i,0],...,P3[i,width],P4[i,width], with their canonical matchings.
Side build_side(DynamicGraph& g, Layout& lay, std::vector<Edge>& base, char side, int dim, int count, int width) {
  std::string s(1, side);
  bool left = side == 'L';
  auto layer = [&](int k) { return left ? k - 1 : 8 - k; };
  Side out;
  out.p1.assign(dim + 1, -1);
  out.p2.assign(dim + 1, -1);
  out.p2[0] = make_node(g, lay, label(s + "2", 0), layer(2), s + "2");
  for (int i = 1; i <= dim; ++i) {
    out.p1[i] = make_node(g, lay, label(s + "1", i), layer(1), s + "1");
    out.p2[i] = make_node(g, lay, label(s + "2", i), layer(2), s + "2");
    g.add_static_edge(out.p2[i - 1], out.p1[i]);
    g.add_static_edge(out.p1[i], out.p2[i]);
    base.emplace_back(out.p1[i], out.p2[i]);
  }
  out.p3.assign(count + 1, {});
  out.p4.assign(count + 1, {});
  for (int i = 1; i <= count; ++i) {
    out.p3[i].assign(width + 1, -1);
    out.p4[i].assign(width + 1, -1);
    NodeId prev = -1;
    for (int j = 0; j <= width; ++j) {
      NodeId a = make_node(g, lay, label(s + "3", i, j), layer(3), s + "3");
      NodeId b = make_node(g, lay, label(s + "4", i, j), layer(4), s + "4");
      if (prev >= 0) g.add_static_edge(prev, a);
      g.add_static_edge(a, b);
      base.emplace_back(a, b);
      out.p3[i][j] = a;
      out.p4[i][j] = b;
      prev = b;
    }
  }
  return out;
}

void finish(MatchingBuild& b, const Side& l, const Side& r, const std::vector<Edge>& base, int count) {
  MatchingLayout& lay = b.layout;
  lay.base = Matching(b.graph.node_count());
  for (auto [x, y] : base) lay.base.match(x, y);
  lay.source = l.p2[0];
  lay.sink = r.p2[0];
  lay.l2 = l.p2;
  lay.r2 = r.p2;
  lay.l3_head.assign(count + 1, -1);
  lay.r3_head.assign(count + 1, -1);
  lay.l4_head.assign(count + 1, -1);
  lay.r4_head.assign(count + 1, -1);
  for (int i = 1; i <= count; ++i) {
    lay.l3_head[i] = l.p3[i][0];
    lay.r3_head[i] = r.p3[i][0];
    lay.l4_head[i] = l.p4[i][0];
    lay.r4_head[i] = r.p4[i][0];
  }
}

MatchingBuild build_plain(MatchingVariant variant, int n, int width, const BitMatrix& m, double t) {
  if (n < 1) throw std::invalid_argument("matching gadget: n must be positive");
  if (m.size() != n) throw std::invalid_argument("matching gadget: matrix dimension differs from n");
  MatchingBuild b;
  b.graph.set_logging(false);
  b.layout.variant = variant;
  b.layout.n = b.layout.dim = n;
  b.layout.width = width;
  b.layout.t = t;
  std::vector<Edge> base;
  Side l = build_side(b.graph, b.layout.labels, base, 'L', n, n, width);
  Side r = build_side(b.graph, b.layout.labels, base, 'R', n, n, width);
  double shrink = std::pow(static_cast<double>(n), -2.0 * t / (t + 1.0));
  auto squeeze = [&](int x) { return std::clamp(static_cast<int>(std::ceil(x * shrink - 1e-9)), 1, width); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j)) {
        NodeId a = l.p4[i][variant == MatchingVariant::varying ? squeeze(j) : j];
        NodeId c = r.p4[j][variant == MatchingVariant::varying ? squeeze(i) : i];
        if (!b.graph.has_edge(a, c)) b.graph.add_static_edge(a, c);
      }
  finish(b, l, r, base, n);
  b.layout.formula_nodes = 4LL * n * n + 8LL * n + 2;
  b.graph.set_logging(true);
  return b;
}

int sync_edge(DynamicGraph& g, NodeId a, NodeId b, bool want) {
  if (g.has_edge(a, b) == want) return 0;
  if (want)
    g.insert_edge(a, b);
  else
    g.delete_edge(a, b);
  return 1;
}

}  // namespace

MatchingBuild build_matching_const(int n, const BitMatrix& m) {
  return build_plain(MatchingVariant::constant, n, n, m, 0.0);
}

MatchingBuild build_matching_varying(int n, double t, const BitMatrix& m) {
  if (t < 0 || t > 1) throw std::invalid_argument("matching gadget: t must lie in [0,1]");
  int width = static_cast<int>(std::ceil(std::pow(static_cast<double>(n), (1 - t) / (1 + t)) - 1e-9));
  width = std::max(width, 1);
  MatchingBuild b = build_plain(MatchingVariant::varying, n, width, m, t);
  b.layout.formula_nodes = 2LL * (2 * n + 1) + 2LL * n * (2 * width + 2);
  return b;
}

MatchingBuild build_matching_expander(int n, const BitMatrix& m, int d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("matching gadget: n must be positive");
  if (m.size() != n) throw std::invalid_argument("matching gadget: matrix dimension differs from n");
  BitVector zero(n);
  BitMatrix mh = augment_instance(zero, m, zero).m;
  int dim = 2 * n;
  MatchingBuild b;
  b.graph.set_logging(false);
  b.layout.variant = MatchingVariant::expander;
  b.layout.n = n;
  b.layout.dim = dim;
  b.layout.width = dim;
  std::vector<Edge> base;
  Side l = build_side(b.graph, b.layout.labels, base, 'L', dim, dim, dim);
  Side r = build_side(b.graph, b.layout.labels, base, 'R', dim, dim, dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j)
      if (mh.get(i, j)) b.graph.add_static_edge(l.p4[i][j], r.p4[j][i]);
  auto leaves = [&](const Side& s) {
    std::vector<NodeId> out;
    for (int i = 1; i <= dim; ++i) out.insert(out.end(), s.p4[i].begin(), s.p4[i].end());
    return out;
  };
  std::uint64_t k = 0;
  for (const std::vector<NodeId>& targets : {l.p2, leaves(l), r.p2, leaves(r)}) {
    ExpanderSpec spec{static_cast<int>(targets.size()), d, 0.1, seed * 1000003ULL + ++k};
    b.layout.overlay_edges += static_cast<int>(overlay_expander(b.graph, targets, spec).added.size());
  }
  finish(b, l, r, base, dim);
  // Every L2[i] and R2[j] carries exactly one input edge; start from the all-zero pair.
  for (int i = 1; i <= dim; ++i) {
    b.graph.add_static_edge(b.layout.l2[i], b.layout.l4_head[i]);
    b.graph.add_static_edge(b.layout.r2[i], b.layout.r4_head[i]);
  }
  b.layout.formula_nodes = 16LL * n * n + 16LL * n + 2;
  b.layout.certificate = expansion_lower_bound_spectral(b.graph);
  b.graph.set_logging(true);
  return b;
}

int apply_pair_matching(DynamicGraph& g, const MatchingLayout& layout, const BitVector& u, const BitVector& v) {
  if (u.size() != layout.n || v.size() != layout.n) throw std::invalid_argument("vector dimension differs from n");
  int ops = 0;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 1; i <= layout.n; ++i) {
      bool want_u = u.get(i), want_v = v.get(i);
      // Deletions first, then insertions.
      if (pass == 0) {
        if (!want_u) ops += sync_edge(g, layout.l2[i], layout.l3_head[i], false);
        if (!want_v) ops += sync_edge(g, layout.r2[i], layout.r3_head[i], false);
      } else {
        if (want_u) ops += sync_edge(g, layout.l2[i], layout.l3_head[i], true);
        if (want_v) ops += sync_edge(g, layout.r2[i], layout.r3_head[i], true);
      }
    }
  return ops;
}

int apply_pair_matching_expander(DynamicGraph& g, const MatchingLayout& layout, const BitVector& u,
                                 const BitVector& v) {
  BitVector uh = u, vh = v;
  if (u.size() == layout.n && v.size() == layout.n) {
    uh = pad_vector(u, layout.dim);
    vh = pad_vector(v, layout.dim);
  } else if (u.size() != layout.dim || v.size() != layout.dim) {
    throw std::invalid_argument("vector dimension must be n or 2n");
  }
  int ops = 0;
  for (int i = 1; i <= layout.dim; ++i) {
    ops += sync_edge(g, layout.l2[i], uh.get(i) ? layout.l3_head[i] : layout.l4_head[i], true);
    ops += sync_edge(g, layout.r2[i], vh.get(i) ? layout.r3_head[i] : layout.r4_head[i], true);
  }
  for (int i = 1; i <= layout.dim; ++i) {
    ops += sync_edge(g, layout.l2[i], uh.get(i) ? layout.l4_head[i] : layout.l3_head[i], false);
    ops += sync_edge(g, layout.r2[i], vh.get(i) ? layout.r4_head[i] : layout.r3_head[i], false);
  }
  return ops;
}

bool decide_matching(const DynamicGraph& g, const MatchingLayout& layout) {
  return augmenting_path_exists(g, layout.base, layout.source, layout.sink);
}

bool decide_matching_exact(const DynamicGraph& g, const MatchingLayout& layout) {
  return 2 * max_matching(g, &layout.base).size() == g.node_count();
}

MatchingBuild build_matching_powerlaw_reduction(int n, const BitMatrix& m) {
  if (n < 1) throw std::invalid_argument("matching gadget: n must be positive");
  if (m.size() != n) throw std::invalid_argument("matching gadget: matrix dimension differs from n");
  MatchingBuild b;
  b.graph.set_logging(false);
  b.layout.variant = MatchingVariant::powerlaw;
  b.layout.n = b.layout.dim = n;
  b.layout.width = n;
  std::vector<Edge> base;
  Side l = build_side(b.graph, b.layout.labels, base, 'L', n, 2 * n, n);
  Side r = build_side(b.graph, b.layout.labels, base, 'R', n, 2 * n, n);
  // Both bit values give every L4[i,j] and R4[j,i] with j >= 1 exactly one cross edge.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (m.get(i, j)) {
        b.graph.add_static_edge(l.p4[i][j], r.p4[j][i]);
        b.graph.add_static_edge(l.p4[n + i][j], r.p4[n + j][i]);
      } else {
        b.graph.add_static_edge(l.p4[i][j], r.p4[n + j][i]);
        b.graph.add_static_edge(l.p4[n + i][j], r.p4[j][i]);
      }
    }
  finish(b, l, r, base, 2 * n);
  b.layout.formula_nodes = b.graph.node_count();
  b.graph.set_logging(true);
  return b;
}

namespace {

void apply_rewire(DynamicGraph& g, const Rewire& r, NodeId shift) {
  g.delete_edge(r.a + shift, r.c + shift);
  g.delete_edge(r.b + shift, r.d + shift);
  g.insert_edge(r.c + shift, r.d + shift);
}

// Node-disjoint rewires: `count` with deg(a)=2, deg(b)=3, then `pendant` with both of degree 2.
std::vector<Rewire> pick_rewires(const DynamicGraph& g, int count, int pendant, std::uint64_t seed) {
  std::vector<NodeId> order(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> used(g.node_count(), 0);
  std::vector<Rewire> out;
  auto pick = [&](int deg_a, int deg_b, bool is_pendant) {
    for (NodeId a : order) {
      if (used[a] || g.degree(a) != deg_a) continue;
      for (NodeId c : g.neighbors(a)) {
        if (used[c]) continue;
        for (NodeId b : order) {
          if (used[b] || b == a || b == c || g.degree(b) != deg_b) continue;
          for (NodeId d : g.neighbors(b)) {
            if (used[d] || d == a || d == c || g.has_edge(c, d)) continue;
            for (NodeId x : {a, b, c, d}) used[x] = 1;
            out.push_back({a, b, c, d, is_pendant});
            return true;
          }
        }
      }
    }
    return false;
  };
  for (int k = 0; k < count; ++k)
    if (!pick(2, 3, false)) throw std::runtime_error("power law host: not enough degree-2/degree-3 rewire pairs");
  for (int k = 0; k < pendant; ++k)
    if (!pick(2, 2, true)) throw std::runtime_error("power law host: not enough degree-2 rewire pairs");
  return out;
}

}  // namespace

std::shared_ptr<const MatchingPowerLawHost> build_matching_powerlaw_host(int n, double beta, std::uint64_t seed) {
  if (beta <= 2) throw std::invalid_argument("power law: beta must exceed 2");
  auto h = std::make_shared<MatchingPowerLawHost>();
  h->n = n;
  h->beta = beta;
  MatchingBuild red = build_matching_powerlaw_reduction(n, BitMatrix(n));
  h->host = prepare_host(degree_need(red.graph), beta, 2 * n, seed);
  h->rewires = pick_rewires(h->host.graph, 2 * n, 2, seed ^ 0x5bd1e995ULL);
  h->m.assign(2 * n + 1, {0, 0, 0});
  for (int l = 0; l <= 2; ++l) {
    DynamicGraph g = h->host.graph;
    for (int k = 0; k < l; ++k) apply_rewire(g, h->rewires[2 * n + k], 0);
    Matching prev = max_matching(g);
    h->m[0][l] = prev.size();
    for (int k = 1; k <= 2 * n; ++k) {
      apply_rewire(g, h->rewires[k - 1], 0);
      prev = max_matching(g, &prev);
      h->m[k][l] = prev.size();
    }
  }
  return h;
}

PowerLawMatchingState build_matching_powerlaw(std::shared_ptr<const MatchingPowerLawHost> host, const BitMatrix& m) {
  PowerLawMatchingState st;
  MatchingBuild red = build_matching_powerlaw_reduction(host->n, m);
  st.embedding = embed(red.graph, host->host);
  st.graph = std::move(st.embedding.graph);
  st.embedding.graph = DynamicGraph();
  st.layout = std::move(red.layout);
  st.reduction_nodes = red.graph.node_count();
  st.host = std::move(host);
  return st;
}

PowerLawMatchingState build_matching_powerlaw(int n, double beta, std::uint64_t seed, const BitMatrix& m) {
  return build_matching_powerlaw(build_matching_powerlaw_host(n, beta, seed), m);
}

namespace {

PowerLawPairOps powerlaw_ops(DynamicGraph& g, const MatchingLayout& layout, const MatchingPowerLawHost& host,
                             int shift, const BitVector& u, const BitVector& v) {
  int n = layout.n;
  if (u.size() != n || v.size() != n) throw std::invalid_argument("vector dimension differs from n");
  PowerLawPairOps out;
  std::size_t before = g.log().size();
  for (int i = 1; i <= n; ++i) {
    if (u.get(i)) g.insert_edge(layout.l2[i], layout.l3_head[i]);
    if (v.get(i)) g.insert_edge(layout.r2[i], layout.r3_head[i]);
  }
  // L2[n] and R2[n] end the odd path and move from degree 1 to 2; the others from 2 to 3.
  for (int i = 1; i < n; ++i) out.regular += u.get(i) + v.get(i);
  out.pendant = u.get(n) + v.get(n);
  for (int k = 0; k < out.regular; ++k) apply_rewire(g, host.rewires[k], shift);
  for (int k = 0; k < out.pendant; ++k) apply_rewire(g, host.rewires[2 * n + k], shift);
  out.apply.assign(g.log().begin() + static_cast<std::ptrdiff_t>(before), g.log().end());
  return out;
}

}  // namespace

PowerLawPairOps apply_pair_powerlaw_matching(PowerLawMatchingState& state, const BitVector& u, const BitVector& v) {
  return powerlaw_ops(state.graph, state.layout, *state.host, state.reduction_nodes, u, v);
}

bool decode_powerlaw_matching(const PowerLawMatchingState& state, const PowerLawPairOps& ops, int matching_size) {
  return matching_size == state.host->m[ops.regular][ops.pendant] + state.reduction_nodes / 2;
}

void rollback(DynamicGraph& g, const std::vector<UpdateOp>& ops) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->kind == UpdateOp::Kind::insert)
      g.delete_edge(it->a, it->b);
    else
      g.insert_edge(it->a, it->b);
  }
}

bool apply_and_decide_powerlaw_matching(PowerLawMatchingState& state, const BitVector& u, const BitVector& v) {
  PowerLawPairOps ops = apply_pair_powerlaw_matching(state, u, v);
  bool bit = decode_powerlaw_matching(state, ops, max_matching(state.graph).size());
  rollback(state.graph, ops.apply);
  return bit;
}

namespace {

std::string variant_name(MatchingVariant v) {
  switch (v) {
    case MatchingVariant::constant: return "const";
    case MatchingVariant::varying: return "varying";
    case MatchingVariant::expander: return "expander";
    case MatchingVariant::powerlaw: return "powerlaw";
  }
  return "?";
}

class MatchingDriver : public ReductionDriver {
 public:
  explicit MatchingDriver(MatchingBuild b) : layout_(std::move(b.layout)) { graph_ = std::move(b.graph); }

  std::string family() const override { return "matching"; }
  std::string variant() const override { return variant_name(layout_.variant); }
  int dimension() const override { return layout_.n; }
  const Layout& layout() const override { return layout_.labels; }
  Query query() const override { return {QueryKind::matching_size, -1, -1}; }

  std::vector<UpdateOp> begin_pair(const BitVector& u, const BitVector& v) override {
    return record([&] {
      if (layout_.variant == MatchingVariant::expander)
        apply_pair_matching_expander(graph_, layout_, u, v);
      else
        apply_pair_matching(graph_, layout_, u, v);
    });
  }

  bool decode(const Answer& a) const override { return 2 * a.value == graph_.node_count(); }
  const Matching* base_matching() const override { return &layout_.base; }
  std::optional<std::int64_t> formula_nodes() const override {
    if (layout_.variant == MatchingVariant::varying) return std::nullopt;
    return layout_.formula_nodes;
  }
  std::string rule() const override { return "bit = 1 iff matching size = N/2"; }
  const MatchingLayout& matching_layout() const { return layout_; }

 private:
  MatchingLayout layout_;
};

class PowerLawMatchingDriver : public ReductionDriver {
 public:
  explicit PowerLawMatchingDriver(PowerLawMatchingState st) : st_(std::move(st)) {
    graph_ = std::move(st_.graph);
    st_.graph = DynamicGraph();
    base_ = Matching(graph_.node_count());
    for (auto [a, b] : st_.layout.base.pairs()) base_.match(a, b);
    Layout& lay = labels_;
    lay = st_.layout.labels;
    for (NodeId v = st_.reduction_nodes; v < graph_.node_count(); ++v)
      lay.attach(v, label("H", v - st_.reduction_nodes), 0, "host");
  }

  std::string family() const override { return "matching"; }
  std::string variant() const override { return "powerlaw"; }
  int dimension() const override { return st_.layout.n; }
  const Layout& layout() const override { return labels_; }
  Query query() const override { return {QueryKind::matching_size, -1, -1}; }

  std::vector<UpdateOp> begin_pair(const BitVector& u, const BitVector& v) override {
    last_ = powerlaw_ops(graph_, st_.layout, *st_.host, st_.reduction_nodes, u, v);
    return last_.apply;
  }

  bool decode(const Answer& a) const override {
    return a.value == st_.host->m[last_.regular][last_.pendant] + st_.reduction_nodes / 2;
  }

  std::vector<UpdateOp> end_pair() override {
    return record([&] { rollback(graph_, last_.apply); });
  }

  const Matching* base_matching() const override { return &base_; }
  std::string rule() const override { return "bit = 1 iff matching size = m_k + reduction nodes / 2"; }
  const PowerLawMatchingState& state() const { return st_; }

 private:
  PowerLawMatchingState st_;
  Layout labels_;
  Matching base_;
  PowerLawPairOps last_;
};

}  // namespace

std::unique_ptr<ReductionDriver> make_matching_driver(MatchingVariant variant, const BitMatrix& m, double t, int d,
                                                      std::uint64_t seed) {
  int n = m.size();
  switch (variant) {
    case MatchingVariant::constant: return std::make_unique<MatchingDriver>(build_matching_const(n, m));
    case MatchingVariant::varying: return std::make_unique<MatchingDriver>(build_matching_varying(n, t, m));
    case MatchingVariant::expander: return std::make_unique<MatchingDriver>(build_matching_expander(n, m, d, seed));
    case MatchingVariant::powerlaw: break;
  }
  throw std::invalid_argument("power-law matching drivers need a host; use make_matching_powerlaw_driver");
}

std::unique_ptr<ReductionDriver> make_matching_powerlaw_driver(std::shared_ptr<const MatchingPowerLawHost> host,
                                                               const BitMatrix& m) {
  return std::make_unique<PowerLawMatchingDriver>(build_matching_powerlaw(std::move(host), m));
}

}  // namespace oumv
