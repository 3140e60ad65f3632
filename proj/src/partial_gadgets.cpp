#include "oumv/partial_gadgets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oumv/matching.hpp"
#include "oumv/stpath_gadgets.hpp"

namespace oumv {

namespace {

struct Maker {
  DynamicGraph& g;
  Layout& lay;

  NodeId operator()(const std::string& name, const std::string& group) {
    NodeId v = g.add_node();
    lay.attach(v, name, 0, group);
    return v;
  }
};

// Binary tree of depth `depth` in heap order; returns the root and the leaves [1..2^depth].
std::pair<NodeId, std::vector<NodeId>> tree(Maker& mk, int depth, const std::string& root_name,
                                            const std::string& internal, int tree_index, const std::string& leaf) {
  int leaves = 1 << depth;
  std::vector<NodeId> heap(2 * leaves, -1);
  for (int h = 1; h < 2 * leaves; ++h) {
    std::string name;
    if (h >= leaves)
      name = tree_index ? label(leaf, tree_index, h - leaves + 1) : label(leaf, h - leaves + 1);
    else if (h == 1 && !root_name.empty())
      name = root_name;
    else
      name = tree_index ? label(internal, tree_index, h) : label(internal, h);
    heap[h] = mk(name, h >= leaves ? leaf : internal);
    if (h > 1) mk.g.add_static_edge(heap[h / 2], heap[h]);
  }
  std::vector<NodeId> out(leaves + 1, -1);
  for (int j = 1; j <= leaves; ++j) out[j] = heap[leaves + j - 1];
  return {heap[1], out};
}

struct StSide {
  NodeId root = -1;
  std::vector<std::vector<NodeId>> six;  // X6[i][j]
};

StSide st_side(Maker& mk, DecrementalLayout& l, const std::string& x, const std::string& path, bool left) {
  int n = l.n, ln = l.log_n;
  StSide out;
  auto [root, l2] = tree(mk, ln, left ? "s" : "t", x + "1", 0, x + "2");
  out.root = root;
  std::vector<std::vector<Edge>>& input = left ? l.left_input : l.right_input;
  input.assign(n + 1, std::vector<Edge>(n + 1));
  out.six.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) {
    auto [r3, l4] = tree(mk, ln, "", x + "3", i, x + "4");
    mk.g.add_static_edge(l2[i], r3);
    std::vector<NodeId> p(n + 1, -1);
    for (int k = n; k >= 1; --k) p[k] = mk(label(path, i, k), path);
    for (int k = 1; k < n; ++k) mk.g.add_static_edge(p[k], p[k + 1]);
    for (int j = 1; j <= n; ++j) {
      mk.g.add_static_edge(l4[j], p[j]);
      input[i][j] = {l4[j], p[j]};
    }
    auto [r5, l6] = tree(mk, ln, "", x + "5", i, x + "6");
    mk.g.add_static_edge(p[1], r5);
    out.six[i] = l6;
  }
  return out;
}

// Even path A[k,0],B[k,0],...,A[k,n],B[k,n] for k = 1..n.
std::vector<std::vector<std::pair<NodeId, NodeId>>> gadget(Maker& mk, int n, const std::string& a,
                                                           const std::string& b) {
  std::vector<std::vector<std::pair<NodeId, NodeId>>> out(n + 1);
  for (int k = 1; k <= n; ++k) {
    NodeId prev = -1;
    for (int x = 0; x <= n; ++x) {
      NodeId p = mk(label(a, k, x), a), q = mk(label(b, k, x), b);
      if (prev >= 0) mk.g.add_static_edge(prev, p);
      mk.g.add_static_edge(p, q);
      out[k].emplace_back(p, q);
      prev = q;
    }
  }
  return out;
}

std::vector<std::vector<std::pair<NodeId, NodeId>>> matching_side(Maker& mk, DecrementalLayout& l,
                                                                  const std::string& x, bool left) {
  int n = l.n;
  auto e = gadget(mk, n, x + "1", x + "2");
  auto f = gadget(mk, n, x + "3", x + "4");
  std::vector<std::vector<Edge>>& input = left ? l.left_input : l.right_input;
  input.assign(n + 1, std::vector<Edge>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NodeId a = e[j][i].second, b = f[i][j].first;  // X2[j,i], X3[i,j]
      mk.g.add_static_edge(a, b);
      input[i][j] = {a, b};
    }
  auto gg = gadget(mk, n, x + "5", x + "6");
  for (int i = 1; i <= n; ++i) mk.g.add_static_edge(f[i][n].second, gg[i][0].first);
  std::vector<Edge>& head = left ? l.l_head : l.r_head;
  std::vector<Edge>& link = left ? l.l_link : l.r_link;
  head.assign(n + 1, {});
  link.assign(n + 1, {});
  for (int j = 1; j <= n; ++j) {
    head[j] = {e[j][0].first, e[j][0].second};
    link[j] = {e[j][0].second, e[j][1].first};
  }
  return gg;
}

void delete_if_present(DynamicGraph& g, Edge e, int& ops) {
  if (!g.has_edge(e.first, e.second)) return;
  g.delete_edge(e.first, e.second);
  ++ops;
}

}  // namespace

DecrementalBuild build_decremental_st(int n, const BitMatrix& m) {
  if (n < 2) throw std::invalid_argument("decremental st: n must be at least 2");
  if (m.size() != n) throw std::invalid_argument("decremental st: matrix dimension differs from n");
  DecrementalBuild b;
  DecrementalLayout& l = b.layout;
  l.family = PartialFamily::stpath;
  l.n = n;
  l.log_n = log2_exact(n);
  b.graph.set_logging(false);
  Maker mk{b.graph, l.labels};
  StSide left = st_side(mk, l, "L", "P", true);
  StSide right = st_side(mk, l, "R", "Q", false);
  l.s = left.root;
  l.t = right.root;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j)) b.graph.add_static_edge(left.six[i][j], right.six[j][i]);
  b.graph.set_logging(true);
  return b;
}

DecrementalBuild build_decremental_matching(int n, const BitMatrix& m) {
  if (n < 1) throw std::invalid_argument("decremental matching: n must be positive");
  if (m.size() != n) throw std::invalid_argument("decremental matching: matrix dimension differs from n");
  DecrementalBuild b;
  DecrementalLayout& l = b.layout;
  l.family = PartialFamily::matching;
  l.n = n;
  b.graph.set_logging(false);
  Maker mk{b.graph, l.labels};
  auto lg = matching_side(mk, l, "L", true);
  auto rg = matching_side(mk, l, "R", false);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j)) b.graph.add_static_edge(lg[i][j].second, rg[j][i].second);
  b.graph.set_logging(true);
  return b;
}

std::int64_t decremental_target(const DecrementalLayout& l, int round) {
  if (l.family == PartialFamily::stpath) return 6LL * l.log_n + 5 + 2LL * round;
  return 4LL * round - 2;
}

int begin_round(DynamicGraph& g, const DecrementalLayout& l, int round, const BitVector& u, const BitVector& v) {
  if (round < 1 || round > l.n) throw std::invalid_argument("round out of range");
  if (u.size() != l.n || v.size() != l.n) throw std::invalid_argument("vector dimension differs from n");
  int ops = 0;
  if (l.family == PartialFamily::matching) {
    delete_if_present(g, l.l_head[round], ops);
    delete_if_present(g, l.r_head[round], ops);
  }
  for (int i = 1; i <= l.n; ++i) {
    if (!u.get(i)) delete_if_present(g, l.left_input[i][round], ops);
    if (!v.get(i)) delete_if_present(g, l.right_input[i][round], ops);
  }
  return ops;
}

int end_round(DynamicGraph& g, const DecrementalLayout& l, int round) {
  int ops = 0;
  if (l.family == PartialFamily::matching) {
    delete_if_present(g, l.l_link[round], ops);
    delete_if_present(g, l.r_link[round], ops);
  }
  for (int i = 1; i <= l.n; ++i) {
    delete_if_present(g, l.left_input[i][round], ops);
    delete_if_present(g, l.right_input[i][round], ops);
  }
  return ops;
}

std::int64_t decremental_value(const DynamicGraph& g, const DecrementalLayout& l) {
  if (l.family == PartialFamily::stpath) return bfs_distance(g, l.s, l.t);
  return g.node_count() - 2LL * max_matching(g).size();
}

ReplayLog record_decremental(DecrementalBuild build, const OuMvInstance& inst) {
  if (inst.n() != build.layout.n) throw std::invalid_argument("instance dimension differs from the build");
  ReplayLog log;
  log.start = build.graph;
  DynamicGraph& g = build.graph;
  g.clear_log();
  int round = 0;
  for (const VectorPair& p : inst.pairs) {
    ++round;
    begin_round(g, build.layout, round, p.u, p.v);
    log.queries.push_back(g.log().size());
    end_round(g, build.layout, round);
  }
  log.ops = g.log();
  return log;
}

DynamicGraph replay_final(const ReplayLog& log) {
  DynamicGraph g = log.start;
  g.set_logging(false);
  for (const UpdateOp& op : log.ops) g.apply(op);
  g.clear_log();
  g.set_logging(true);
  return g;
}

ReplayLog reverse_to_incremental(const ReplayLog& log) {
  ReplayLog out;
  out.start = replay_final(log);
  for (auto it = log.ops.rbegin(); it != log.ops.rend(); ++it)
    out.ops.push_back({it->kind == UpdateOp::Kind::insert ? UpdateOp::Kind::erase : UpdateOp::Kind::insert, it->a,
                       it->b});
  for (auto it = log.queries.rbegin(); it != log.queries.rend(); ++it) out.queries.push_back(log.ops.size() - *it);
  return out;
}

std::vector<std::int64_t> replay_values(const ReplayLog& log, const DecrementalLayout& l) {
  DynamicGraph g = log.start;
  g.set_logging(false);
  std::vector<std::int64_t> out;
  std::size_t k = 0;
  for (std::size_t q : log.queries) {
    for (; k < q; ++k) g.apply(log.ops[k]);
    out.push_back(decremental_value(g, l));
  }
  return out;
}

namespace {

DecrementalBuild build_for(PartialFamily family, const BitMatrix& m) {
  return family == PartialFamily::stpath ? build_decremental_st(m.size(), m) : build_decremental_matching(m.size(), m);
}

}  // namespace

std::vector<std::int64_t> measure_incremental_thresholds(PartialFamily family, int n) {
  BitMatrix m(n);
  m.set(1, 1, true);
  BitVector e(n);
  e.set(1, true);
  OuMvInstance probe = make_instance(m, std::vector<VectorPair>(n, VectorPair{e, e}));
  DecrementalBuild b = build_for(family, m);
  DecrementalLayout layout = b.layout;
  return replay_values(reverse_to_incremental(record_decremental(std::move(b), probe)), layout);
}

namespace {

std::string family_name(PartialFamily f) { return f == PartialFamily::stpath ? "stpath" : "matching"; }

Query partial_query(const DecrementalLayout& l) {
  if (l.family == PartialFamily::stpath) return {QueryKind::distance, l.s, l.t};
  return {QueryKind::matching_size, -1, -1};
}

std::int64_t answer_value(const DynamicGraph& g, const DecrementalLayout& l, const Answer& a) {
  if (l.family == PartialFamily::stpath) return a.value;
  return g.node_count() - 2 * a.value;
}

class DecrementalDriver : public ReductionDriver {
 public:
  explicit DecrementalDriver(DecrementalBuild b) : layout_(std::move(b.layout)) { graph_ = std::move(b.graph); }

  std::string family() const override { return family_name(layout_.family); }
  std::string variant() const override { return "decremental"; }
  int dimension() const override { return layout_.n; }
  const Layout& layout() const override { return layout_.labels; }
  Query query() const override { return partial_query(layout_); }

  std::vector<UpdateOp> begin_pair(const BitVector& u, const BitVector& v) override {
    ++round_;
    return record([&] { begin_round(graph_, layout_, round_, u, v); });
  }

  bool decode(const Answer& a) const override {
    std::int64_t value = answer_value(graph_, layout_, a);
    if (layout_.family == PartialFamily::stpath && value == kInfinity) return false;
    return value <= decremental_target(layout_, round_);
  }

  std::vector<UpdateOp> end_pair() override {
    return record([&] { end_round(graph_, layout_, round_); });
  }

  std::string rule() const override {
    if (layout_.family == PartialFamily::stpath) return "bit = 1 iff dist(s,t) <= 6 log n + 5 + 2j in round j";
    return "bit = 1 iff at most 4j - 2 nodes are unmatched in round j";
  }

 private:
  DecrementalLayout layout_;
  int round_ = 0;
};

class IncrementalDriver : public ReductionDriver {
 public:
  IncrementalDriver(PartialFamily family, const OuMvInstance& inst) : inst_(inst) {
    OuMvInstance reversed = inst;
    std::reverse(reversed.pairs.begin(), reversed.pairs.end());
    reversed.recompute_truth();
    DecrementalBuild b = build_for(family, inst.matrix);
    layout_ = b.layout;
    log_ = reverse_to_incremental(record_decremental(std::move(b), reversed));
    thresholds_ = measure_incremental_thresholds(family, inst.n());
    graph_ = log_.start;
    graph_.clear_log();
    graph_.set_logging(true);
  }

  std::string family() const override { return family_name(layout_.family); }
  std::string variant() const override { return "incremental"; }
  int dimension() const override { return layout_.n; }
  const Layout& layout() const override { return layout_.labels; }
  Query query() const override { return partial_query(layout_); }

  std::vector<UpdateOp> begin_pair(const BitVector& u, const BitVector& v) override {
    if (round_ >= static_cast<int>(log_.queries.size())) throw std::logic_error("incremental replay exhausted");
    const VectorPair& expect = inst_.pairs[static_cast<std::size_t>(round_)];
    if (!(expect.u == u) || !(expect.v == v))
      throw std::invalid_argument("incremental replay was recorded for a different pair stream");
    ++round_;
    return record([&] { advance(log_.queries[static_cast<std::size_t>(round_ - 1)]); });
  }

  bool decode(const Answer& a) const override {
    std::int64_t value = answer_value(graph_, layout_, a);
    if (layout_.family == PartialFamily::stpath && value == kInfinity) return false;
    return value <= thresholds_[static_cast<std::size_t>(round_ - 1)];
  }

  std::vector<UpdateOp> end_pair() override {
    if (round_ < static_cast<int>(log_.queries.size())) return {};
    return record([&] { advance(log_.ops.size()); });
  }

  std::string rule() const override { return "bit = 1 iff the query value is at most the measured round threshold"; }

 private:
  void advance(std::size_t to) {
    for (; pos_ < to; ++pos_) graph_.apply(log_.ops[pos_]);
  }

  OuMvInstance inst_;
  DecrementalLayout layout_;
  ReplayLog log_;
  std::vector<std::int64_t> thresholds_;
  std::size_t pos_ = 0;
  int round_ = 0;
};

}  // namespace

std::unique_ptr<ReductionDriver> make_decremental_driver(PartialFamily family, const BitMatrix& m) {
  return std::make_unique<DecrementalDriver>(build_for(family, m));
}

std::unique_ptr<ReductionDriver> make_incremental_driver(PartialFamily family, const OuMvInstance& inst) {
  return std::make_unique<IncrementalDriver>(family, inst);
}

}  // namespace oumv
