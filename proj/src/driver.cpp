#include <stdexcept>

#include "oumv/adapter.hpp"
#include "oumv/density.hpp"

namespace oumv {

std::string to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::distance: return "distance";
    case QueryKind::matching_size: return "matching_size";
    case QueryKind::density: return "density";
  }
  return "?";
}

std::string Answer::to_string(QueryKind kind) const {
  if (kind == QueryKind::density) return oumv::to_string(density);
  if (kind == QueryKind::distance && value == kInfinity) return "inf";
  return std::to_string(value);
}

namespace {

class RecomputeAdapter : public AlgorithmAdapter {
 public:
  RecomputeAdapter(std::string name, bool bfs, bool matching, bool densest, bool broken = false)
      : name_(std::move(name)), bfs_(bfs), matching_(matching), densest_(densest), broken_(broken) {}

  std::string name() const override { return name_; }

  void init(const DynamicGraph& g, const Matching* base) override {
    graph_ = g;
    graph_.set_logging(false);
    cache_ = base ? *base : Matching(g.node_count());
  }

  void apply(const UpdateOp& op) override { graph_.apply(op); }

  Answer query(const Query& q) override {
    Answer a;
    switch (q.kind) {
      case QueryKind::distance:
        if (!bfs_) break;
        a.value = bfs_distance(graph_, q.s, q.t);
        if (broken_ && a.value != kInfinity) a.value += 1;
        return a;
      case QueryKind::matching_size: {
        if (!matching_) break;
        Matching hint = restrict_matching(graph_, cache_);
        cache_ = max_matching(graph_, &hint);
        a.value = cache_.size();
        return a;
      }
      case QueryKind::density: {
        if (!densest_) break;
        DensestResult r = densest_subgraph(graph_);
        a.density = r.density;
        a.witness = std::move(r.nodes);
        return a;
      }
    }
    throw std::invalid_argument("adapter " + name_ + " cannot answer " + to_string(q.kind) + " queries");
  }

 private:
  std::string name_;
  bool bfs_, matching_, densest_, broken_;
  Matching cache_;
};

}  // namespace

std::unique_ptr<AlgorithmAdapter> make_adapter(const std::string& name) {
  if (name == "recompute") return std::make_unique<RecomputeAdapter>(name, true, true, true);
  if (name == "recompute-bfs") return std::make_unique<RecomputeAdapter>(name, true, false, false);
  if (name == "recompute-matching") return std::make_unique<RecomputeAdapter>(name, false, true, false);
  if (name == "recompute-densest") return std::make_unique<RecomputeAdapter>(name, false, false, true);
  if (name == "broken-bfs") return std::make_unique<RecomputeAdapter>(name, true, false, false, true);
  throw std::invalid_argument("unknown adapter: " + name);
}

Answer reference_answer(const DynamicGraph& g, const Query& q) {
  Answer a;
  switch (q.kind) {
    case QueryKind::distance: a.value = bfs_distance(g, q.t, q.s); break;
    case QueryKind::matching_size: a.value = edmonds_blossom(g, Matching(g.node_count())).size(); break;
    case QueryKind::density: {
      DensestResult r = densest_subgraph(g, FlowAlgorithm::push_relabel);
      a.density = r.density;
      a.witness = std::move(r.nodes);
      break;
    }
  }
  return a;
}

bool same_answer(QueryKind kind, const Answer& a, const Answer& b) {
  return kind == QueryKind::density ? a.density == b.density : a.value == b.value;
}

}  // namespace oumv
