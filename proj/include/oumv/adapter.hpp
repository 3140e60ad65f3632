#pragma once

#include <memory>
#include <string>

#include "oumv/driver.hpp"
#include "oumv/graph.hpp"
#include "oumv/matching.hpp"

namespace oumv {

// A dynamic algorithm under test: it owns a copy of the graph and sees every update.
class AlgorithmAdapter {
 public:
  virtual ~AlgorithmAdapter() = default;

  virtual std::string name() const = 0;
  // `base` is a matching of the initial graph the adapter may start from; may be null.
  virtual void init(const DynamicGraph& g, const Matching* base) = 0;
  virtual void apply(const UpdateOp& op) = 0;
  virtual Answer query(const Query& q) = 0;

  const DynamicGraph& graph() const { return graph_; }

 protected:
  DynamicGraph graph_;
};

// "recompute" answers every query kind from scratch. "recompute-bfs", "recompute-matching"
// and "recompute-densest" accept one kind each. "broken-bfs" reports distance + 1.
std::unique_ptr<AlgorithmAdapter> make_adapter(const std::string& name);

// Independent reference answer: BFS from t, blossom from scratch, push-relabel densest.
Answer reference_answer(const DynamicGraph& g, const Query& q);
bool same_answer(QueryKind kind, const Answer& a, const Answer& b);

}  // namespace oumv
