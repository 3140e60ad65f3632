#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oumv/density.hpp"
#include "oumv/graph.hpp"
#include "oumv/instance.hpp"
#include "oumv/layout.hpp"
#include "oumv/matching.hpp"

namespace oumv {

enum class QueryKind { distance, matching_size, density };

std::string to_string(QueryKind kind);

struct Query {
  QueryKind kind = QueryKind::distance;
  NodeId s = -1;
  NodeId t = -1;
};

struct Answer {
  std::int64_t value = 0;  // distance (kInfinity if unreachable) or matching size
  Rational density{0};
  std::vector<NodeId> witness;

  std::string to_string(QueryKind kind) const;
};

// One built reduction: the static graph, the per-pair update generator and the rule
// that decodes a query answer into a bit. Each pair is processed as
// begin_pair -> query -> decode -> end_pair.
class ReductionDriver {
 public:
  virtual ~ReductionDriver() = default;

  virtual std::string family() const = 0;
  virtual std::string variant() const = 0;
  // Dimension of the OuMv instance this driver accepts.
  virtual int dimension() const = 0;

  const DynamicGraph& graph() const { return graph_; }
  virtual const Layout& layout() const = 0;

  virtual Query query() const = 0;
  virtual std::vector<UpdateOp> begin_pair(const BitVector& u, const BitVector& v) = 0;
  virtual bool decode(const Answer& answer) const = 0;
  virtual std::vector<UpdateOp> end_pair() { return {}; }

  // Canonical matching a matching adapter may start from.
  virtual const Matching* base_matching() const { return nullptr; }
  // Node count promised by the construction's closed formula, if any.
  virtual std::optional<std::int64_t> formula_nodes() const { return std::nullopt; }
  // Human-readable decision rule for reports.
  virtual std::string rule() const = 0;

 protected:
  // Runs `step` and returns the update ops it logged on graph_.
  template <typename F>
  std::vector<UpdateOp> record(F&& step) {
    std::size_t before = graph_.log().size();
    step();
    return {graph_.log().begin() + static_cast<std::ptrdiff_t>(before), graph_.log().end()};
  }

  DynamicGraph graph_;
};

}  // namespace oumv
