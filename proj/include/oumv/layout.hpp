#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "oumv/graph.hpp"

namespace oumv {

std::string label(const std::string& set, int i);
std::string label(const std::string& set, int i, int j);

// Bijection between structured node labels such as "L4[2,3]" and dense node ids.
class Layout {
 public:
  NodeId add(const std::string& name, int layer = 0, const std::string& group = "");
  // Registers a node created elsewhere (e.g. an overlay dummy) under `name`.
  void attach(NodeId id, const std::string& name, int layer = 0, const std::string& group = "");

  NodeId id(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  const std::string& name(NodeId v) const { return names_[static_cast<std::size_t>(v)]; }
  int layer(NodeId v) const { return layers_[static_cast<std::size_t>(v)]; }
  void set_layer(NodeId v, int layer) { layers_[static_cast<std::size_t>(v)] = layer; }
  const std::string& group(NodeId v) const { return groups_[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(names_.size()); }

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& layers() const { return layers_; }
  std::vector<NodeId> members(const std::string& group) const;

  void write_map(std::ostream& os) const;
  DotStyle dot_style() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> layers_;
  std::vector<std::string> groups_;
  std::unordered_map<std::string, NodeId> index_;
};

}  // namespace oumv
