#include "oumv/layout.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

namespace oumv {

std::string label(const std::string& set, int i) { return set + "[" + std::to_string(i) + "]"; }

std::string label(const std::string& set, int i, int j) {
  return set + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

NodeId Layout::add(const std::string& name, int layer, const std::string& group) {
  NodeId v = size();
  attach(v, name, layer, group);
  return v;
}

void Layout::attach(NodeId id, const std::string& name, int layer, const std::string& group) {
  if (id != size()) throw std::logic_error("layout: node ids must be attached in order");
  if (!index_.emplace(name, id).second) throw std::logic_error("layout: duplicate label " + name);
  names_.push_back(name);
  layers_.push_back(layer);
  groups_.push_back(group);
}

NodeId Layout::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("layout: unknown label " + name);
  return it->second;
}

std::vector<NodeId> Layout::members(const std::string& group) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < size(); ++v)
    if (groups_[v] == group) out.push_back(v);
  return out;
}

void Layout::write_map(std::ostream& os) const {
  for (NodeId v = 0; v < size(); ++v) os << names_[v] << ' ' << v << '\n';
}

DotStyle Layout::dot_style() const {
  static const char* palette[] = {"lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon",
                                  "lightcyan", "wheat", "lavender", "honeydew"};
  DotStyle st;
  st.labels = names_;
  st.rank = layers_;
  std::map<std::string, int> colors;
  for (const auto& g : groups_) {
    auto it = colors.find(g);
    if (it == colors.end()) colors.emplace(g, static_cast<int>(colors.size()));
    st.color.push_back(palette[colors[g] % 10]);
  }
  return st;
}

}  // namespace oumv
