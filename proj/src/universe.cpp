#include "fsr/universe.hpp"

#include <algorithm>
#include <unordered_set>

namespace fsr {

Universe::Universe(std::vector<std::string> labels, std::string name)
    : name_(std::move(name)), labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error("universe" + (name_.empty() ? "" : " '" + name_ + "'") +
                  ": duplicate label '" + label + "'");
    }
  }
}

Eigen::Index Universe::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return -1;
  return static_cast<Eigen::Index>(it - labels_.begin());
}

Eigen::Index Universe::require_index(const std::string& label) const {
  Eigen::Index i = index_of(label);
  if (i < 0) {
    throw Error("label '" + label + "' not in universe" +
                (name_.empty() ? "" : " '" + name_ + "'"));
  }
  return i;
}

bool Universe::same_elements(const Universe& other) const {
  if (labels_.size() != other.labels_.size()) return false;
  std::vector<std::string> a = labels_;
  std::vector<std::string> b = other.labels_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<std::string> labels_of(const Universe& universe, const IndexSet& subset) {
  std::vector<std::string> out;
  out.reserve(subset.size());
  for (Eigen::Index i : subset) out.push_back(universe.label(i));
  return out;
}

}  // namespace fsr
