#include "fsr/soft_set.hpp"

#include <algorithm>

namespace fsr {

SoftSet::SoftSet(Universe universe, std::vector<std::string> parameters,
                 std::vector<IndexSet> approximations, std::string name)
    : name_(std::move(name)),
      universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      approximations_(std::move(approximations)) {
  if (parameters_.size() != approximations_.size()) {
    throw Error("soft set '" + name_ + "': " + std::to_string(parameters_.size()) +
                " parameters but " + std::to_string(approximations_.size()) + " approximations");
  }
  for (size_t p = 0; p < parameters_.size(); ++p) {
    for (size_t q = p + 1; q < parameters_.size(); ++q) {
      if (parameters_[p] == parameters_[q]) {
        throw Error("soft set '" + name_ + "': duplicate parameter '" + parameters_[p] + "'");
      }
    }
    auto& subset = approximations_[p];
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (Eigen::Index i : subset) {
      if (i < 0 || i >= universe_.size()) {
        throw Error("soft set '" + name_ + "': approximation of '" + parameters_[p] +
                    "' indexes outside the universe");
      }
    }
  }
}

bool SoftSet::has_parameter(const std::string& parameter) const {
  return std::find(parameters_.begin(), parameters_.end(), parameter) != parameters_.end();
}

const IndexSet& SoftSet::approximation(const std::string& parameter) const {
  auto it = std::find(parameters_.begin(), parameters_.end(), parameter);
  if (it == parameters_.end()) {
    throw Error("soft set '" + name_ + "' has no parameter '" + parameter + "'");
  }
  return approximations_[static_cast<size_t>(it - parameters_.begin())];
}

IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_unite(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const IndexSet& a, const IndexSet& b) {
  return set_intersect(a, b).empty();
}

SoftSet crisp_soft_relation(const SoftSet& f, const SoftSet& g,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (f.universe() != g.universe()) {
    throw Error("crisp_soft_relation requires a common universe");
  }
  std::vector<std::string> parameters;
  std::vector<IndexSet> approximations;
  parameters.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    parameters.push_back(x + ", " + y);
    approximations.push_back(set_intersect(f.approximation(x), g.approximation(y)));
  }
  std::string name = "R(" + f.name() + ", " + g.name() + ")";
  return SoftSet(f.universe(), std::move(parameters), std::move(approximations), std::move(name));
}

}  // namespace fsr
