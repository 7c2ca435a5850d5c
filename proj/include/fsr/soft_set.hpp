#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fsr/universe.hpp"

namespace fsr {

/// A parameterized family of crisp subsets of one universe.
class SoftSet {
 public:
  SoftSet() = default;
  /// One approximation per parameter, each a subset of the universe.
  SoftSet(Universe universe, std::vector<std::string> parameters,
          std::vector<IndexSet> approximations, std::string name = "");

  const std::string& name() const { return name_; }
  const Universe& universe() const { return universe_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  bool has_parameter(const std::string& parameter) const;
  const IndexSet& approximation(const std::string& parameter) const;
  const IndexSet& approximation(size_t i) const { return approximations_.at(i); }

 private:
  std::string name_;
  Universe universe_;
  std::vector<std::string> parameters_;
  std::vector<IndexSet> approximations_;
};

// Small crisp-subset algebra on ascending index sets.
IndexSet set_intersect(const IndexSet& a, const IndexSet& b);
IndexSet set_unite(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);
bool disjoint(const IndexSet& a, const IndexSet& b);

/// Builds the soft relation of F on G for the requested parameter pairs:
/// each pair (x, y) maps to F(x) ∩ G(y). Pair parameters are the components
/// joined with ", ". F and G must share a universe.
SoftSet crisp_soft_relation(const SoftSet& f, const SoftSet& g,
                            const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace fsr
