#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "fsr/error.hpp"

namespace fsr {

/// Membership grades live in [0, 1].
using Grade = double;

/// Tolerance for grade equality; reference-table comparisons use a looser 0.01.
inline constexpr double kGradeTol = 1e-9;

inline bool is_grade(double value) { return value >= 0.0 && value <= 1.0; }

inline bool near(double a, double b, double tol = kGradeTol) {
  return std::abs(a - b) <= tol;
}

/// A crisp subset of a universe, as ascending element indices.
using IndexSet = std::vector<Eigen::Index>;

/// Ordered, pairwise-distinct element labels. Order is significant: it drives
/// tie-breaking and output ordering. The name is workspace metadata and does
/// not participate in equality.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels, std::string name = "");

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(Eigen::Index i) const { return labels_.at(static_cast<size_t>(i)); }

  /// -1 when the label is unknown.
  Eigen::Index index_of(const std::string& label) const;
  /// Throws Error when the label is unknown.
  Eigen::Index require_index(const std::string& label) const;
  bool contains(const std::string& label) const { return index_of(label) >= 0; }

  /// Label sequences match exactly (name ignored).
  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }
  friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

  /// Same labels, any order; such universes can be aligned element-wise.
  bool same_elements(const Universe& other) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
};

std::vector<std::string> labels_of(const Universe& universe, const IndexSet& subset);

}  // namespace fsr
