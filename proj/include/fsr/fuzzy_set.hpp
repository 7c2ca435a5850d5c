#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fsr/universe.hpp"

namespace fsr {

/// The two t-norms used for combining grades.
enum class TNorm { Min, Product };

const char* to_string(TNorm t);
TNorm tnorm_from_string(const std::string& s);

/// A finite fuzzy set: one grade per universe element, aligned by index.
class FuzzySet {
 public:
  FuzzySet() = default;
  /// Throws when sizes differ or any grade leaves [0, 1].
  FuzzySet(Universe universe, Eigen::VectorXd grades);

  const Universe& universe() const { return universe_; }
  const Eigen::VectorXd& grades() const { return grades_; }
  Eigen::Index size() const { return grades_.size(); }

  Grade grade(Eigen::Index i) const { return grades_(i); }
  Grade grade(const std::string& label) const { return grades_(universe_.require_index(label)); }

 private:
  Universe universe_;
  Eigen::VectorXd grades_;
};

/// Re-orders `set` onto `target`, matching elements by label.
/// Throws when the label sets differ.
FuzzySet aligned_to(const FuzzySet& set, const Universe& target);

/// Pointwise max. The right operand is aligned to the left universe by label.
FuzzySet set_union(const FuzzySet& a, const FuzzySet& b);
/// Pointwise min.
FuzzySet set_intersection(const FuzzySet& a, const FuzzySet& b);
/// Pointwise 1 - grade.
FuzzySet complement(const FuzzySet& a);

/// Weak cut: every element whose grade is >= alpha. alpha = 0 yields the
/// whole universe (not just the support).
IndexSet alpha_cut(const FuzzySet& set, Grade alpha);

/// Sum of grades.
double scalar_cardinality(const FuzzySet& set);

/// Folds min or product over the grades. Throws on an empty list.
Grade tnorm_combine(TNorm t, std::span<const Grade> grades);

bool approx_equal(const FuzzySet& a, const FuzzySet& b, double tol = kGradeTol);

}  // namespace fsr
