#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fsr/fuzzy_relation.hpp"
#include "fsr/fuzzy_set.hpp"

namespace fsr {

/// A parameterized family of fuzzy sets over one shared universe.
class FuzzySoftSet {
 public:
  FuzzySoftSet() = default;
  FuzzySoftSet(Universe universe, std::vector<std::string> parameters,
               std::vector<Eigen::VectorXd> grades, std::string name = "");

  const std::string& name() const { return name_; }
  const Universe& universe() const { return universe_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  bool has_parameter(const std::string& parameter) const;
  /// The member fuzzy set for one parameter. Unknown parameter throws.
  FuzzySet member(const std::string& parameter) const;
  FuzzySet member(size_t i) const;

 private:
  std::string name_;
  Universe universe_;
  std::vector<std::string> parameters_;
  std::vector<Eigen::VectorXd> grades_;
};

/// Product relation of F(e_i) on G(e_j): cell (l, k) is the product of the
/// two member grades, i.e. the outer product of the grade vectors (rank 1).
FuzzyRelationMatrix pairwise_relation(const FuzzySoftSet& f, const std::string& ei,
                                      const FuzzySoftSet& g, const std::string& ej);

/// Element-wise t-norm fold across the sets; operands are aligned to the
/// first set's universe by label.
FuzzySet nary_combine(std::span<const FuzzySet> sets, TNorm combiner);

/// Generalized products over tuple parameters. The result ranges over the
/// cartesian product of the input parameter lists (leftmost slowest); tuple
/// parameters are the components joined with ", ".
FuzzySoftSet soft_and(std::span<const FuzzySoftSet> sets);
FuzzySoftSet soft_or(std::span<const FuzzySoftSet> sets);
/// Complements every member set; parameters are unchanged.
FuzzySoftSet soft_not(const FuzzySoftSet& set);
/// Complement of AND / complement of OR (De Morgan duals).
FuzzySoftSet soft_nand(std::span<const FuzzySoftSet> sets);
FuzzySoftSet soft_nor(std::span<const FuzzySoftSet> sets);

/// Lifts a crisp map over labels to fuzzy inputs: the grade of y is the max
/// over f-preimages of the min of component grades, 0 when the preimage is
/// empty. f must map every tuple into `target`.
FuzzySet extension_principle(
    std::span<const FuzzySet> inputs, const Universe& target,
    const std::function<std::string(const std::vector<std::string>&)>& f);

}  // namespace fsr
