#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "fsr/crisp_relation.hpp"
#include "fsr/fuzzy_set.hpp"
#include "fsr/universe.hpp"

namespace fsr {

/// Grade matrix over a row universe and a column universe.
class FuzzyRelationMatrix {
 public:
  FuzzyRelationMatrix() = default;
  /// Cells must be grades and match the universe dimensions.
  FuzzyRelationMatrix(Universe rows, Universe cols, Eigen::MatrixXd cells);

  const Universe& rows() const { return rows_; }
  const Universe& cols() const { return cols_; }
  const Eigen::MatrixXd& cells() const { return cells_; }
  bool square() const { return rows_ == cols_; }

  Grade at(Eigen::Index i, Eigen::Index j) const { return cells_(i, j); }

  /// Row i as a fuzzy set over the column universe.
  FuzzySet row(Eigen::Index i) const;

 private:
  Universe rows_;
  Universe cols_;
  Eigen::MatrixXd cells_;
};

/// Pointwise max / min; operands must share both universes.
FuzzyRelationMatrix relation_union(const FuzzyRelationMatrix& a, const FuzzyRelationMatrix& b);
FuzzyRelationMatrix relation_intersection(const FuzzyRelationMatrix& a,
                                          const FuzzyRelationMatrix& b);
/// a(i,j) <= b(i,j) everywhere.
bool relation_contains(const FuzzyRelationMatrix& inner, const FuzzyRelationMatrix& outer);

/// Weak cut: cell = 1 iff grade >= alpha.
CrispRelationMatrix alpha_cut(const FuzzyRelationMatrix& t, Grade alpha);

struct FuzzyProperties {
  bool reflexive = false;       // T(a, a) = 1
  bool symmetric = false;       // T(a, b) = T(b, a)
  bool min_transitive = false;  // T(a, c) >= max_b min(T(a, b), T(b, c))

  bool similarity() const { return reflexive && symmetric; }
  bool equivalence() const { return similarity() && min_transitive; }
};

/// Requires a square matrix; checks are kGradeTol-tolerant.
FuzzyProperties check_fuzzy_properties(const FuzzyRelationMatrix& t);

/// Max-min composition (i, k) = max_j min(a(i, j), b(j, k)).
Eigen::MatrixXd maxmin_compose(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Class of e_i: row i of the relation as a fuzzy set over the universe.
struct EquivalenceClass {
  std::string center;
  FuzzySet membership;
};

EquivalenceClass equivalence_class(const FuzzyRelationMatrix& t, const std::string& element);
/// All classes in universe order (rows kept verbatim, no deduplication).
std::vector<EquivalenceClass> quotient_set(const FuzzyRelationMatrix& t);

}  // namespace fsr
