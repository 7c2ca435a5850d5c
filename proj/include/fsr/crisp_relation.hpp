#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fsr/universe.hpp"

namespace fsr {

/// Boolean relation matrix: cell (i, j) is 1 iff row element i relates to
/// column element j.
class CrispRelationMatrix {
 public:
  CrispRelationMatrix() = default;
  /// Cells must be 0/1 and match the universe dimensions.
  CrispRelationMatrix(Universe rows, Universe cols, Eigen::MatrixXi cells);

  const Universe& rows() const { return rows_; }
  const Universe& cols() const { return cols_; }
  const Eigen::MatrixXi& cells() const { return cells_; }
  bool square() const { return rows_ == cols_; }

  bool at(Eigen::Index i, Eigen::Index j) const { return cells_(i, j) != 0; }

 private:
  Universe rows_;
  Universe cols_;
  Eigen::MatrixXi cells_;
};

/// Cell (i, j) = 1 iff (row label, col label) appears in `pairs`; duplicates
/// collapse. Unknown labels throw.
CrispRelationMatrix build_relation_matrix(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const Universe& rows, const Universe& cols);

struct CrispProperties {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;

  bool similarity() const { return reflexive && symmetric; }
  bool equivalence() const { return similarity() && transitive; }
};

/// Requires a square matrix over one universe.
CrispProperties check_crisp_properties(const CrispRelationMatrix& m);

/// Elements related to e: {e_i | (e_i, e) in the relation} (a column read).
IndexSet similarity_class(const CrispRelationMatrix& m, const std::string& e);

/// Boolean max-min self-composition (i, k) = OR_j (a(i,j) AND b(j,k)).
Eigen::MatrixXi boolean_compose(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b);

CrispRelationMatrix transpose(const CrispRelationMatrix& m);

}  // namespace fsr
