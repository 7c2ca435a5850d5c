#include "fsr/fuzzy_relation.hpp"

namespace fsr {

FuzzyRelationMatrix::FuzzyRelationMatrix(Universe rows, Universe cols, Eigen::MatrixXd cells)
    : rows_(std::move(rows)), cols_(std::move(cols)), cells_(std::move(cells)) {
  if (cells_.rows() != rows_.size() || cells_.cols() != cols_.size()) {
    throw Error("relation matrix dimensions do not match the universes");
  }
  for (Eigen::Index i = 0; i < cells_.rows(); ++i) {
    for (Eigen::Index j = 0; j < cells_.cols(); ++j) {
      if (!is_grade(cells_(i, j))) {
        throw Error("relation cell (" + rows_.label(i) + ", " + cols_.label(j) + ") = " +
                    std::to_string(cells_(i, j)) + " outside [0, 1]");
      }
    }
  }
}

FuzzySet FuzzyRelationMatrix::row(Eigen::Index i) const {
  if (i < 0 || i >= cells_.rows()) throw Error("relation row index out of range");
  return FuzzySet(cols_, cells_.row(i).transpose());
}

namespace {

void require_same_universes(const FuzzyRelationMatrix& a, const FuzzyRelationMatrix& b,
                            const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(std::string(op) + " requires relations over identical universes");
  }
}

}  // namespace

FuzzyRelationMatrix relation_union(const FuzzyRelationMatrix& a, const FuzzyRelationMatrix& b) {
  require_same_universes(a, b, "relation union");
  return FuzzyRelationMatrix(a.rows(), a.cols(), a.cells().cwiseMax(b.cells()));
}

FuzzyRelationMatrix relation_intersection(const FuzzyRelationMatrix& a,
                                          const FuzzyRelationMatrix& b) {
  require_same_universes(a, b, "relation intersection");
  return FuzzyRelationMatrix(a.rows(), a.cols(), a.cells().cwiseMin(b.cells()));
}

bool relation_contains(const FuzzyRelationMatrix& inner, const FuzzyRelationMatrix& outer) {
  require_same_universes(inner, outer, "relation containment");
  return (inner.cells().array() <= outer.cells().array()).all();
}

CrispRelationMatrix alpha_cut(const FuzzyRelationMatrix& t, Grade alpha) {
  Eigen::MatrixXi cells = (t.cells().array() >= alpha).cast<int>();
  return CrispRelationMatrix(t.rows(), t.cols(), std::move(cells));
}

FuzzyProperties check_fuzzy_properties(const FuzzyRelationMatrix& t) {
  if (!t.square()) throw Error("property check requires a square relation");
  const Eigen::MatrixXd& m = t.cells();

  FuzzyProperties out;
  out.reflexive = ((m.diagonal().array() - 1.0).abs() <= kGradeTol).all();
  out.symmetric = ((m - m.transpose().eval()).cwiseAbs().array() <= kGradeTol).all();
  Eigen::MatrixXd composed = maxmin_compose(m, m);
  out.min_transitive = ((composed - m).array() <= kGradeTol).all();
  return out;
}

Eigen::MatrixXd maxmin_compose(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.rows()) throw Error("maxmin_compose dimension mismatch");
  Eigen::MatrixXd out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < b.cols(); ++k) {
      double best = 0.0;
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        best = std::max(best, std::min(a(i, j), b(j, k)));
      }
      out(i, k) = best;
    }
  }
  return out;
}

EquivalenceClass equivalence_class(const FuzzyRelationMatrix& t, const std::string& element) {
  if (!t.square()) throw Error("equivalence class requires a square relation");
  Eigen::Index i = t.rows().require_index(element);
  return {element, t.row(i)};
}

std::vector<EquivalenceClass> quotient_set(const FuzzyRelationMatrix& t) {
  if (!t.square()) throw Error("quotient set requires a square relation");
  std::vector<EquivalenceClass> out;
  out.reserve(static_cast<size_t>(t.rows().size()));
  for (Eigen::Index i = 0; i < t.rows().size(); ++i) {
    out.push_back({t.rows().label(i), t.row(i)});
  }
  return out;
}

}  // namespace fsr
