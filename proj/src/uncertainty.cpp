#include "fsr/uncertainty.hpp"

#include <cmath>

namespace fsr {

namespace {

void require_square(const FuzzyRelationMatrix& t, const char* op) {
  if (!t.square()) throw Error(std::string(op) + " requires a square relation");
}

}  // namespace

double expected_cardinality(const FuzzyRelationMatrix& t, Eigen::Index i) {
  require_square(t, "expected_cardinality");
  const Eigen::Index n = t.rows().size();
  if (n == 0) throw Error("expected_cardinality over an empty universe");
  if (i < 0 || i >= n) throw Error("expected_cardinality row index out of range");
  return t.cells().row(i).sum() / static_cast<double>(n);
}

double uncertainty_quantity(const FuzzyRelationMatrix& t, Eigen::Index i) {
  double card = expected_cardinality(t, i);
  if (card <= 0.0) {
    throw Error("degenerate class: element '" + t.rows().label(i) +
                "' relates to nothing (all-zero row)");
  }
  return -std::log2(card);
}

double average_uncertainty(const FuzzyRelationMatrix& t) {
  require_square(t, "average_uncertainty");
  const Eigen::Index n = t.rows().size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) sum += uncertainty_quantity(t, i);
  return sum / static_cast<double>(n);
}

}  // namespace fsr
