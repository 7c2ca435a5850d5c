#include "fsr/crisp_relation.hpp"

namespace fsr {

CrispRelationMatrix::CrispRelationMatrix(Universe rows, Universe cols, Eigen::MatrixXi cells)
    : rows_(std::move(rows)), cols_(std::move(cols)), cells_(std::move(cells)) {
  if (cells_.rows() != rows_.size() || cells_.cols() != cols_.size()) {
    throw Error("relation matrix dimensions do not match the universes");
  }
  if (((cells_.array() != 0) && (cells_.array() != 1)).any()) {
    throw Error("crisp relation cells must be 0 or 1");
  }
}

CrispRelationMatrix build_relation_matrix(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const Universe& rows, const Universe& cols) {
  Eigen::MatrixXi cells = Eigen::MatrixXi::Zero(rows.size(), cols.size());
  for (const auto& [r, c] : pairs) {
    cells(rows.require_index(r), cols.require_index(c)) = 1;
  }
  return CrispRelationMatrix(rows, cols, std::move(cells));
}

CrispProperties check_crisp_properties(const CrispRelationMatrix& m) {
  if (!m.square()) throw Error("property check requires a square relation");
  const Eigen::MatrixXi& t = m.cells();
  const Eigen::Index n = t.rows();

  CrispProperties out;
  out.reflexive = (t.diagonal().array() == 1).all();
  out.symmetric = t == t.transpose().eval();
  out.transitive = true;
  for (Eigen::Index a = 0; a < n && out.transitive; ++a) {
    for (Eigen::Index b = 0; b < n && out.transitive; ++b) {
      if (!t(a, b)) continue;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (t(b, c) && !t(a, c)) {
          out.transitive = false;
          break;
        }
      }
    }
  }
  return out;
}

IndexSet similarity_class(const CrispRelationMatrix& m, const std::string& e) {
  if (!m.square()) throw Error("similarity class requires a square relation");
  const Eigen::Index col = m.cols().require_index(e);
  IndexSet out;
  for (Eigen::Index i = 0; i < m.cells().rows(); ++i) {
    if (m.at(i, col)) out.push_back(i);
  }
  return out;
}

Eigen::MatrixXi boolean_compose(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  if (a.cols() != b.rows()) throw Error("boolean_compose dimension mismatch");
  return ((a * b).array() > 0).cast<int>();
}

CrispRelationMatrix transpose(const CrispRelationMatrix& m) {
  return CrispRelationMatrix(m.cols(), m.rows(), m.cells().transpose());
}

}  // namespace fsr
