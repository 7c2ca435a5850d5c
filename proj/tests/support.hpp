#pragma once

#include <random>
#include <string>
#include <vector>

#include "fsr/fuzzy_relation.hpp"
#include "fsr/fuzzy_set.hpp"
#include "fsr/partition.hpp"
#include "fsr/universe.hpp"

#ifndef FSR_FIXTURE_DIR
#error "FSR_FIXTURE_DIR must point at the fixture directory"
#endif

namespace fsrtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(FSR_FIXTURE_DIR) + "/" + name;
}

inline fsr::Universe make_universe(Eigen::Index n, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return fsr::Universe(std::move(labels));
}

inline Eigen::MatrixXd random_grade_matrix(std::mt19937& rng, Eigen::Index n, Eigen::Index m,
                                           double lo = 0.0) {
  std::uniform_real_distribution<double> dist(lo, 1.0);
  Eigen::MatrixXd out(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = dist(rng);
  }
  return out;
}

inline Eigen::VectorXd random_grade_vector(std::mt19937& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = dist(rng);
  return out;
}

inline fsr::FuzzySet random_fuzzy_set(std::mt19937& rng, const fsr::Universe& universe) {
  return fsr::FuzzySet(universe, random_grade_vector(rng, universe.size()));
}

/// Symmetric, unit diagonal, off-diagonal grades drawn from a coarse grid so
/// the set of distinct cell values stays small.
inline Eigen::MatrixXd random_similarity_cells(std::mt19937& rng, Eigen::Index n,
                                               int levels = 10) {
  std::uniform_int_distribution<int> dist(0, levels);
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double v = static_cast<double>(dist(rng)) / levels;
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

/// Min-transitive closure by iterated max-min self-composition; the closure
/// of a reflexive symmetric matrix is a fuzzy equivalence.
inline Eigen::MatrixXd min_transitive_closure(Eigen::MatrixXd m) {
  while (true) {
    Eigen::MatrixXd next = m.cwiseMax(fsr::maxmin_compose(m, m));
    if (((next - m).cwiseAbs().array() <= 0.0).all()) return m;
    m = std::move(next);
  }
}

inline fsr::BlockFamily random_partition_blocks(std::mt19937& rng, Eigen::Index n,
                                                int max_blocks = 4) {
  std::uniform_int_distribution<int> dist(0, max_blocks - 1);
  std::vector<fsr::IndexSet> buckets(static_cast<size_t>(max_blocks));
  for (Eigen::Index i = 0; i < n; ++i) buckets[static_cast<size_t>(dist(rng))].push_back(i);
  fsr::BlockFamily out;
  for (auto& bucket : buckets) {
    if (!bucket.empty()) out.push_back(std::move(bucket));
  }
  return out;
}

}  // namespace fsrtest
