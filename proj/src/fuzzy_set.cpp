#include "fsr/fuzzy_set.hpp"

#include <algorithm>

namespace fsr {

const char* to_string(TNorm t) {
  return t == TNorm::Min ? "min" : "product";
}

TNorm tnorm_from_string(const std::string& s) {
  if (s == "min") return TNorm::Min;
  if (s == "product") return TNorm::Product;
  throw Error("unknown t-norm '" + s + "' (expected min or product)");
}

FuzzySet::FuzzySet(Universe universe, Eigen::VectorXd grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (grades_.size() != universe_.size()) {
    throw Error("fuzzy set over universe of " + std::to_string(universe_.size()) +
                " elements got " + std::to_string(grades_.size()) + " grades");
  }
  for (Eigen::Index i = 0; i < grades_.size(); ++i) {
    if (!is_grade(grades_(i))) {
      throw Error("grade " + std::to_string(grades_(i)) + " for element '" +
                  universe_.label(i) + "' outside [0, 1]");
    }
  }
}

namespace {

std::string brace_list(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

FuzzySet aligned_to(const FuzzySet& set, const Universe& target) {
  if (set.universe() == target) return set;
  if (!set.universe().same_elements(target)) {
    throw Error("universe mismatch: " + brace_list(set.universe().labels()) + " vs " +
                brace_list(target.labels()));
  }
  Eigen::VectorXd grades(target.size());
  for (Eigen::Index i = 0; i < target.size(); ++i) {
    grades(i) = set.grade(target.label(i));
  }
  return FuzzySet(target, std::move(grades));
}

FuzzySet set_union(const FuzzySet& a, const FuzzySet& b) {
  FuzzySet rhs = aligned_to(b, a.universe());
  return FuzzySet(a.universe(), a.grades().cwiseMax(rhs.grades()));
}

FuzzySet set_intersection(const FuzzySet& a, const FuzzySet& b) {
  FuzzySet rhs = aligned_to(b, a.universe());
  return FuzzySet(a.universe(), a.grades().cwiseMin(rhs.grades()));
}

FuzzySet complement(const FuzzySet& a) {
  return FuzzySet(a.universe(), Eigen::VectorXd::Ones(a.size()) - a.grades());
}

IndexSet alpha_cut(const FuzzySet& set, Grade alpha) {
  IndexSet out;
  for (Eigen::Index i = 0; i < set.size(); ++i) {
    if (set.grade(i) >= alpha) out.push_back(i);
  }
  return out;
}

double scalar_cardinality(const FuzzySet& set) {
  return set.grades().sum();
}

Grade tnorm_combine(TNorm t, std::span<const Grade> grades) {
  if (grades.empty()) throw Error("tnorm_combine over an empty grade list");
  Grade acc = grades[0];
  for (size_t i = 1; i < grades.size(); ++i) {
    acc = t == TNorm::Min ? std::min(acc, grades[i]) : acc * grades[i];
  }
  return acc;
}

bool approx_equal(const FuzzySet& a, const FuzzySet& b, double tol) {
  if (a.universe() != b.universe()) return false;
  return ((a.grades() - b.grades()).cwiseAbs().array() <= tol).all();
}

}  // namespace fsr
