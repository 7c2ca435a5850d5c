#include "fsr/fuzzy_soft_set.hpp"

#include <algorithm>

namespace fsr {

FuzzySoftSet::FuzzySoftSet(Universe universe, std::vector<std::string> parameters,
                           std::vector<Eigen::VectorXd> grades, std::string name)
    : name_(std::move(name)),
      universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      grades_(std::move(grades)) {
  if (parameters_.size() != grades_.size()) {
    throw Error("fuzzy soft set '" + name_ + "': " + std::to_string(parameters_.size()) +
                " parameters but " + std::to_string(grades_.size()) + " grade vectors");
  }
  for (size_t p = 0; p < parameters_.size(); ++p) {
    for (size_t q = p + 1; q < parameters_.size(); ++q) {
      if (parameters_[p] == parameters_[q]) {
        throw Error("fuzzy soft set '" + name_ + "': duplicate parameter '" + parameters_[p] +
                    "'");
      }
    }
    // Delegates range/size checks and error wording to FuzzySet.
    (void)FuzzySet(universe_, grades_[p]);
  }
}

bool FuzzySoftSet::has_parameter(const std::string& parameter) const {
  return std::find(parameters_.begin(), parameters_.end(), parameter) != parameters_.end();
}

FuzzySet FuzzySoftSet::member(const std::string& parameter) const {
  auto it = std::find(parameters_.begin(), parameters_.end(), parameter);
  if (it == parameters_.end()) {
    throw Error("fuzzy soft set '" + name_ + "' has no parameter '" + parameter + "'");
  }
  return member(static_cast<size_t>(it - parameters_.begin()));
}

FuzzySet FuzzySoftSet::member(size_t i) const {
  return FuzzySet(universe_, grades_.at(i));
}

FuzzyRelationMatrix pairwise_relation(const FuzzySoftSet& f, const std::string& ei,
                                      const FuzzySoftSet& g, const std::string& ej) {
  FuzzySet fs = f.member(ei);
  FuzzySet gs = aligned_to(g.member(ej), f.universe());
  Eigen::MatrixXd cells = fs.grades() * gs.grades().transpose();
  return FuzzyRelationMatrix(f.universe(), f.universe(), std::move(cells));
}

FuzzySet nary_combine(std::span<const FuzzySet> sets, TNorm combiner) {
  if (sets.empty()) throw Error("nary_combine over an empty set list");
  const Universe& universe = sets.front().universe();
  Eigen::VectorXd acc = sets.front().grades();
  for (size_t s = 1; s < sets.size(); ++s) {
    FuzzySet next = aligned_to(sets[s], universe);
    acc = combiner == TNorm::Min ? acc.cwiseMin(next.grades()).eval()
                                 : acc.cwiseProduct(next.grades()).eval();
  }
  return FuzzySet(universe, std::move(acc));
}

namespace {

// Tuple parameters enumerate the cartesian product with the leftmost
// parameter list varying slowest.
struct TupleProduct {
  std::vector<std::string> parameters;
  std::vector<std::vector<size_t>> picks;
};

TupleProduct tuple_product(std::span<const FuzzySoftSet> sets) {
  TupleProduct out;
  out.picks.push_back({});
  for (const FuzzySoftSet& set : sets) {
    if (set.parameters().empty()) {
      throw Error("fuzzy soft set '" + set.name() + "' has no parameters to combine");
    }
    std::vector<std::vector<size_t>> next;
    for (const auto& prefix : out.picks) {
      for (size_t p = 0; p < set.parameters().size(); ++p) {
        auto extended = prefix;
        extended.push_back(p);
        next.push_back(std::move(extended));
      }
    }
    out.picks = std::move(next);
  }
  out.parameters.reserve(out.picks.size());
  for (const auto& pick : out.picks) {
    std::string joined;
    for (size_t s = 0; s < pick.size(); ++s) {
      if (s) joined += ", ";
      joined += sets[s].parameters()[pick[s]];
    }
    out.parameters.push_back(std::move(joined));
  }
  return out;
}

std::string joined_names(std::span<const FuzzySoftSet> sets, const char* op) {
  std::string out = "(";
  for (size_t s = 0; s < sets.size(); ++s) {
    if (s) out += std::string(" ") + op + " ";
    out += sets[s].name();
  }
  return out + ")";
}

FuzzySoftSet tuple_combine(std::span<const FuzzySoftSet> sets, TNorm fold, const char* op) {
  if (sets.empty()) throw Error("soft product over an empty set list");
  const Universe& universe = sets.front().universe();
  TupleProduct tuples = tuple_product(sets);

  std::vector<Eigen::VectorXd> grades;
  grades.reserve(tuples.picks.size());
  for (const auto& pick : tuples.picks) {
    std::vector<FuzzySet> members;
    members.reserve(pick.size());
    for (size_t s = 0; s < pick.size(); ++s) members.push_back(sets[s].member(pick[s]));
    grades.push_back(nary_combine(members, fold).grades());
  }
  return FuzzySoftSet(universe, std::move(tuples.parameters), std::move(grades),
                      joined_names(sets, op));
}

}  // namespace

FuzzySoftSet soft_and(std::span<const FuzzySoftSet> sets) {
  return tuple_combine(sets, TNorm::Min, "and");
}

FuzzySoftSet soft_or(std::span<const FuzzySoftSet> sets) {
  if (sets.empty()) throw Error("soft product over an empty set list");
  const Universe& universe = sets.front().universe();
  TupleProduct tuples = tuple_product(sets);

  std::vector<Eigen::VectorXd> grades;
  grades.reserve(tuples.picks.size());
  for (const auto& pick : tuples.picks) {
    Eigen::VectorXd acc = aligned_to(sets[0].member(pick[0]), universe).grades();
    for (size_t s = 1; s < pick.size(); ++s) {
      acc = acc.cwiseMax(aligned_to(sets[s].member(pick[s]), universe).grades());
    }
    grades.push_back(std::move(acc));
  }
  return FuzzySoftSet(universe, std::move(tuples.parameters), std::move(grades),
                      joined_names(sets, "or"));
}

FuzzySoftSet soft_not(const FuzzySoftSet& set) {
  std::vector<Eigen::VectorXd> grades;
  grades.reserve(set.parameters().size());
  for (size_t p = 0; p < set.parameters().size(); ++p) {
    grades.push_back(complement(set.member(p)).grades());
  }
  return FuzzySoftSet(set.universe(), set.parameters(), std::move(grades),
                      "(not " + set.name() + ")");
}

FuzzySoftSet soft_nand(std::span<const FuzzySoftSet> sets) {
  return soft_not(soft_and(sets));
}

FuzzySoftSet soft_nor(std::span<const FuzzySoftSet> sets) {
  return soft_not(soft_or(sets));
}

FuzzySet extension_principle(
    std::span<const FuzzySet> inputs, const Universe& target,
    const std::function<std::string(const std::vector<std::string>&)>& f) {
  if (inputs.empty()) throw Error("extension principle needs at least one input set");
  Eigen::VectorXd grades = Eigen::VectorXd::Zero(target.size());
  for (const FuzzySet& input : inputs) {
    if (input.size() == 0) return FuzzySet(target, std::move(grades));
  }

  std::vector<Eigen::Index> cursor(inputs.size(), 0);
  while (true) {
    std::vector<std::string> tuple;
    tuple.reserve(inputs.size());
    double strength = 1.0;
    for (size_t s = 0; s < inputs.size(); ++s) {
      tuple.push_back(inputs[s].universe().label(cursor[s]));
      strength = std::min(strength, inputs[s].grade(cursor[s]));
    }
    std::string y = f(tuple);
    Eigen::Index yi = target.index_of(y);
    if (yi < 0) {
      throw Error("extension principle map produced '" + y + "' outside the target universe");
    }
    grades(yi) = std::max(grades(yi), strength);

    // Odometer advance, rightmost fastest.
    size_t s = inputs.size();
    while (s > 0) {
      --s;
      if (++cursor[s] < inputs[s].size()) break;
      cursor[s] = 0;
      if (s == 0) return FuzzySet(target, std::move(grades));
    }
  }
}

}  // namespace fsr
