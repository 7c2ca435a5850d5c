#include "fsr/decision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fsr {

FuzzySet score_alternatives(std::span<const FuzzySoftSet> sets, const DecisionQuery& query) {
  if (query.criteria.empty()) throw Error("decision query has no criteria");

  std::vector<FuzzySet> members;
  members.reserve(query.criteria.size());
  for (const Criterion& criterion : query.criteria) {
    auto it = std::find_if(sets.begin(), sets.end(), [&](const FuzzySoftSet& s) {
      return s.name() == criterion.set_name;
    });
    if (it == sets.end()) {
      throw Error("criterion (" + criterion.set_name + ", " + criterion.parameter +
                  "): no fuzzy soft set named '" + criterion.set_name + "'");
    }
    if (!it->has_parameter(criterion.parameter)) {
      throw Error("criterion (" + criterion.set_name + ", " + criterion.parameter + "): set '" +
                  criterion.set_name + "' has no parameter '" + criterion.parameter + "'");
    }
    members.push_back(it->member(criterion.parameter));
  }
  return nary_combine(members, query.combiner);
}

std::pair<std::string, Grade> select_best(const FuzzySet& scores) {
  if (scores.size() == 0) throw Error("select_best over an empty universe");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < scores.size(); ++i) {
    if (scores.grade(i) > scores.grade(best)) best = i;  // ties keep the earliest
  }
  return {scores.universe().label(best), scores.grade(best)};
}

Ranking rank(const FuzzySet& scores) {
  if (scores.size() == 0) throw Error("rank over an empty universe");
  std::vector<Eigen::Index> order(static_cast<size_t>(scores.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return scores.grade(a) > scores.grade(b);
  });
  Ranking out;
  out.entries.reserve(order.size());
  for (Eigen::Index i : order) {
    out.entries.emplace_back(scores.universe().label(i), scores.grade(i));
  }
  return out;
}

PayoffTable regret_table(const PayoffTable& p) {
  if (p.payoffs.rows() != static_cast<Eigen::Index>(p.states.size()) ||
      p.payoffs.cols() != static_cast<Eigen::Index>(p.actions.size())) {
    throw Error("payoff table dimensions do not match its labels");
  }
  Eigen::MatrixXd regrets = p.payoffs;
  for (Eigen::Index i = 0; i < regrets.rows(); ++i) {
    if (regrets.cols() == 0) break;
    double row_max = regrets.row(i).maxCoeff();
    regrets.row(i) = Eigen::RowVectorXd::Constant(regrets.cols(), row_max) - regrets.row(i);
  }
  return {p.states, p.actions, std::move(regrets)};
}

EvResult expected_value(std::span<const EvOption> options) {
  if (options.empty()) throw Error("expected_value over an empty option list");
  EvResult out;
  out.expected_values.resize(static_cast<Eigen::Index>(options.size()));
  for (size_t i = 0; i < options.size(); ++i) {
    if (!is_grade(options[i].probability)) {
      throw Error("option " + std::to_string(i + 1) + " probability " +
                  std::to_string(options[i].probability) + " outside [0, 1]");
    }
    out.expected_values(static_cast<Eigen::Index>(i)) =
        options[i].probability * options[i].value;
  }
  out.best = 0;
  for (Eigen::Index i = 1; i < out.expected_values.size(); ++i) {
    if (out.expected_values(i) > out.expected_values(out.best)) out.best = i;
  }
  return out;
}

DistributionCheck validate_probability(const Eigen::VectorXd& prob) {
  DistributionCheck out;
  for (Eigen::Index i = 0; i < prob.size(); ++i) {
    if (prob(i) < 0.0 || prob(i) > 1.0) {
      out.violations.push_back("entry " + std::to_string(i + 1) + " = " +
                               std::to_string(prob(i)) + " outside [0, 1]");
    }
  }
  double sum = prob.sum();
  if (std::abs(sum - 1.0) > kProbabilitySumTol) {
    out.violations.push_back("sum = " + std::to_string(sum) + ", expected 1");
  }
  out.valid = out.violations.empty();
  return out;
}

std::vector<Eigen::Index> possibility_dominance(const Eigen::VectorXd& prob,
                                                const Eigen::VectorXd& poss) {
  if (prob.size() != poss.size()) {
    throw Error("probability and possibility vectors differ in length");
  }
  std::vector<Eigen::Index> violations;
  for (Eigen::Index i = 0; i < prob.size(); ++i) {
    if (poss(i) < prob(i) - 1e-12) violations.push_back(i);
  }
  return violations;
}

}  // namespace fsr
