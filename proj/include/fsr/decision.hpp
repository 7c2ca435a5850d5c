#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fsr/fuzzy_soft_set.hpp"

namespace fsr {

/// One (fuzzy soft set, parameter) choice.
struct Criterion {
  std::string set_name;
  std::string parameter;
};

/// Chosen criteria plus the t-norm that combines them. The combiner is
/// always explicit; nothing defaults silently.
struct DecisionQuery {
  std::vector<Criterion> criteria;
  TNorm combiner = TNorm::Min;
};

/// Resolves every criterion against `sets` and folds the member fuzzy sets
/// with the query's combiner. Unresolvable criteria and universe mismatches
/// throw with the offending criterion named.
FuzzySet score_alternatives(std::span<const FuzzySoftSet> sets, const DecisionQuery& query);

/// Scores in descending order; ties keep universe order.
struct Ranking {
  std::vector<std::pair<std::string, Grade>> entries;
};

/// Argmax by score, ties broken by earliest universe position.
std::pair<std::string, Grade> select_best(const FuzzySet& scores);
Ranking rank(const FuzzySet& scores);

/// States-by-actions outcome matrix.
struct PayoffTable {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  Eigen::MatrixXd payoffs;
};

/// Opportunity-loss table: per state row, the row maximum minus each entry.
/// Every row of the result contains at least one zero.
PayoffTable regret_table(const PayoffTable& p);

struct EvOption {
  double probability = 0.0;
  double value = 0.0;
};

struct EvResult {
  Eigen::VectorXd expected_values;
  Eigen::Index best = 0;  // argmax, ties to the earliest option
};

/// EV = probability * value per option. Probabilities outside [0, 1] throw.
EvResult expected_value(std::span<const EvOption> options);

struct DistributionCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

inline constexpr double kProbabilitySumTol = 1e-6;

/// Entries in [0, 1] and summing to 1 within kProbabilitySumTol.
/// Violations are reported, never thrown.
DistributionCheck validate_probability(const Eigen::VectorXd& prob);

/// Indices where possibility < probability; empty means consistent.
std::vector<Eigen::Index> possibility_dominance(const Eigen::VectorXd& prob,
                                                const Eigen::VectorXd& poss);

}  // namespace fsr
