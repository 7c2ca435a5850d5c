#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fsr/universe.hpp"

namespace fsr {

/// Discretization of the unit interval used for truth tables. Must be
/// strictly increasing and contain both 0 and 1.
class TruthGrid {
 public:
  TruthGrid() = default;
  explicit TruthGrid(std::vector<Grade> values);

  const std::vector<Grade>& values() const { return values_; }
  size_t size() const { return values_.size(); }

  static TruthGrid crisp() { return TruthGrid({0.0, 1.0}); }

 private:
  std::vector<Grade> values_;
};

/// Implication connective. The material form max(1-p, q) breaks modus
/// ponens on fuzzy grids; the goedel form (1 if p <= q else q) validates it
/// and is the shipped default.
enum class Implication { Material, Goedel };

const char* to_string(Implication impl);
Implication implication_from_string(const std::string& s);

struct Proposition;
using PropositionPtr = std::shared_ptr<const Proposition>;

/// Expression tree over grades: and = min, or = max, not = 1 - x,
/// equiv = min of both implications.
struct Proposition {
  enum class Kind { Variable, Constant, Not, And, Or, Implies, Equiv };

  Kind kind;
  std::string name;       // Variable
  Grade value = 0.0;      // Constant
  PropositionPtr lhs, rhs;

  static PropositionPtr variable(std::string name);
  static PropositionPtr constant(Grade value);
  static PropositionPtr negation(PropositionPtr e);
  static PropositionPtr conjunction(PropositionPtr a, PropositionPtr b);
  static PropositionPtr disjunction(PropositionPtr a, PropositionPtr b);
  static PropositionPtr implication(PropositionPtr a, PropositionPtr b);
  static PropositionPtr equivalence(PropositionPtr a, PropositionPtr b);
};

/// Parses "!p & (q | 0.5) -> p <-> q". Operators: ! & | -> <-> with that
/// precedence (-> right-associative); parentheses; numeric constants;
/// identifier variables.
PropositionPtr parse_proposition(const std::string& text);

/// Renders the tree back to parser-compatible text.
std::string to_string(const PropositionPtr& expr);

/// Free variables in sorted name order.
std::vector<std::string> variables_of(const PropositionPtr& expr);

Grade apply_binary(Proposition::Kind kind, Grade a, Grade b, Implication impl);

/// Evaluates with every variable bound; an unbound variable throws.
Grade eval_proposition(const PropositionPtr& expr, const std::map<std::string, Grade>& assignment,
                       Implication impl = Implication::Goedel);

/// Two-dimensional truth table of a binary connective: cell (i, j) is the
/// connective applied to (grid[i], grid[j]); p runs down the rows.
struct CayleyTable {
  TruthGrid grid;
  Eigen::MatrixXd cells;
};

CayleyTable cayley_table(Proposition::Kind connective, const TruthGrid& grid,
                         Implication impl = Implication::Goedel);

enum class Verdict { Valid, Satisfiable, Unsatisfiable };

const char* to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Unsatisfiable;
  std::vector<std::string> variables;  // sorted; counterexample values align to this
  /// Every assignment whose truth value falls short of 1, in enumeration
  /// order (last variable fastest), up to max_counterexamples.
  std::vector<std::vector<Grade>> counterexamples;
  size_t counterexample_count = 0;  // total, independent of the cap
};

inline constexpr size_t kMaxClassifyVariables = 6;
inline constexpr size_t kMaxClassifyGrid = 11;

/// Full enumeration over grid^#variables. Valid: truth value 1 everywhere;
/// satisfiable: 1 somewhere. Bounded to 6 variables and grid size 11.
Classification classify_proposition(const PropositionPtr& expr, const TruthGrid& grid,
                                    Implication impl = Implication::Goedel,
                                    size_t max_counterexamples = SIZE_MAX);

enum class ComposeSide { Left, Right };

/// Max-min inference. Left: q_j = max_i min(p_i, R(i, j)) (vector composes
/// from the left, vec length = rows). Right: p_i = max_j min(R(i, j), q_j).
Eigen::VectorXd compose_maxmin(const Eigen::VectorXd& vec, const Eigen::MatrixXd& relation,
                               ComposeSide side);

}  // namespace fsr
