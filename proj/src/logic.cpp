#include "fsr/logic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>

namespace fsr {

TruthGrid::TruthGrid(std::vector<Grade> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error("truth grid may not be empty");
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!is_grade(values_[i])) throw Error("truth grid value outside [0, 1]");
    if (i > 0 && !(values_[i] > values_[i - 1])) {
      throw Error("truth grid values must be strictly increasing");
    }
  }
  if (values_.front() != 0.0 || values_.back() != 1.0) {
    throw Error("truth grid must contain 0 and 1");
  }
}

const char* to_string(Implication impl) {
  return impl == Implication::Material ? "material" : "goedel";
}

Implication implication_from_string(const std::string& s) {
  if (s == "material") return Implication::Material;
  if (s == "goedel") return Implication::Goedel;
  throw Error("unknown implication '" + s + "' (expected material or goedel)");
}

PropositionPtr Proposition::variable(std::string name) {
  auto node = std::make_shared<Proposition>();
  node->kind = Kind::Variable;
  node->name = std::move(name);
  return node;
}

PropositionPtr Proposition::constant(Grade value) {
  if (!is_grade(value)) throw Error("proposition constant outside [0, 1]");
  auto node = std::make_shared<Proposition>();
  node->kind = Kind::Constant;
  node->value = value;
  return node;
}

namespace {

PropositionPtr make_node(Proposition::Kind kind, PropositionPtr lhs, PropositionPtr rhs) {
  auto node = std::make_shared<Proposition>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

}  // namespace

PropositionPtr Proposition::negation(PropositionPtr e) {
  return make_node(Kind::Not, std::move(e), nullptr);
}
PropositionPtr Proposition::conjunction(PropositionPtr a, PropositionPtr b) {
  return make_node(Kind::And, std::move(a), std::move(b));
}
PropositionPtr Proposition::disjunction(PropositionPtr a, PropositionPtr b) {
  return make_node(Kind::Or, std::move(a), std::move(b));
}
PropositionPtr Proposition::implication(PropositionPtr a, PropositionPtr b) {
  return make_node(Kind::Implies, std::move(a), std::move(b));
}
PropositionPtr Proposition::equivalence(PropositionPtr a, PropositionPtr b) {
  return make_node(Kind::Equiv, std::move(a), std::move(b));
}

// --- parsing ---------------------------------------------------------------

namespace {

// equiv   := implies ("<->" implies)*
// implies := or ("->" implies)?           right associative
// or      := and ("|" and)*
// and     := unary ("&" unary)*
// unary   := "!" unary | "(" equiv ")" | number | identifier
class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  PropositionPtr parse() {
    PropositionPtr e = equiv();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  PropositionPtr equiv() {
    PropositionPtr e = implies();
    while (eat("<->")) e = Proposition::equivalence(e, implies());
    return e;
  }

  PropositionPtr implies() {
    PropositionPtr e = disj();
    if (eat("->")) e = Proposition::implication(e, implies());
    return e;
  }

  PropositionPtr disj() {
    PropositionPtr e = conj();
    while (eat("|")) e = Proposition::disjunction(e, conj());
    return e;
  }

  PropositionPtr conj() {
    PropositionPtr e = unary();
    while (eat("&")) e = Proposition::conjunction(e, unary());
    return e;
  }

  PropositionPtr unary() {
    if (eat("!")) return Proposition::negation(unary());
    if (eat("(")) {
      PropositionPtr e = equiv();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    skip_space();
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                text_[pos_] == '.')) {
      return number();
    }
    return identifier();
  }

  PropositionPtr number() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    try {
      return Proposition::constant(std::stod(text_.substr(start, pos_ - start)));
    } catch (const std::logic_error&) {
      fail("malformed numeric constant");
    }
    return nullptr;  // unreachable
  }

  PropositionPtr identifier() {
    size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a variable, constant, '!' or '('");
    return Proposition::variable(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool ahead(const std::string& token) const {
    return text_.compare(pos_, token.size(), token) == 0;
  }

  bool eat(const std::string& token) {
    skip_space();
    if (!ahead(token)) return false;
    pos_ += token.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error("proposition parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

PropositionPtr parse_proposition(const std::string& text) {
  return ExprParser(text).parse();
}

namespace {

void render(const PropositionPtr& e, std::string& out) {
  switch (e->kind) {
    case Proposition::Kind::Variable:
      out += e->name;
      return;
    case Proposition::Kind::Constant: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.15g", e->value);
      out += buf;
      return;
    }
    case Proposition::Kind::Not:
      out += "!";
      render(e->lhs, out);
      return;
    default:
      break;
  }
  const char* op = e->kind == Proposition::Kind::And       ? " & "
                   : e->kind == Proposition::Kind::Or      ? " | "
                   : e->kind == Proposition::Kind::Implies ? " -> "
                                                           : " <-> ";
  out += "(";
  render(e->lhs, out);
  out += op;
  render(e->rhs, out);
  out += ")";
}

void collect_variables(const PropositionPtr& e, std::set<std::string>& names) {
  if (!e) return;
  if (e->kind == Proposition::Kind::Variable) names.insert(e->name);
  collect_variables(e->lhs, names);
  collect_variables(e->rhs, names);
}

}  // namespace

std::string to_string(const PropositionPtr& expr) {
  std::string out;
  render(expr, out);
  return out;
}

std::vector<std::string> variables_of(const PropositionPtr& expr) {
  std::set<std::string> names;
  collect_variables(expr, names);
  return {names.begin(), names.end()};
}

Grade apply_binary(Proposition::Kind kind, Grade a, Grade b, Implication impl) {
  switch (kind) {
    case Proposition::Kind::And:
      return std::min(a, b);
    case Proposition::Kind::Or:
      return std::max(a, b);
    case Proposition::Kind::Implies:
      if (impl == Implication::Material) return std::max(1.0 - a, b);
      return a <= b ? 1.0 : b;
    case Proposition::Kind::Equiv:
      return std::min(apply_binary(Proposition::Kind::Implies, a, b, impl),
                      apply_binary(Proposition::Kind::Implies, b, a, impl));
    default:
      throw InternalError("apply_binary on a non-binary node");
  }
}

Grade eval_proposition(const PropositionPtr& expr, const std::map<std::string, Grade>& assignment,
                       Implication impl) {
  switch (expr->kind) {
    case Proposition::Kind::Variable: {
      auto it = assignment.find(expr->name);
      if (it == assignment.end()) throw Error("unbound variable '" + expr->name + "'");
      if (!is_grade(it->second)) throw Error("assignment for '" + expr->name + "' outside [0, 1]");
      return it->second;
    }
    case Proposition::Kind::Constant:
      return expr->value;
    case Proposition::Kind::Not:
      return 1.0 - eval_proposition(expr->lhs, assignment, impl);
    default:
      return apply_binary(expr->kind, eval_proposition(expr->lhs, assignment, impl),
                          eval_proposition(expr->rhs, assignment, impl), impl);
  }
}

CayleyTable cayley_table(Proposition::Kind connective, const TruthGrid& grid, Implication impl) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd cells(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      cells(i, j) = apply_binary(connective, grid.values()[static_cast<size_t>(i)],
                                 grid.values()[static_cast<size_t>(j)], impl);
    }
  }
  return {grid, std::move(cells)};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid:
      return "valid";
    case Verdict::Satisfiable:
      return "satisfiable";
    default:
      return "unsatisfiable";
  }
}

Classification classify_proposition(const PropositionPtr& expr, const TruthGrid& grid,
                                    Implication impl, size_t max_counterexamples) {
  Classification out;
  out.variables = variables_of(expr);
  if (out.variables.size() > kMaxClassifyVariables) {
    throw Error("classification bounded to " + std::to_string(kMaxClassifyVariables) +
                " variables, got " + std::to_string(out.variables.size()));
  }
  if (grid.size() > kMaxClassifyGrid) {
    throw Error("classification bounded to grid size " + std::to_string(kMaxClassifyGrid));
  }

  bool all_true = true;
  bool some_true = false;
  std::map<std::string, Grade> assignment;
  std::vector<size_t> cursor(out.variables.size(), 0);

  while (true) {
    for (size_t v = 0; v < out.variables.size(); ++v) {
      assignment[out.variables[v]] = grid.values()[cursor[v]];
    }
    Grade value = eval_proposition(expr, assignment, impl);
    if (near(value, 1.0)) {
      some_true = true;
    } else {
      all_true = false;
      ++out.counterexample_count;
      if (out.counterexamples.size() < max_counterexamples) {
        std::vector<Grade> values;
        values.reserve(out.variables.size());
        for (size_t v = 0; v < out.variables.size(); ++v) {
          values.push_back(grid.values()[cursor[v]]);
        }
        out.counterexamples.push_back(std::move(values));
      }
    }

    // Advance, last variable fastest; zero variables means a single pass.
    bool exhausted = cursor.empty();
    size_t v = cursor.size();
    while (v > 0) {
      --v;
      if (++cursor[v] < grid.size()) break;
      cursor[v] = 0;
      if (v == 0) exhausted = true;
    }
    if (exhausted) break;
  }

  out.verdict = all_true  ? Verdict::Valid
                : some_true ? Verdict::Satisfiable
                            : Verdict::Unsatisfiable;
  return out;
}

Eigen::VectorXd compose_maxmin(const Eigen::VectorXd& vec, const Eigen::MatrixXd& relation,
                               ComposeSide side) {
  for (Eigen::Index i = 0; i < vec.size(); ++i) {
    if (!is_grade(vec(i))) throw Error("truth vector entry outside [0, 1]");
  }
  if (((relation.array() < 0.0) || (relation.array() > 1.0)).any()) {
    throw Error("relation cell outside [0, 1]");
  }
  if (side == ComposeSide::Left) {
    if (vec.size() != relation.rows()) {
      throw Error("left composition needs vector length " + std::to_string(relation.rows()) +
                  ", got " + std::to_string(vec.size()));
    }
    Eigen::VectorXd out(relation.cols());
    for (Eigen::Index j = 0; j < relation.cols(); ++j) {
      double best = 0.0;
      for (Eigen::Index i = 0; i < relation.rows(); ++i) {
        best = std::max(best, std::min(vec(i), relation(i, j)));
      }
      out(j) = best;
    }
    return out;
  }
  if (vec.size() != relation.cols()) {
    throw Error("right composition needs vector length " + std::to_string(relation.cols()) +
                ", got " + std::to_string(vec.size()));
  }
  Eigen::VectorXd out(relation.rows());
  for (Eigen::Index i = 0; i < relation.rows(); ++i) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < relation.cols(); ++j) {
      best = std::max(best, std::min(relation(i, j), vec(j)));
    }
    out(i) = best;
  }
  return out;
}

}  // namespace fsr
