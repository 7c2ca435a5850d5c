#include "fsr/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsr/decision.hpp"
#include "fsr/logic.hpp"
#include "fsr/uncertainty.hpp"
#include "fsr/workspace.hpp"

namespace fsr {

namespace {

using Json = nlohmann::ordered_json;

// Human output uses fixed 4-decimal grades; --json keeps full precision.
std::string fmt4(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void print_matrix(std::ostream& os, const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels, const Eigen::MatrixXd& cells) {
  size_t row_width = 0;
  for (const auto& label : row_labels) row_width = std::max(row_width, label.size());
  std::vector<size_t> col_widths;
  for (const auto& label : col_labels) col_widths.push_back(std::max<size_t>(label.size(), 6));

  os << pad("", row_width);
  for (size_t j = 0; j < col_labels.size(); ++j) os << "  " << pad(col_labels[j], col_widths[j]);
  os << "\n";
  for (Eigen::Index i = 0; i < cells.rows(); ++i) {
    os << pad(row_labels[static_cast<size_t>(i)], row_width);
    for (Eigen::Index j = 0; j < cells.cols(); ++j) {
      os << "  " << pad(fmt4(cells(i, j)), col_widths[static_cast<size_t>(j)]);
    }
    os << "\n";
  }
}

Json matrix_json(const Eigen::MatrixXd& cells) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < cells.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < cells.cols(); ++j) row.push_back(cells(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct DecideArgs {
  std::string file;
  std::string query_name;
  std::string combiner;
  bool json = false;
};

int run_decide(const DecideArgs& args) {
  WorkspaceDocument doc = load_workspace(args.file);
  if (doc.queries.empty()) throw Error("workspace has no queries");

  const NamedQuery* named = nullptr;
  if (!args.query_name.empty()) {
    named = doc.find_query(args.query_name);
    if (!named) throw Error("no query named '" + args.query_name + "'");
  } else if (doc.queries.size() == 1) {
    named = &doc.queries.front();
  } else {
    throw Error("workspace has " + std::to_string(doc.queries.size()) +
                " queries; pick one with --query");
  }

  DecisionQuery query = named->query;
  if (!args.combiner.empty()) query.combiner = tnorm_from_string(args.combiner);

  FuzzySet scores = score_alternatives(doc.fuzzy_soft_sets, query);
  Ranking ranking = rank(scores);
  auto [winner, winner_score] = select_best(scores);

  if (args.json) {
    Json out;
    out["query"] = named->name;
    out["combiner"] = to_string(query.combiner);
    Json score_map = Json::object();
    for (Eigen::Index i = 0; i < scores.size(); ++i) {
      score_map[scores.universe().label(i)] = scores.grade(i);
    }
    out["scores"] = std::move(score_map);
    Json rank_list = Json::array();
    for (const auto& [label, score] : ranking.entries) {
      rank_list.push_back({{"label", label}, {"score", score}});
    }
    out["ranking"] = std::move(rank_list);
    out["winner"] = {{"label", winner}, {"score", winner_score}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "query '" << named->name << "' (combiner " << to_string(query.combiner) << ")\n";
  size_t width = 0;
  for (const auto& [label, score] : ranking.entries) width = std::max(width, label.size());
  size_t place = 1;
  for (const auto& [label, score] : ranking.entries) {
    std::cout << "  " << place++ << ". " << pad(label, width) << "  " << fmt4(score) << "\n";
  }
  std::cout << "winner: " << winner << " (score " << fmt4(winner_score) << ")\n";
  return 0;
}

struct RelateArgs {
  std::string file;
  std::vector<std::string> sets;
  std::vector<std::string> params;
  bool json = false;
};

int run_relate(const RelateArgs& args) {
  if (args.sets.size() != 2 || args.params.size() != 2) {
    throw Error("relate needs --set and --param twice (left and right operand)");
  }
  WorkspaceDocument doc = load_workspace(args.file);
  const FuzzySoftSet* f = doc.find_fuzzy_soft_set(args.sets[0]);
  const FuzzySoftSet* g = doc.find_fuzzy_soft_set(args.sets[1]);
  if (!f) throw Error("no fuzzy soft set named '" + args.sets[0] + "'");
  if (!g) throw Error("no fuzzy soft set named '" + args.sets[1] + "'");

  FuzzyRelationMatrix relation = pairwise_relation(*f, args.params[0], *g, args.params[1]);

  if (args.json) {
    Json out;
    out["parameters"] = {args.params[0], args.params[1]};
    out["universe"] = relation.rows().labels();
    out["cells"] = matrix_json(relation.cells());
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "relation (" << args.params[0] << ", " << args.params[1] << ")\n";
  print_matrix(std::cout, relation.rows().labels(), relation.cols().labels(), relation.cells());
  return 0;
}

struct UncertaintyArgs {
  std::string file;
  std::string relation;
  bool json = false;
};

int run_uncertainty(const UncertaintyArgs& args) {
  WorkspaceDocument doc = load_workspace(args.file);
  const NamedRelation* named = doc.find_relation(args.relation);
  if (!named) throw Error("no relation named '" + args.relation + "'");
  const FuzzyRelationMatrix& t = named->matrix;
  if (!t.square()) throw Error("relation '" + args.relation + "' is not square");

  const Eigen::Index n = t.rows().size();
  std::vector<double> cards(static_cast<size_t>(n));
  std::vector<double> quantities(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    cards[static_cast<size_t>(i)] = expected_cardinality(t, i);
    quantities[static_cast<size_t>(i)] = uncertainty_quantity(t, i);
  }
  double g = average_uncertainty(t);

  if (args.json) {
    Json out;
    out["relation"] = args.relation;
    Json classes = Json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
      classes.push_back({{"element", t.rows().label(i)},
                         {"expected_cardinality", cards[static_cast<size_t>(i)]},
                         {"uncertainty", quantities[static_cast<size_t>(i)]}});
    }
    out["classes"] = std::move(classes);
    out["average_uncertainty"] = g;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "relation '" << args.relation << "' over " << n << " elements\n";
  size_t width = 7;  // "element"
  for (const auto& label : t.rows().labels()) width = std::max(width, label.size());
  std::cout << pad("element", width) << "  card    V\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    std::cout << pad(t.rows().label(i), width) << "  " << fmt4(cards[static_cast<size_t>(i)])
              << "  " << fmt4(quantities[static_cast<size_t>(i)]) << "\n";
  }
  std::cout << "G = " << fmt4(g) << "\n";
  return 0;
}

struct InferArgs {
  std::string file;
  std::vector<double> vec;
  std::string matrix;
  std::string side = "left";
  bool json = false;
};

int run_infer(const InferArgs& args) {
  WorkspaceDocument doc = load_workspace(args.file);
  const NamedRelation* named = doc.find_relation(args.matrix);
  if (!named) throw Error("no relation named '" + args.matrix + "'");
  if (args.side != "left" && args.side != "right") {
    throw Error("--side must be left or right");
  }
  ComposeSide side = args.side == "left" ? ComposeSide::Left : ComposeSide::Right;

  Eigen::VectorXd vec(static_cast<Eigen::Index>(args.vec.size()));
  for (size_t i = 0; i < args.vec.size(); ++i) vec(static_cast<Eigen::Index>(i)) = args.vec[i];

  Eigen::VectorXd result = compose_maxmin(vec, named->matrix.cells(), side);
  const Universe& out_universe =
      side == ComposeSide::Left ? named->matrix.cols() : named->matrix.rows();

  if (args.json) {
    Json out;
    out["side"] = args.side;
    out["labels"] = out_universe.labels();
    out["result"] = std::vector<double>(result.begin(), result.end());
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "composition (" << args.side << ") with '" << args.matrix << "'\n";
  for (Eigen::Index i = 0; i < result.size(); ++i) {
    std::cout << "  " << out_universe.label(i) << " " << fmt4(result(i)) << "\n";
  }
  return 0;
}

struct RegretArgs {
  std::string file;
  std::string table;
  bool json = false;
};

int run_regret(const RegretArgs& args) {
  WorkspaceDocument doc = load_workspace(args.file);
  const NamedPayoffTable* named = doc.find_payoff_table(args.table);
  if (!named) throw Error("no payoff table named '" + args.table + "'");
  PayoffTable regrets = regret_table(named->table);

  if (args.json) {
    Json out;
    out["table"] = args.table;
    out["states"] = regrets.states;
    out["actions"] = regrets.actions;
    out["regrets"] = matrix_json(regrets.payoffs);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "regret table '" << args.table << "'\n";
  print_matrix(std::cout, regrets.states, regrets.actions, regrets.payoffs);
  return 0;
}

struct ValidateArgs {
  std::string file;
  bool json = false;
};

int run_validate(const ValidateArgs& args) {
  WorkspaceDocument doc = load_workspace(args.file);
  std::vector<std::string> failures;
  std::vector<std::string> lines;

  for (const auto& table : doc.probability_tables) {
    DistributionCheck check = validate_probability(table.values);
    if (check.valid) {
      lines.push_back("probability '" + table.name + "': sum OK");
    } else {
      for (const auto& violation : check.violations) {
        failures.push_back("probability '" + table.name + "': " + violation);
      }
    }
  }

  for (const auto& poss : doc.possibility_tables) {
    const NamedDistribution* prob = nullptr;
    for (const auto& candidate : doc.probability_tables) {
      if (candidate.universe == poss.universe) {
        prob = &candidate;
        break;
      }
    }
    if (!prob) {
      lines.push_back("possibility '" + poss.name + "': no probability table to compare");
      continue;
    }
    std::vector<Eigen::Index> violations = possibility_dominance(prob->values, poss.values);
    if (violations.empty()) {
      lines.push_back("possibility '" + poss.name + "' vs '" + prob->name + "': dominance OK");
    } else {
      const Universe* u = doc.find_universe(poss.universe);
      for (Eigen::Index i : violations) {
        failures.push_back("possibility '" + poss.name + "': element '" +
                           (u ? u->label(i) : std::to_string(i)) + "' below probability");
      }
    }
  }

  // Round-trip integrity: a serialize/parse cycle must be a fixpoint.
  std::string first = serialize_workspace(doc);
  std::string second = serialize_workspace(parse_workspace(first));
  if (first != second) {
    throw InternalError("serialize/parse round-trip is not a fixpoint for '" + args.file + "'");
  }
  lines.push_back("round-trip: OK");

  if (args.json) {
    Json out;
    out["file"] = args.file;
    out["passed"] = Json::array();
    for (const auto& line : lines) out["passed"].push_back(line);
    out["violations"] = Json::array();
    for (const auto& failure : failures) out["violations"].push_back(failure);
    out["valid"] = failures.empty();
    std::cout << out.dump(2) << "\n";
    return failures.empty() ? 0 : 1;
  }

  for (const auto& line : lines) std::cout << line << "\n";
  for (const auto& failure : failures) std::cout << "VIOLATION: " << failure << "\n";
  std::cout << (failures.empty() ? "all checks passed" : "validation failed") << "\n";
  return failures.empty() ? 0 : 1;
}

struct LogicTableArgs {
  std::string connective;
  std::vector<double> grid{0.0, 1.0};
  std::string impl = "goedel";
  bool json = false;
};

Proposition::Kind connective_from_string(const std::string& s) {
  if (s == "and") return Proposition::Kind::And;
  if (s == "or") return Proposition::Kind::Or;
  if (s == "implies") return Proposition::Kind::Implies;
  if (s == "equiv") return Proposition::Kind::Equiv;
  throw Error("unknown connective '" + s + "' (expected and, or, implies, equiv)");
}

int run_logic_table(const LogicTableArgs& args) {
  CayleyTable table = cayley_table(connective_from_string(args.connective), TruthGrid(args.grid),
                                   implication_from_string(args.impl));

  if (args.json) {
    Json out;
    out["connective"] = args.connective;
    out["implication"] = args.impl;
    out["grid"] = table.grid.values();
    out["cells"] = matrix_json(table.cells);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::vector<std::string> labels;
  for (double v : table.grid.values()) labels.push_back(fmt4(v));
  std::cout << "cayley table for '" << args.connective << "' (implication " << args.impl
            << "), p down, q across\n";
  print_matrix(std::cout, labels, labels, table.cells);
  return 0;
}

struct LogicClassifyArgs {
  std::string expr;
  std::vector<double> grid{0.0, 1.0};
  std::string impl = "goedel";
  bool json = false;
};

constexpr size_t kCliCounterexampleCap = 32;

int run_logic_classify(const LogicClassifyArgs& args) {
  PropositionPtr expr = parse_proposition(args.expr);
  TruthGrid grid(args.grid);
  Implication impl = implication_from_string(args.impl);
  Classification result = classify_proposition(expr, grid, impl, kCliCounterexampleCap);

  if (args.json) {
    Json out;
    out["expression"] = to_string(expr);
    out["implication"] = args.impl;
    out["grid"] = grid.values();
    out["verdict"] = to_string(result.verdict);
    out["variables"] = result.variables;
    out["counterexample_count"] = result.counterexample_count;
    Json list = Json::array();
    for (const auto& values : result.counterexamples) {
      std::map<std::string, Grade> assignment;
      for (size_t v = 0; v < result.variables.size(); ++v) {
        assignment[result.variables[v]] = values[v];
      }
      Json item;
      item["assignment"] = assignment;
      item["value"] = eval_proposition(expr, assignment, impl);
      list.push_back(std::move(item));
    }
    out["counterexamples"] = std::move(list);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "expression: " << to_string(expr) << "\n";
  std::cout << "verdict: " << to_string(result.verdict) << "\n";
  if (!result.counterexamples.empty()) {
    std::cout << "counterexamples (" << result.counterexamples.size() << " of "
              << result.counterexample_count << "):\n";
    for (const auto& values : result.counterexamples) {
      std::map<std::string, Grade> assignment;
      std::cout << " ";
      for (size_t v = 0; v < result.variables.size(); ++v) {
        assignment[result.variables[v]] = values[v];
        std::cout << " " << result.variables[v] << "=" << fmt4(values[v]);
      }
      std::cout << "  value " << fmt4(eval_proposition(expr, assignment, impl)) << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"fuzzy soft relation toolkit"};
  app.require_subcommand(1);

  DecideArgs decide_args;
  auto* decide = app.add_subcommand("decide", "score and rank a workspace query");
  decide->add_option("file", decide_args.file, "workspace file (.fsr)")->required();
  decide->add_option("--query", decide_args.query_name, "query name (default: the only query)");
  decide->add_option("--combiner", decide_args.combiner, "override combiner: min or product");
  decide->add_flag("--json", decide_args.json, "machine-readable output");

  RelateArgs relate_args;
  auto* relate = app.add_subcommand("relate", "product relation of two set parameters");
  relate->add_option("file", relate_args.file, "workspace file (.fsr)")->required();
  relate->add_option("--set", relate_args.sets, "fuzzy soft set name (give twice)");
  relate->add_option("--param", relate_args.params, "parameter name (give twice)");
  relate->add_flag("--json", relate_args.json, "machine-readable output");

  UncertaintyArgs uncertainty_args;
  auto* uncertainty = app.add_subcommand("uncertainty", "per-class cardinality and uncertainty");
  uncertainty->add_option("file", uncertainty_args.file, "workspace file (.fsr)")->required();
  uncertainty->add_option("--relation", uncertainty_args.relation, "relation name")->required();
  uncertainty->add_flag("--json", uncertainty_args.json, "machine-readable output");

  InferArgs infer_args;
  auto* infer = app.add_subcommand("infer", "max-min composition of a vector with a relation");
  infer->add_option("file", infer_args.file, "workspace file (.fsr)")->required();
  infer->add_option("--vector", infer_args.vec, "truth vector, comma separated")
      ->required()
      ->delimiter(',');
  infer->add_option("--matrix", infer_args.matrix, "relation name")->required();
  infer->add_option("--side", infer_args.side, "left (q = p o R) or right (p = R o q)");
  infer->add_flag("--json", infer_args.json, "machine-readable output");

  RegretArgs regret_args;
  auto* regret = app.add_subcommand("regret", "opportunity-loss table for a payoff table");
  regret->add_option("file", regret_args.file, "workspace file (.fsr)")->required();
  regret->add_option("--table", regret_args.table, "payoff table name")->required();
  regret->add_flag("--json", regret_args.json, "machine-readable output");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "distribution and integrity diagnostics");
  validate->add_option("file", validate_args.file, "workspace file (.fsr)")->required();
  validate->add_flag("--json", validate_args.json, "machine-readable output");

  auto* logic = app.add_subcommand("logic", "truth tables and classification");
  logic->require_subcommand(1);

  LogicTableArgs table_args;
  auto* table = logic->add_subcommand("table", "cayley table of a binary connective");
  table->add_option("--connective", table_args.connective, "and, or, implies, equiv")->required();
  table->add_option("--grid", table_args.grid, "truth grid, comma separated")->delimiter(',');
  table->add_option("--impl", table_args.impl, "material or goedel");
  table->add_flag("--json", table_args.json, "machine-readable output");

  LogicClassifyArgs classify_args;
  auto* classify = logic->add_subcommand("classify", "tautology/satisfiability check");
  classify->add_option("--expr", classify_args.expr, "proposition, e.g. '(p & (p -> q)) -> q'")
      ->required();
  classify->add_option("--grid", classify_args.grid, "truth grid, comma separated")
      ->delimiter(',');
  classify->add_option("--impl", classify_args.impl, "material or goedel");
  classify->add_flag("--json", classify_args.json, "machine-readable output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*decide) return run_decide(decide_args);
    if (*relate) return run_relate(relate_args);
    if (*uncertainty) return run_uncertainty(uncertainty_args);
    if (*infer) return run_infer(infer_args);
    if (*regret) return run_regret(regret_args);
    if (*validate) return run_validate(validate_args);
    if (*logic) {
      if (*table) return run_logic_table(table_args);
      if (*classify) return run_logic_classify(classify_args);
    }
    throw InternalError("no subcommand dispatched");
  } catch (const ParseError& e) {
    std::cerr << "error: workspace has " << e.issues().size() << " issue(s)\n";
    for (const auto& issue : e.issues()) {
      std::cerr << "  " << issue.path << ": " << issue.reason << "\n";
    }
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fsr
