#include "fsr/workspace.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fsr {

// Insertion-ordered JSON keeps parameter order and makes serialization
// byte-deterministic.
using Json = nlohmann::ordered_json;

namespace {

class DocumentReader {
 public:
  WorkspaceDocument read(const std::string& text) {
    Json root;
    try {
      root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      issues_.push_back({"$", e.what()});
      throw ParseError(std::move(issues_));
    }

    parse_root(root);
    if (!issues_.empty()) throw ParseError(std::move(issues_));
    return std::move(doc_);
  }

 private:
  void parse_root(const Json& root) {
    if (!expect_object(root, "$")) return;
    check_keys(root, "$",
               {"schema_version", "description", "universes", "fuzzy_soft_sets", "soft_sets",
                "relations", "queries", "payoff_tables", "probability_tables",
                "possibility_tables", "expected_value_options", "errata"});

    if (!root.contains("schema_version") || !root["schema_version"].is_number_integer()) {
      issues_.push_back({"$.schema_version", "required integer field"});
    } else if (root["schema_version"].get<int>() != 1) {
      issues_.push_back({"$.schema_version",
                         "unsupported version " + root["schema_version"].dump()});
    } else {
      doc_.schema_version = 1;
    }
    if (root.contains("description")) {
      doc_.description = get_string(root["description"], "$.description");
    }

    parse_universes(root);
    parse_fuzzy_soft_sets(root);
    parse_soft_sets(root);
    parse_relations(root);
    parse_queries(root);
    parse_payoff_tables(root);
    parse_distributions(root, "probability_tables", doc_.probability_tables, false);
    parse_distributions(root, "possibility_tables", doc_.possibility_tables, true);
    parse_ev_options(root);
    parse_errata(root);
  }

  void parse_universes(const Json& root) {
    if (!root.contains("universes")) {
      issues_.push_back({"$.universes", "required array field"});
      return;
    }
    each_element(root["universes"], "$.universes", [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "labels"});
      std::string name = require_string(item, "name", path);
      std::vector<std::string> labels;
      if (item.contains("labels") && item["labels"].is_array()) {
        for (size_t i = 0; i < item["labels"].size(); ++i) {
          labels.push_back(get_string(item["labels"][i], path + ".labels[" + std::to_string(i) + "]"));
        }
      } else {
        issues_.push_back({path + ".labels", "required array of strings"});
      }
      if (name.empty()) return;
      if (doc_.find_universe(name)) {
        issues_.push_back({path + ".name", "duplicate universe name '" + name + "'"});
        return;
      }
      try {
        doc_.universes.emplace_back(std::move(labels), name);
      } catch (const Error& e) {
        issues_.push_back({path, e.what()});
      }
    });
  }

  const Universe* resolve_universe(const Json& item, const std::string& path) {
    std::string uname = require_string(item, "universe", path);
    if (uname.empty()) return nullptr;
    const Universe* u = doc_.find_universe(uname);
    if (!u) issues_.push_back({path + ".universe", "unknown universe '" + uname + "'"});
    return u;
  }

  void parse_fuzzy_soft_sets(const Json& root) {
    if (!root.contains("fuzzy_soft_sets")) return;
    each_element(root["fuzzy_soft_sets"], "$.fuzzy_soft_sets",
                 [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "universe", "sets"});
      std::string name = require_string(item, "name", path);
      const Universe* u = resolve_universe(item, path);
      if (!item.contains("sets") || !item["sets"].is_object()) {
        issues_.push_back({path + ".sets", "required object mapping parameter -> grades"});
        return;
      }
      if (!u || name.empty()) return;

      std::vector<std::string> parameters;
      std::vector<Eigen::VectorXd> grades;
      for (const auto& [parameter, value] : item["sets"].items()) {
        const std::string ppath = path + ".sets." + parameter;
        if (!value.is_array() || value.size() != static_cast<size_t>(u->size())) {
          issues_.push_back({ppath, "expected " + std::to_string(u->size()) + " grades"});
          continue;
        }
        Eigen::VectorXd vec(u->size());
        bool ok = true;
        for (size_t i = 0; i < value.size(); ++i) {
          const std::string gpath = ppath + "[" + std::to_string(i) + "]";
          if (!value[i].is_number()) {
            issues_.push_back({gpath, "grade must be a number"});
            ok = false;
            continue;
          }
          double g = value[i].get<double>();
          if (!is_grade(g)) {
            issues_.push_back({gpath, "grade " + value[i].dump() + " for element '" +
                                          u->label(static_cast<Eigen::Index>(i)) +
                                          "' outside [0, 1]"});
            ok = false;
            continue;
          }
          vec(static_cast<Eigen::Index>(i)) = g;
        }
        if (!ok) continue;
        parameters.push_back(parameter);
        grades.push_back(std::move(vec));
      }
      if (doc_.find_fuzzy_soft_set(name)) {
        issues_.push_back({path + ".name", "duplicate fuzzy soft set name '" + name + "'"});
        return;
      }
      try {
        doc_.fuzzy_soft_sets.emplace_back(*u, std::move(parameters), std::move(grades), name);
      } catch (const Error& e) {
        issues_.push_back({path, e.what()});
      }
    });
  }

  void parse_soft_sets(const Json& root) {
    if (!root.contains("soft_sets")) return;
    each_element(root["soft_sets"], "$.soft_sets", [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "universe", "approximations"});
      std::string name = require_string(item, "name", path);
      const Universe* u = resolve_universe(item, path);
      if (!item.contains("approximations") || !item["approximations"].is_object()) {
        issues_.push_back({path + ".approximations", "required object mapping parameter -> labels"});
        return;
      }
      if (!u || name.empty()) return;

      std::vector<std::string> parameters;
      std::vector<IndexSet> approximations;
      for (const auto& [parameter, value] : item["approximations"].items()) {
        const std::string ppath = path + ".approximations." + parameter;
        if (!value.is_array()) {
          issues_.push_back({ppath, "expected an array of element labels"});
          continue;
        }
        IndexSet subset;
        bool ok = true;
        for (size_t i = 0; i < value.size(); ++i) {
          std::string label = get_string(value[i], ppath + "[" + std::to_string(i) + "]");
          Eigen::Index idx = u->index_of(label);
          if (idx < 0) {
            issues_.push_back({ppath + "[" + std::to_string(i) + "]",
                               "label '" + label + "' not in universe '" + u->name() + "'"});
            ok = false;
            continue;
          }
          subset.push_back(idx);
        }
        if (!ok) continue;
        parameters.push_back(parameter);
        approximations.push_back(std::move(subset));
      }
      if (doc_.find_soft_set(name)) {
        issues_.push_back({path + ".name", "duplicate soft set name '" + name + "'"});
        return;
      }
      try {
        doc_.soft_sets.emplace_back(*u, std::move(parameters), std::move(approximations), name);
      } catch (const Error& e) {
        issues_.push_back({path, e.what()});
      }
    });
  }

  void parse_relations(const Json& root) {
    if (!root.contains("relations")) return;
    each_element(root["relations"], "$.relations", [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "row_universe", "col_universe", "cells"});
      std::string name = require_string(item, "name", path);
      std::string rname = require_string(item, "row_universe", path);
      std::string cname = require_string(item, "col_universe", path);
      const Universe* ru = rname.empty() ? nullptr : doc_.find_universe(rname);
      const Universe* cu = cname.empty() ? nullptr : doc_.find_universe(cname);
      if (!rname.empty() && !ru) {
        issues_.push_back({path + ".row_universe", "unknown universe '" + rname + "'"});
      }
      if (!cname.empty() && !cu) {
        issues_.push_back({path + ".col_universe", "unknown universe '" + cname + "'"});
      }
      if (!item.contains("cells") || !item["cells"].is_array()) {
        issues_.push_back({path + ".cells", "required array of rows"});
        return;
      }
      if (!ru || !cu || name.empty()) return;

      Eigen::MatrixXd cells(ru->size(), cu->size());
      const Json& rows = item["cells"];
      if (rows.size() != static_cast<size_t>(ru->size())) {
        issues_.push_back({path + ".cells", "expected " + std::to_string(ru->size()) + " rows"});
        return;
      }
      for (size_t i = 0; i < rows.size(); ++i) {
        const std::string rpath = path + ".cells[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != static_cast<size_t>(cu->size())) {
          issues_.push_back({rpath, "expected " + std::to_string(cu->size()) + " cells"});
          return;
        }
        for (size_t j = 0; j < rows[i].size(); ++j) {
          if (!rows[i][j].is_number()) {
            issues_.push_back({rpath + "[" + std::to_string(j) + "]", "cell must be a number"});
            return;
          }
          cells(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              rows[i][j].get<double>();
        }
      }
      for (const auto& existing : doc_.relations) {
        if (existing.name == name) {
          issues_.push_back({path + ".name", "duplicate relation name '" + name + "'"});
          return;
        }
      }
      try {
        doc_.relations.push_back({name, FuzzyRelationMatrix(*ru, *cu, std::move(cells))});
      } catch (const Error& e) {
        issues_.push_back({path, e.what()});
      }
    });
  }

  void parse_queries(const Json& root) {
    if (!root.contains("queries")) return;
    each_element(root["queries"], "$.queries", [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "criteria", "combiner"});
      std::string name = require_string(item, "name", path);
      NamedQuery query;
      query.name = name;

      std::string combiner = require_string(item, "combiner", path);
      if (!combiner.empty()) {
        try {
          query.query.combiner = tnorm_from_string(combiner);
        } catch (const Error& e) {
          issues_.push_back({path + ".combiner", e.what()});
        }
      }
      if (!item.contains("criteria") || !item["criteria"].is_array()) {
        issues_.push_back({path + ".criteria", "required array of {set, param}"});
        return;
      }
      size_t ci = 0;
      for (const Json& c : item["criteria"]) {
        const std::string cpath = path + ".criteria[" + std::to_string(ci++) + "]";
        if (!expect_object(c, cpath)) continue;
        check_keys(c, cpath, {"set", "param"});
        Criterion criterion{require_string(c, "set", cpath), require_string(c, "param", cpath)};
        const FuzzySoftSet* set = doc_.find_fuzzy_soft_set(criterion.set_name);
        if (!set) {
          issues_.push_back({cpath + ".set",
                             "unknown fuzzy soft set '" + criterion.set_name + "'"});
        } else if (!set->has_parameter(criterion.parameter)) {
          issues_.push_back({cpath + ".param", "set '" + criterion.set_name +
                                                   "' has no parameter '" + criterion.parameter +
                                                   "'"});
        }
        query.query.criteria.push_back(std::move(criterion));
      }
      if (query.query.criteria.empty()) {
        issues_.push_back({path + ".criteria", "query needs at least one criterion"});
      }
      if (doc_.find_query(name)) {
        issues_.push_back({path + ".name", "duplicate query name '" + name + "'"});
        return;
      }
      if (!name.empty()) doc_.queries.push_back(std::move(query));
    });
  }

  void parse_payoff_tables(const Json& root) {
    if (!root.contains("payoff_tables")) return;
    each_element(root["payoff_tables"], "$.payoff_tables",
                 [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "states", "actions", "payoffs"});
      std::string name = require_string(item, "name", path);
      NamedPayoffTable table;
      table.name = name;
      for (const char* key : {"states", "actions"}) {
        if (!item.contains(key) || !item[key].is_array()) {
          issues_.push_back({path + "." + key, "required array of labels"});
          return;
        }
        auto& target = std::string(key) == "states" ? table.table.states : table.table.actions;
        for (size_t i = 0; i < item[key].size(); ++i) {
          target.push_back(get_string(item[key][i],
                                      path + "." + key + "[" + std::to_string(i) + "]"));
        }
      }
      if (!item.contains("payoffs") || !item["payoffs"].is_array() ||
          item["payoffs"].size() != table.table.states.size()) {
        issues_.push_back({path + ".payoffs",
                           "expected " + std::to_string(table.table.states.size()) + " rows"});
        return;
      }
      table.table.payoffs.resize(static_cast<Eigen::Index>(table.table.states.size()),
                                 static_cast<Eigen::Index>(table.table.actions.size()));
      for (size_t i = 0; i < item["payoffs"].size(); ++i) {
        const Json& row = item["payoffs"][i];
        const std::string rpath = path + ".payoffs[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != table.table.actions.size()) {
          issues_.push_back({rpath,
                             "expected " + std::to_string(table.table.actions.size()) + " cells"});
          return;
        }
        for (size_t j = 0; j < row.size(); ++j) {
          if (!row[j].is_number()) {
            issues_.push_back({rpath + "[" + std::to_string(j) + "]", "payoff must be a number"});
            return;
          }
          table.table.payoffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              row[j].get<double>();
        }
      }
      if (doc_.find_payoff_table(name)) {
        issues_.push_back({path + ".name", "duplicate payoff table name '" + name + "'"});
        return;
      }
      if (!name.empty()) doc_.payoff_tables.push_back(std::move(table));
    });
  }

  void parse_distributions(const Json& root, const char* key,
                           std::vector<NamedDistribution>& target, bool grades_required) {
    if (!root.contains(key)) return;
    each_element(root[key], std::string("$.") + key,
                 [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "universe", "values"});
      NamedDistribution dist;
      dist.name = require_string(item, "name", path);
      const Universe* u = resolve_universe(item, path);
      if (!item.contains("values") || !item["values"].is_array()) {
        issues_.push_back({path + ".values", "required array of numbers"});
        return;
      }
      if (!u || dist.name.empty()) return;
      dist.universe = u->name();
      if (item["values"].size() != static_cast<size_t>(u->size())) {
        issues_.push_back({path + ".values",
                           "expected " + std::to_string(u->size()) + " values"});
        return;
      }
      dist.values.resize(u->size());
      for (size_t i = 0; i < item["values"].size(); ++i) {
        const std::string vpath = path + ".values[" + std::to_string(i) + "]";
        if (!item["values"][i].is_number()) {
          issues_.push_back({vpath, "value must be a number"});
          return;
        }
        double v = item["values"][i].get<double>();
        if (v < 0.0) issues_.push_back({vpath, "value must be nonnegative"});
        if (grades_required && v > 1.0) {
          issues_.push_back({vpath, "possibility " + item["values"][i].dump() + " outside [0, 1]"});
        }
        dist.values(static_cast<Eigen::Index>(i)) = v;
      }
      for (const auto& existing : target) {
        if (existing.name == dist.name) {
          issues_.push_back({path + ".name", "duplicate table name '" + dist.name + "'"});
          return;
        }
      }
      target.push_back(std::move(dist));
    });
  }

  void parse_ev_options(const Json& root) {
    if (!root.contains("expected_value_options")) return;
    each_element(root["expected_value_options"], "$.expected_value_options",
                 [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"name", "options"});
      NamedEvOptions block;
      block.name = require_string(item, "name", path);
      if (!item.contains("options") || !item["options"].is_array()) {
        issues_.push_back({path + ".options", "required array of {probability, value}"});
        return;
      }
      size_t oi = 0;
      for (const Json& option : item["options"]) {
        const std::string opath = path + ".options[" + std::to_string(oi++) + "]";
        if (!expect_object(option, opath)) continue;
        check_keys(option, opath, {"probability", "value"});
        EvOption ev;
        if (!option.contains("probability") || !option["probability"].is_number()) {
          issues_.push_back({opath + ".probability", "required number"});
          continue;
        }
        if (!option.contains("value") || !option["value"].is_number()) {
          issues_.push_back({opath + ".value", "required number"});
          continue;
        }
        ev.probability = option["probability"].get<double>();
        ev.value = option["value"].get<double>();
        if (!is_grade(ev.probability)) {
          issues_.push_back({opath + ".probability",
                             "probability " + option["probability"].dump() + " outside [0, 1]"});
          continue;
        }
        block.options.push_back(ev);
      }
      if (!block.name.empty()) doc_.expected_value_options.push_back(std::move(block));
    });
  }

  void parse_errata(const Json& root) {
    if (!root.contains("errata")) return;
    each_element(root["errata"], "$.errata", [&](const Json& item, const std::string& path) {
      if (!expect_object(item, path)) return;
      check_keys(item, path, {"context", "element", "reported", "recomputed"});
      Erratum e;
      e.context = require_string(item, "context", path);
      e.element = require_string(item, "element", path);
      for (const char* key : {"reported", "recomputed"}) {
        if (!item.contains(key) || !item[key].is_number()) {
          issues_.push_back({path + "." + key, "required number"});
          return;
        }
      }
      e.reported = item["reported"].get<double>();
      e.recomputed = item["recomputed"].get<double>();
      doc_.errata.push_back(std::move(e));
    });
  }

  // --- helpers ---------------------------------------------------------

  bool expect_object(const Json& node, const std::string& path) {
    if (node.is_object()) return true;
    issues_.push_back({path, "expected an object"});
    return false;
  }

  void each_element(const Json& node, const std::string& path,
                    const std::function<void(const Json&, const std::string&)>& fn) {
    if (!node.is_array()) {
      issues_.push_back({path, "expected an array"});
      return;
    }
    for (size_t i = 0; i < node.size(); ++i) {
      fn(node[i], path + "[" + std::to_string(i) + "]");
    }
  }

  void check_keys(const Json& node, const std::string& path, std::set<std::string> allowed) {
    for (const auto& [key, value] : node.items()) {
      if (!allowed.count(key)) {
        issues_.push_back({path + "." + key, "unknown key"});
      }
    }
  }

  std::string get_string(const Json& node, const std::string& path) {
    if (node.is_string()) return node.get<std::string>();
    issues_.push_back({path, "expected a string"});
    return "";
  }

  std::string require_string(const Json& node, const char* key, const std::string& path) {
    if (!node.contains(key)) {
      issues_.push_back({path + "." + key, "required string field"});
      return "";
    }
    return get_string(node[key], path + "." + key);
  }

  WorkspaceDocument doc_;
  std::vector<Issue> issues_;
};

}  // namespace

const Universe* WorkspaceDocument::find_universe(const std::string& name) const {
  for (const auto& u : universes) {
    if (u.name() == name) return &u;
  }
  return nullptr;
}

const FuzzySoftSet* WorkspaceDocument::find_fuzzy_soft_set(const std::string& name) const {
  for (const auto& s : fuzzy_soft_sets) {
    if (s.name() == name) return &s;
  }
  return nullptr;
}

const SoftSet* WorkspaceDocument::find_soft_set(const std::string& name) const {
  for (const auto& s : soft_sets) {
    if (s.name() == name) return &s;
  }
  return nullptr;
}

const NamedRelation* WorkspaceDocument::find_relation(const std::string& name) const {
  for (const auto& r : relations) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const NamedQuery* WorkspaceDocument::find_query(const std::string& name) const {
  for (const auto& q : queries) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

const NamedPayoffTable* WorkspaceDocument::find_payoff_table(const std::string& name) const {
  for (const auto& t : payoff_tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

WorkspaceDocument parse_workspace(const std::string& text) {
  return DocumentReader().read(text);
}

WorkspaceDocument load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open workspace file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

std::string serialize_workspace(const WorkspaceDocument& doc) {
  Json root;
  root["schema_version"] = doc.schema_version;
  if (!doc.description.empty()) root["description"] = doc.description;

  root["universes"] = Json::array();
  for (const auto& u : doc.universes) {
    root["universes"].push_back({{"name", u.name()}, {"labels", u.labels()}});
  }

  if (!doc.fuzzy_soft_sets.empty()) {
    root["fuzzy_soft_sets"] = Json::array();
    for (const auto& s : doc.fuzzy_soft_sets) {
      Json sets = Json::object();
      for (size_t p = 0; p < s.parameters().size(); ++p) {
        Eigen::VectorXd g = s.member(p).grades();
        sets[s.parameters()[p]] = std::vector<double>(g.begin(), g.end());
      }
      root["fuzzy_soft_sets"].push_back(
          {{"name", s.name()}, {"universe", s.universe().name()}, {"sets", std::move(sets)}});
    }
  }

  if (!doc.soft_sets.empty()) {
    root["soft_sets"] = Json::array();
    for (const auto& s : doc.soft_sets) {
      Json approx = Json::object();
      for (size_t p = 0; p < s.parameters().size(); ++p) {
        approx[s.parameters()[p]] = labels_of(s.universe(), s.approximation(p));
      }
      root["soft_sets"].push_back({{"name", s.name()},
                                   {"universe", s.universe().name()},
                                   {"approximations", std::move(approx)}});
    }
  }

  if (!doc.relations.empty()) {
    root["relations"] = Json::array();
    for (const auto& r : doc.relations) {
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < r.matrix.cells().rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < r.matrix.cells().cols(); ++j) {
          row.push_back(r.matrix.at(i, j));
        }
        rows.push_back(std::move(row));
      }
      root["relations"].push_back({{"name", r.name},
                                   {"row_universe", r.matrix.rows().name()},
                                   {"col_universe", r.matrix.cols().name()},
                                   {"cells", std::move(rows)}});
    }
  }

  if (!doc.queries.empty()) {
    root["queries"] = Json::array();
    for (const auto& q : doc.queries) {
      Json criteria = Json::array();
      for (const auto& c : q.query.criteria) {
        criteria.push_back({{"set", c.set_name}, {"param", c.parameter}});
      }
      root["queries"].push_back({{"name", q.name},
                                 {"criteria", std::move(criteria)},
                                 {"combiner", to_string(q.query.combiner)}});
    }
  }

  if (!doc.payoff_tables.empty()) {
    root["payoff_tables"] = Json::array();
    for (const auto& t : doc.payoff_tables) {
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < t.table.payoffs.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < t.table.payoffs.cols(); ++j) {
          row.push_back(t.table.payoffs(i, j));
        }
        rows.push_back(std::move(row));
      }
      root["payoff_tables"].push_back({{"name", t.name},
                                       {"states", t.table.states},
                                       {"actions", t.table.actions},
                                       {"payoffs", std::move(rows)}});
    }
  }

  auto dump_distributions = [&](const char* key, const std::vector<NamedDistribution>& tables) {
    if (tables.empty()) return;
    root[key] = Json::array();
    for (const auto& d : tables) {
      root[key].push_back({{"name", d.name},
                           {"universe", d.universe},
                           {"values", std::vector<double>(d.values.begin(), d.values.end())}});
    }
  };
  dump_distributions("probability_tables", doc.probability_tables);
  dump_distributions("possibility_tables", doc.possibility_tables);

  if (!doc.expected_value_options.empty()) {
    root["expected_value_options"] = Json::array();
    for (const auto& block : doc.expected_value_options) {
      Json options = Json::array();
      for (const auto& option : block.options) {
        options.push_back({{"probability", option.probability}, {"value", option.value}});
      }
      root["expected_value_options"].push_back(
          {{"name", block.name}, {"options", std::move(options)}});
    }
  }

  if (!doc.errata.empty()) {
    root["errata"] = Json::array();
    for (const auto& e : doc.errata) {
      root["errata"].push_back({{"context", e.context},
                                {"element", e.element},
                                {"reported", e.reported},
                                {"recomputed", e.recomputed}});
    }
  }

  return root.dump(2) + "\n";
}

}  // namespace fsr
