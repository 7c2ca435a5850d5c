#pragma once

#include <string>
#include <vector>

#include "fsr/decision.hpp"
#include "fsr/fuzzy_relation.hpp"
#include "fsr/fuzzy_soft_set.hpp"
#include "fsr/soft_set.hpp"

namespace fsr {

struct NamedRelation {
  std::string name;
  FuzzyRelationMatrix matrix;
};

struct NamedQuery {
  std::string name;
  DecisionQuery query;
};

struct NamedPayoffTable {
  std::string name;
  PayoffTable table;
};

/// Probability or possibility values aligned to a universe.
struct NamedDistribution {
  std::string name;
  std::string universe;
  Eigen::VectorXd values;
};

struct NamedEvOptions {
  std::string name;
  std::vector<EvOption> options;
};

/// Annotation for a source-data cell whose reported value disagrees with
/// the recomputed one.
struct Erratum {
  std::string context;
  std::string element;
  double reported = 0.0;
  double recomputed = 0.0;
};

/// One parsed .fsr workspace: universes plus everything defined over them.
/// All cross-references resolve and all grades are in range by the time a
/// document exists.
struct WorkspaceDocument {
  int schema_version = 1;
  std::string description;
  std::vector<Universe> universes;
  std::vector<FuzzySoftSet> fuzzy_soft_sets;
  std::vector<SoftSet> soft_sets;
  std::vector<NamedRelation> relations;
  std::vector<NamedQuery> queries;
  std::vector<NamedPayoffTable> payoff_tables;
  std::vector<NamedDistribution> probability_tables;
  std::vector<NamedDistribution> possibility_tables;
  std::vector<NamedEvOptions> expected_value_options;
  std::vector<Erratum> errata;

  const Universe* find_universe(const std::string& name) const;
  const FuzzySoftSet* find_fuzzy_soft_set(const std::string& name) const;
  const SoftSet* find_soft_set(const std::string& name) const;
  const NamedRelation* find_relation(const std::string& name) const;
  const NamedQuery* find_query(const std::string& name) const;
  const NamedPayoffTable* find_payoff_table(const std::string& name) const;
};

/// Strict parse: unknown keys, range violations, duplicate names and
/// dangling references are all collected and thrown as one ParseError.
WorkspaceDocument parse_workspace(const std::string& text);

WorkspaceDocument load_workspace(const std::string& path);

/// Deterministic JSON rendering; serialize(parse(text)) reparses to an
/// identical document and re-serializes byte-identically.
std::string serialize_workspace(const WorkspaceDocument& doc);

}  // namespace fsr
