#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mixdag/mother_graph.hpp"

namespace mixdag {

// One conditional table as passed to build_model: rows indexed by parent
// configuration (row-major over the parents in ascending variable order,
// first parent slowest), each row a distribution over the variable's states.
using CptTable = std::vector<std::vector<double>>;

// Compiled conditional probability table.
struct Cpt {
  VarId variable = -1;
  std::vector<VarId> parents;      // ascending, never contains T
  std::vector<int> parent_cards;
  int card = 0;
  std::vector<double> values;      // [row * card + state]

  int rows() const {
    return card == 0 ? 0 : static_cast<int>(values.size()) / card;
  }
  double value(int row, int state) const {
    return values[static_cast<size_t>(row) * card + state];
  }
  // parent-configuration row for a full assignment over all X variables
  int row_for(std::span<const int> x_config) const;
};

// Discrete parameterization of a mixture of DAGs: per-variable cardinalities,
// m >= q time points with a surjective map kappa onto sub-DAGs, a mixing
// distribution over time points, one table per stationary variable and one
// table per (non-stationary variable, time point).
class MixtureModel {
 public:
  MixtureModel(MotherGraph mg, std::vector<int> cards, std::vector<int> kappa,
               std::vector<double> mixing,
               std::vector<std::vector<Cpt>> cpts);

  const MotherGraph& graph() const { return mg_; }
  int var_count() const { return mg_.var_count(); }
  const std::vector<int>& cardinalities() const { return cards_; }
  int cardinality(VarId x) const { return cards_.at(static_cast<size_t>(x)); }
  int time_point_count() const { return static_cast<int>(kappa_.size()); }
  const std::vector<int>& kappa() const { return kappa_; }
  int subdag_of_time(int t) const { return kappa_.at(static_cast<size_t>(t)); }
  const std::vector<double>& mixing() const { return mixing_; }
  const Cpt& cpt(VarId x, int t) const;

 private:
  MotherGraph mg_;
  std::vector<int> cards_;
  std::vector<int> kappa_;
  std::vector<double> mixing_;
  std::vector<std::vector<Cpt>> cpts_;  // [var][0] shared, or [var][t]
};

// Validates shapes against the mother graph and normalization of mixing and
// every CPT row. kappa uses 0-based sub-DAG indices.
MixtureModel build_model(const MotherGraph& mg, std::vector<int> cards,
                         std::vector<int> kappa, std::vector<double> mixing,
                         const std::vector<std::vector<CptTable>>& cpts);

// Deterministic in seed: m = q, kappa = identity, uniform cardinality,
// every CPT row and the mixing vector drawn flat on the simplex.
MixtureModel random_model(const MotherGraph& mg, int cardinality,
                          uint64_t seed);

// Single-component model: the conditional density at time point t as a
// mixture with one sub-DAG and unit mixing weight.
MixtureModel component_model(const MixtureModel& model, int t);

// Dense probability table over a subset of the X variables.
class JointTable {
 public:
  JointTable(std::vector<VarId> vars, std::vector<int> cards,
             std::vector<double> probs);

  const std::vector<VarId>& vars() const { return vars_; }
  const std::vector<int>& cards() const { return cards_; }
  const std::vector<double>& probs() const { return probs_; }
  size_t size() const { return probs_.size(); }

  double total_mass() const;
  double at(std::span<const int> config) const;
  JointTable marginal(const VarSet& keep) const;

 private:
  std::vector<VarId> vars_;   // ascending
  std::vector<int> cards_;
  std::vector<double> probs_;  // row-major, first variable slowest
};

// Exact joint over all X variables by full enumeration of configurations
// and time points; refuses tables larger than cell_budget.
JointTable joint_table(const MixtureModel& model,
                       size_t cell_budget = 10'000'000);

struct CiReport {
  bool independent = true;
  double max_deviation = 0.0;
  double threshold = 0.0;
};

// Exact conditional-independence test on a table: the largest deviation
// |f(a,b|c) - f(a|c) f(b|c)| over configurations with f(c) > 0.
CiReport ci_test(const JointTable& table, const VarSet& a, const VarSet& b,
                 const VarSet& c, double threshold = 1e-9);

struct Dataset {
  std::vector<std::string> columns;       // variable names + "component"
  std::vector<std::vector<int>> rows;     // values, then 1-based time point
};

// Ancestral sampling: draw t from the mixing distribution, then sample each
// variable in topological order of sub-DAG kappa(t). Deterministic in seed.
Dataset sample(const MixtureModel& model, int n, uint64_t seed,
               const std::vector<std::string>& names = {});

std::string to_csv(const Dataset& data);

std::vector<std::string> default_names(int p);

}  // namespace mixdag
