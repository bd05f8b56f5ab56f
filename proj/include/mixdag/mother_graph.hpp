#pragma once

#include <vector>

#include "mixdag/graph.hpp"

namespace mixdag {

// An ordered collection of q distinct sub-DAGs over a shared variable set:
// X variables at indices 0..p-1 plus the time variable T at index p.
//
// Validated invariants:
//   - T is a root in every sub-DAG;
//   - every X variable either has T as a parent in every sub-DAG
//     (non-stationary) or has no T parent anywhere and an identical parent
//     set across all sub-DAGs (stationary);
//   - sub-DAG edge sets are pairwise distinct.
//
// Variable-level relations (parents, children, spouses, ancestors) are the
// unions of the per-sub-DAG relations; ancestors are reflexive.
class MotherGraph {
 public:
  explicit MotherGraph(std::vector<Dag> sub_dags);

  int var_count() const { return var_count_; }        // p
  int vertex_count() const { return var_count_ + 1; }  // p + 1
  VarId t() const { return var_count_; }
  VarSet x_vars() const { return VarSet::range(var_count_); }

  int subdag_count() const { return static_cast<int>(sub_dags_.size()); }
  const Dag& subdag(int k) const { return sub_dags_.at(static_cast<size_t>(k)); }
  const std::vector<Dag>& subdags() const { return sub_dags_; }

  bool is_stationary(VarId x) const;
  const VarSet& stationary_set() const { return stationary_; }

  VarSet parents(VarId v) const;
  VarSet children(VarId v) const;
  VarSet spouses(VarId v) const;
  VarSet ancestors(VarId v) const;
  VarSet ancestors(const VarSet& s) const;
  bool adjacent(VarId a, VarId b) const;

  bool operator==(const MotherGraph& o) const {
    return var_count_ == o.var_count_ && sub_dags_ == o.sub_dags_;
  }

 private:
  void check_vertex(VarId v) const;

  int var_count_;
  std::vector<Dag> sub_dags_;
  VarSet stationary_;
};

}  // namespace mixdag
