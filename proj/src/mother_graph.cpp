#include "mixdag/mother_graph.hpp"

#include <string>

#include "mixdag/errors.hpp"

namespace mixdag {

MotherGraph::MotherGraph(std::vector<Dag> sub_dags)
    : sub_dags_(std::move(sub_dags)) {
  if (sub_dags_.empty())
    throw Error(Errc::invalid_argument, "at least one sub-DAG is required");
  int vc = sub_dags_.front().vertex_count();
  if (vc < 2)
    throw Error(Errc::invalid_argument,
                "a mother graph needs at least one X variable plus T");
  for (const Dag& g : sub_dags_)
    if (g.vertex_count() != vc)
      throw Error(Errc::shape_mismatch,
                  "sub-DAGs disagree on variable count");
  var_count_ = vc - 1;
  VarId t_var = var_count_;

  for (size_t k = 0; k < sub_dags_.size(); ++k)
    if (!sub_dags_[k].parents(t_var).empty())
      throw Error(Errc::t_not_root, "T has a parent in sub-DAG " +
                                        std::to_string(k + 1));

  for (VarId x = 0; x < var_count_; ++x) {
    bool t_everywhere = true;
    bool t_somewhere = false;
    for (const Dag& g : sub_dags_) {
      bool has_t = g.has_edge(t_var, x);
      t_everywhere = t_everywhere && has_t;
      t_somewhere = t_somewhere || has_t;
    }
    if (t_somewhere && !t_everywhere)
      throw Error(Errc::stationarity_violation,
                  "variable " + std::to_string(x) +
                      " has T as parent in some sub-DAGs but not all");
    if (!t_somewhere) {
      VarSet shared = sub_dags_.front().parent_set(x);
      for (const Dag& g : sub_dags_)
        if (g.parent_set(x) != shared)
          throw Error(Errc::stationarity_violation,
                      "variable " + std::to_string(x) +
                          " lacks T everywhere but its parent set varies "
                          "across sub-DAGs");
      stationary_.insert(x);
    }
  }

  for (size_t i = 0; i < sub_dags_.size(); ++i)
    for (size_t j = i + 1; j < sub_dags_.size(); ++j)
      if (sub_dags_[i] == sub_dags_[j])
        throw Error(Errc::duplicate_subdag,
                    "sub-DAGs " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " have identical edge sets");
}

void MotherGraph::check_vertex(VarId v) const {
  if (v < 0 || v > var_count_)
    throw Error(Errc::bad_query, "variable " + std::to_string(v) +
                                     " out of range [0, " +
                                     std::to_string(var_count_) + "]");
}

bool MotherGraph::is_stationary(VarId x) const {
  check_vertex(x);
  return stationary_.contains(x);
}

VarSet MotherGraph::parents(VarId v) const {
  check_vertex(v);
  VarSet out;
  for (const Dag& g : sub_dags_) out |= g.parent_set(v);
  return out;
}

VarSet MotherGraph::children(VarId v) const {
  check_vertex(v);
  VarSet out;
  for (const Dag& g : sub_dags_)
    for (VarId ch : g.children(v)) out.insert(ch);
  return out;
}

VarSet MotherGraph::spouses(VarId v) const {
  check_vertex(v);
  VarSet out;
  for (const Dag& g : sub_dags_) out |= g.spouses(v);
  return out;
}

VarSet MotherGraph::ancestors(VarId v) const {
  check_vertex(v);
  VarSet out;
  for (const Dag& g : sub_dags_) out |= g.ancestors(v);
  return out;
}

VarSet MotherGraph::ancestors(const VarSet& s) const {
  VarSet out;
  for (VarId v : s) out |= ancestors(v);
  return out;
}

bool MotherGraph::adjacent(VarId a, VarId b) const {
  check_vertex(a);
  check_vertex(b);
  for (const Dag& g : sub_dags_)
    if (g.adjacent(a, b)) return true;
  return false;
}

}  // namespace mixdag
