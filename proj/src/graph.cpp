#include "mixdag/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "mixdag/errors.hpp"

namespace mixdag {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::invalid_edge: return "InvalidEdge";
    case Errc::cyclic_graph: return "CyclicGraph";
    case Errc::t_not_root: return "TNotRoot";
    case Errc::stationarity_violation: return "StationarityViolation";
    case Errc::duplicate_subdag: return "DuplicateSubDag";
    case Errc::overlapping_sets: return "OverlappingSets";
    case Errc::bad_query: return "BadQuery";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::kappa_not_surjective: return "KappaNotSurjective";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::undeclared_variable: return "UndeclaredVariable";
  }
  return "Error";
}

Dag::Dag(int vertex_count, const std::vector<Edge>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1 || vertex_count > VarSet::kMaxVars)
    throw Error(Errc::invalid_argument,
                "vertex count must be in [1, " +
                    std::to_string(VarSet::kMaxVars) + "], got " +
                    std::to_string(vertex_count));

  parents_.resize(static_cast<size_t>(vertex_count));
  children_.resize(static_cast<size_t>(vertex_count));
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= vertex_count || e.to < 0 ||
        e.to >= vertex_count)
      throw Error(Errc::invalid_edge,
                  "edge endpoint out of range: " + std::to_string(e.from) +
                      " -> " + std::to_string(e.to));
    if (e.from == e.to)
      throw Error(Errc::invalid_edge,
                  "self-loop on vertex " + std::to_string(e.from));
    if (!edges_.insert({e.from, e.to}).second)
      throw Error(Errc::invalid_edge,
                  "duplicate edge " + std::to_string(e.from) + " -> " +
                      std::to_string(e.to));
    parents_[static_cast<size_t>(e.to)].push_back(e.from);
    children_[static_cast<size_t>(e.from)].push_back(e.to);
  }
  for (auto& v : parents_) std::sort(v.begin(), v.end());
  for (auto& v : children_) std::sort(v.begin(), v.end());

  // Kahn's algorithm, always taking the smallest available vertex so the
  // order is deterministic.
  std::vector<int> indegree(static_cast<size_t>(vertex_count), 0);
  for (VarId v = 0; v < vertex_count; ++v)
    indegree[static_cast<size_t>(v)] =
        static_cast<int>(parents_[static_cast<size_t>(v)].size());
  VarSet available;
  for (VarId v = 0; v < vertex_count; ++v)
    if (indegree[static_cast<size_t>(v)] == 0) available.insert(v);
  topo_.reserve(static_cast<size_t>(vertex_count));
  while (!available.empty()) {
    VarId v = *available.begin();
    available.erase(v);
    topo_.push_back(v);
    for (VarId ch : children_[static_cast<size_t>(v)])
      if (--indegree[static_cast<size_t>(ch)] == 0) available.insert(ch);
  }
  if (static_cast<int>(topo_.size()) != vertex_count)
    throw Error(Errc::cyclic_graph, "directed cycle detected");

  // reflexive ancestor masks, parents first in topological order
  ancestors_.resize(static_cast<size_t>(vertex_count));
  for (VarId v : topo_) {
    VarSet anc{v};
    for (VarId pa : parents_[static_cast<size_t>(v)])
      anc |= ancestors_[static_cast<size_t>(pa)];
    ancestors_[static_cast<size_t>(v)] = anc;
  }
}

void Dag::check_vertex(VarId v) const {
  if (v < 0 || v >= vertex_count_)
    throw Error(Errc::bad_query, "vertex " + std::to_string(v) +
                                     " out of range [0, " +
                                     std::to_string(vertex_count_) + ")");
}

bool Dag::has_edge(VarId from, VarId to) const {
  return edges_.count({from, to}) != 0;
}

bool Dag::adjacent(VarId a, VarId b) const {
  return has_edge(a, b) || has_edge(b, a);
}

const std::vector<VarId>& Dag::parents(VarId v) const {
  check_vertex(v);
  return parents_[static_cast<size_t>(v)];
}

const std::vector<VarId>& Dag::children(VarId v) const {
  check_vertex(v);
  return children_[static_cast<size_t>(v)];
}

VarSet Dag::parent_set(VarId v) const {
  check_vertex(v);
  VarSet s;
  for (VarId pa : parents_[static_cast<size_t>(v)]) s.insert(pa);
  return s;
}

VarSet Dag::spouses(VarId v) const {
  check_vertex(v);
  VarSet s;
  for (VarId ch : children_[static_cast<size_t>(v)]) s |= parent_set(ch);
  s.erase(v);
  return s;
}

VarSet Dag::ancestors(VarId v) const {
  check_vertex(v);
  return ancestors_[static_cast<size_t>(v)];
}

VarSet Dag::ancestors(const VarSet& s) const {
  VarSet out;
  for (VarId v : s) out |= ancestors(v);
  return out;
}

UndirectedGraph::UndirectedGraph(int vertex_count,
                                 const std::vector<Edge>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > VarSet::kMaxVars)
    throw Error(Errc::invalid_argument, "vertex count out of range");
  neighbors_.resize(static_cast<size_t>(vertex_count));
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= vertex_count || e.to < 0 ||
        e.to >= vertex_count)
      throw Error(Errc::invalid_edge, "edge endpoint out of range");
    if (e.from == e.to)
      throw Error(Errc::invalid_edge,
                  "self-loop on vertex " + std::to_string(e.from));
    neighbors_[static_cast<size_t>(e.from)].insert(e.to);
    neighbors_[static_cast<size_t>(e.to)].insert(e.from);
  }
}

bool UndirectedGraph::adjacent(VarId a, VarId b) const {
  return a >= 0 && a < vertex_count_ &&
         neighbors_[static_cast<size_t>(a)].contains(b);
}

const VarSet& UndirectedGraph::neighbors(VarId v) const {
  if (v < 0 || v >= vertex_count_)
    throw Error(Errc::bad_query, "vertex out of range");
  return neighbors_[static_cast<size_t>(v)];
}

std::set<std::pair<VarId, VarId>> UndirectedGraph::edges() const {
  std::set<std::pair<VarId, VarId>> out;
  for (VarId v = 0; v < vertex_count_; ++v)
    for (VarId w : neighbors_[static_cast<size_t>(v)])
      if (v < w) out.insert({v, w});
  return out;
}

bool UndirectedGraph::separated(const VarSet& a, const VarSet& b,
                                const VarSet& c) const {
  if (a.intersects(b) || a.intersects(c) || b.intersects(c))
    throw Error(Errc::overlapping_sets, "query sets must be disjoint");
  VarSet visited = a;
  std::queue<VarId> frontier;
  for (VarId v : a) frontier.push(v);
  while (!frontier.empty()) {
    VarId v = frontier.front();
    frontier.pop();
    for (VarId w : neighbors_[static_cast<size_t>(v)]) {
      if (visited.contains(w) || c.contains(w)) continue;
      if (b.contains(w)) return false;
      visited.insert(w);
      frontier.push(w);
    }
  }
  return true;
}

UndirectedGraph moral_graph_of_ancestral_set(const Dag& dag, const VarSet& s) {
  VarSet members = dag.ancestors(s);
  std::set<std::pair<VarId, VarId>> undirected;
  auto add = [&undirected](VarId a, VarId b) {
    undirected.insert({std::min(a, b), std::max(a, b)});
  };
  for (VarId v : members) {
    const auto& pas = dag.parents(v);
    // the ancestral closure contains all parents of its members
    for (VarId pa : pas) add(pa, v);
    for (size_t i = 0; i < pas.size(); ++i)
      for (size_t j = i + 1; j < pas.size(); ++j) add(pas[i], pas[j]);
  }
  std::vector<Edge> edges;
  edges.reserve(undirected.size());
  for (const auto& [x, y] : undirected) edges.push_back({x, y});
  return UndirectedGraph(dag.vertex_count(), edges);
}

}  // namespace mixdag
