#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mixdag/varset.hpp"

namespace mixdag {

struct Edge {
  VarId from = 0;
  VarId to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed acyclic graph over vertices 0..n-1. Construction
// validates edge ranges, rejects self-loops and duplicates, and fails if a
// directed cycle exists. The ancestor relation is reflexive: v is its own
// ancestor, so ancestral sets always contain their seeds.
class Dag {
 public:
  Dag(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return vertex_count_; }
  bool has_edge(VarId from, VarId to) const;
  bool adjacent(VarId a, VarId b) const;

  const std::vector<VarId>& parents(VarId v) const;
  const std::vector<VarId>& children(VarId v) const;
  VarSet parent_set(VarId v) const;
  VarSet spouses(VarId v) const;

  VarSet ancestors(VarId v) const;
  VarSet ancestors(const VarSet& s) const;

  // vertices ordered parents-before-children, deterministic
  const std::vector<VarId>& topological_order() const { return topo_; }

  const std::set<std::pair<VarId, VarId>>& edges() const { return edges_; }

  bool operator==(const Dag& o) const {
    return vertex_count_ == o.vertex_count_ && edges_ == o.edges_;
  }

 private:
  void check_vertex(VarId v) const;

  int vertex_count_;
  std::set<std::pair<VarId, VarId>> edges_;
  std::vector<std::vector<VarId>> parents_;
  std::vector<std::vector<VarId>> children_;
  std::vector<VarSet> ancestors_;  // reflexive, precomputed
  std::vector<VarId> topo_;
};

// Immutable undirected graph over vertices 0..n-1.
class UndirectedGraph {
 public:
  UndirectedGraph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return vertex_count_; }
  bool adjacent(VarId a, VarId b) const;
  const VarSet& neighbors(VarId v) const;
  std::set<std::pair<VarId, VarId>> edges() const;  // normalized a < b

  // true iff no path from `a` to `b` avoids `c`; sets must be disjoint
  bool separated(const VarSet& a, const VarSet& b, const VarSet& c) const;

 private:
  int vertex_count_;
  std::vector<VarSet> neighbors_;
};

// Moral graph of the reflexive ancestral closure of `s`: restrict to
// Anc(s), marry all co-parents, drop orientations. Vertices outside the
// closure are kept but isolated, so vertex indexing is preserved.
UndirectedGraph moral_graph_of_ancestral_set(const Dag& dag, const VarSet& s);

}  // namespace mixdag
