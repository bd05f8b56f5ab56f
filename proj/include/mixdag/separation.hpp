#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mixdag/mother_graph.hpp"

namespace mixdag {

// Collider-activation rules for m-d-separation.
//
//   Default         a triple may be traversed as a collider when some
//                   realization of it is a collider and its middle variable
//                   is in C or an ancestor of C at the variable level; it
//                   may be traversed as a non-collider when some realization
//                   is a non-collider and its middle variable is outside C.
//   StrictDef3      as Default but collider traversal requires the middle
//                   variable to be in C itself (no ancestor activation).
//   LiteralCollider as StrictDef3 but any triple with a collider realization
//                   must be traversed as a collider, even if a non-collider
//                   realization exists.
//
// Default is the shipped oracle; the other two exist to demonstrate where
// the literal readings diverge (see the verify module).
enum class Semantics { Default, StrictDef3, LiteralCollider };

const char* semantics_name(Semantics s);
std::optional<Semantics> semantics_from_name(std::string_view name);

// Realizability record for an ordered variable triple <zi, zj, zk>.
//   collider_subdags     sub-DAGs containing zi -> zj <- zk
//   noncollider_subdags  sub-DAGs containing both edges in any other
//                        orientation
//   cond2_pairs          ordered pairs (g, h), g != h, where sub-DAG g
//                        contains zi -> zj <- T and sub-DAG h contains
//                        T -> zj <- zk; only possible when zi, zj, zk are
//                        all X variables
// Sub-DAG indices are 0-based.
struct TripleStatus {
  std::vector<int> collider_subdags;
  std::vector<int> noncollider_subdags;
  std::vector<std::pair<int, int>> cond2_pairs;

  bool cond2() const { return !cond2_pairs.empty(); }
  bool collider_realizable() const {
    return !collider_subdags.empty() || cond2();
  }
  bool noncollider_realizable() const { return !noncollider_subdags.empty(); }
  bool realizable() const {
    return collider_realizable() || noncollider_realizable();
  }
};

TripleStatus triple_status(const MotherGraph& mg, VarId zi, VarId zj, VarId zk);

struct SeparationQuery {
  VarSet a;
  VarSet b;
  VarSet c;
  Semantics semantics = Semantics::Default;
};

enum class RealizationKind { NonCollider, Collider, Cond2 };

// How one interior triple of a witness path is realized and traversed.
struct TripleRealization {
  VarId middle = -1;
  RealizationKind kind = RealizationKind::NonCollider;
  int subdag = -1;                      // NonCollider / Collider
  std::pair<int, int> subdag_pair{-1, -1};  // Cond2
  bool as_collider = false;
};

struct WitnessPath {
  std::vector<VarId> vertices;              // from a in A to b in B
  std::vector<TripleRealization> triples;   // one per interior vertex
  int subdag = -1;  // connecting sub-DAG, set by d_separated_mother
};

struct SeparationVerdict {
  bool separated = true;
  std::optional<WitnessPath> witness;
};

// Classical d-separation on a single DAG, decided through the moral graph
// of the ancestral closure. The witness, when connected, is an active trail
// found by the independent collider-aware search; the two routes act as
// mutual oracles and a disagreement throws.
SeparationVerdict d_separated(const Dag& dag, const VarSet& a,
                              const VarSet& b, const VarSet& c);

// The two decision routes, exposed separately for cross-checking.
bool moral_separated(const Dag& dag, const VarSet& a, const VarSet& b,
                     const VarSet& c);
std::optional<WitnessPath> find_active_trail(const Dag& dag, const VarSet& a,
                                             const VarSet& b, const VarSet& c);

// Vertex-level d-separation on the mother graph: separated iff separated in
// every sub-DAG. A connected verdict names the connecting sub-DAG.
SeparationVerdict d_separated_mother(const MotherGraph& mg, const VarSet& a,
                                     const VarSet& b, const VarSet& c);

// m-d-separation by exhaustive enumeration of simple variable sequences
// with per-triple realizations. T may appear in C but not in A or B.
SeparationVerdict m_d_separated(const MotherGraph& mg,
                                const SeparationQuery& query);

struct Statement {
  VarId a = -1;
  VarId b = -1;
  VarSet c;
  friend bool operator==(const Statement&, const Statement&) = default;
};

// All separated statements with singleton endpoints over X and conditioning
// sets C subset of X \ {a, b}, |C| <= max_conditioning_size, in
// deterministic order: endpoint pair ascending, then |C|, then lexicographic.
std::vector<Statement> enumerate_statements(
    const MotherGraph& mg, int max_conditioning_size,
    Semantics semantics = Semantics::Default);

// Same enumeration shape but under vertex-level mother-graph d-separation.
std::vector<Statement> enumerate_d_statements(const MotherGraph& mg,
                                              int max_conditioning_size);

// Re-validate a connected verdict's witness: adjacency of consecutive
// vertices, every claimed realization, and every activation condition.
bool replay_m_witness(const MotherGraph& mg, const SeparationQuery& query,
                      const WitnessPath& witness);
bool replay_d_witness(const Dag& dag, const VarSet& c,
                      const WitnessPath& witness);

// Subsets of `candidates` with size <= max_size, ordered by size then
// lexicographically.
std::vector<VarSet> bounded_subsets(const std::vector<VarId>& candidates,
                                    int max_size);

}  // namespace mixdag
