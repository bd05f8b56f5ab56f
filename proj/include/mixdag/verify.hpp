#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixdag/density.hpp"
#include "mixdag/mg_format.hpp"
#include "mixdag/separation.hpp"

namespace mixdag {

struct SuiteConfig {
  int graph_count = 200;
  int max_p = 4;
  int max_q = 3;
  double edge_probability = 0.5;
  int models_per_graph = 3;
  int max_conditioning_size = 2;
  int cardinality = 2;
  uint64_t base_seed = 0;
  Semantics semantics = Semantics::Default;
  double independence_threshold = 1e-9;
  double dependence_threshold = 1e-6;
};

enum class ViolationKind { MarkovViolation, Lemma3Violation };

const char* violation_kind_name(ViolationKind k);

// Replayable record: parse `graph`, rebuild the model from `model_seed`,
// re-run the statement, and the same record falls out.
struct ViolationRecord {
  std::string graph;  // serialized mother graph
  uint64_t model_seed = 0;
  Statement statement;
  ViolationKind kind = ViolationKind::MarkovViolation;
  double deviation = 0.0;
};

// Seeded generator: draws a non-stationary subset of X (non-empty when
// q > 1), a shared parent set for the stationary variables, and per-sub-DAG
// random forward edges into the non-stationary variables under a random
// topological order, with T -> x attached for every non-stationary x.
// Duplicate sub-DAGs are redrawn a bounded number of times, after which the
// result simply carries fewer sub-DAGs.
MotherGraph random_mother_graph(int p, int q, double edge_probability,
                                uint64_t seed);

// For every statement enumerated under config.semantics and every model with
// seed base_seed + j (j < models_per_graph), asserts the exact CI deviation
// stays within independence_threshold; returns all failures.
std::vector<ViolationRecord> check_global_markov(const MotherGraphDoc& doc,
                                                 const SuiteConfig& config);

// Asserts m-d-separated => d-separated in the mother graph for every
// singleton-pair query with |C| <= max_conditioning_size.
std::vector<ViolationRecord> check_lemma3(const MotherGraphDoc& doc,
                                          int max_conditioning_size,
                                          Semantics semantics);

struct CounterexampleEntry {
  Statement statement;
  int models_checked = 0;
  int dependent_models = 0;
  double max_deviation = 0.0;
};

// Statements where vertex-level d-separation claims separation but
// m-d-separation (Default) does not, with the fraction of random models in
// which the claimed independence is measurably false.
struct CounterexampleReport {
  std::vector<CounterexampleEntry> entries;
};

CounterexampleReport dsep_counterexample_report(const MotherGraphDoc& doc,
                                                const SuiteConfig& config);

struct SuiteReport {
  SuiteConfig config;
  int graphs_checked = 0;
  int statements_checked = 0;
  int models_checked = 0;
  std::vector<ViolationRecord> violations;
};

// The randomized harness: graph_count seeded mother graphs, each put through
// check_global_markov and check_lemma3. Deterministic in base_seed.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace mixdag
