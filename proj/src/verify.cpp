#include "mixdag/verify.hpp"

#include <algorithm>
#include <string>

#include "mixdag/errors.hpp"
#include "mixdag/rng.hpp"

namespace mixdag {

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::MarkovViolation: return "markov_violation";
    case ViolationKind::Lemma3Violation: return "lemma3_violation";
  }
  return "markov_violation";
}

MotherGraph random_mother_graph(int p, int q, double edge_probability,
                                uint64_t seed) {
  if (p < 1 || p >= VarSet::kMaxVars)
    throw Error(Errc::invalid_argument, "p out of range");
  if (q < 1) throw Error(Errc::invalid_argument, "q must be at least 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw Error(Errc::invalid_argument, "edge probability out of [0, 1]");

  constexpr int kMaxRetries = 200;
  Rng rng(seed);
  VarId t_var = p;

  VarSet nonstationary;
  for (VarId x = 0; x < p; ++x)
    if (rng.uniform() < 0.5) nonstationary.insert(x);
  if (q > 1 && nonstationary.empty())
    nonstationary.insert(rng.uniform_int(0, p - 1));

  // one shared parent draw for the stationary block, acyclic by a random
  // order over the stationary variables themselves
  std::vector<VarId> stationary_order =
      (VarSet::range(p) - nonstationary).to_vector();
  rng.shuffle(stationary_order);
  std::vector<Edge> shared_edges;
  for (size_t i = 0; i < stationary_order.size(); ++i)
    for (size_t j = i + 1; j < stationary_order.size(); ++j)
      if (rng.uniform() < edge_probability)
        shared_edges.push_back({stationary_order[i], stationary_order[j]});

  std::vector<Dag> dags;
  for (int k = 0; k < q; ++k) {
    bool accepted = false;
    for (int attempt = 0; attempt <= kMaxRetries && !accepted; ++attempt) {
      std::vector<VarId> order(static_cast<size_t>(p));
      for (VarId x = 0; x < p; ++x) order[static_cast<size_t>(x)] = x;
      rng.shuffle(order);
      std::vector<int> pos(static_cast<size_t>(p));
      for (int i = 0; i < p; ++i)
        pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

      std::vector<Edge> edges = shared_edges;
      for (VarId a = 0; a < p; ++a) {
        for (VarId b = a + 1; b < p; ++b) {
          VarId from = a, to = b;
          if (pos[static_cast<size_t>(a)] > pos[static_cast<size_t>(b)])
            std::swap(from, to);
          if (!nonstationary.contains(to)) continue;
          if (rng.uniform() < edge_probability) edges.push_back({from, to});
        }
      }
      for (VarId x : nonstationary) edges.push_back({t_var, x});

      Dag candidate(p + 1, edges);
      if (std::find(dags.begin(), dags.end(), candidate) == dags.end()) {
        dags.push_back(std::move(candidate));
        accepted = true;
      }
    }
    if (!accepted) break;  // give up on further distinct sub-DAGs
  }
  return MotherGraph(std::move(dags));
}

std::vector<ViolationRecord> check_global_markov(const MotherGraphDoc& doc,
                                                 const SuiteConfig& config) {
  const MotherGraph& mg = doc.graph;
  std::vector<Statement> statements = enumerate_statements(
      mg, config.max_conditioning_size, config.semantics);
  std::string graph_text = to_mg_text(doc);

  std::vector<ViolationRecord> out;
  for (int j = 0; j < config.models_per_graph; ++j) {
    uint64_t seed = config.base_seed + static_cast<uint64_t>(j);
    MixtureModel model = random_model(mg, config.cardinality, seed);
    JointTable table = joint_table(model);
    for (const Statement& s : statements) {
      CiReport report = ci_test(table, VarSet{s.a}, VarSet{s.b}, s.c,
                                config.independence_threshold);
      if (!report.independent)
        out.push_back({graph_text, seed, s, ViolationKind::MarkovViolation,
                       report.max_deviation});
    }
  }
  return out;
}

std::vector<ViolationRecord> check_lemma3(const MotherGraphDoc& doc,
                                          int max_conditioning_size,
                                          Semantics semantics) {
  const MotherGraph& mg = doc.graph;
  std::string graph_text = to_mg_text(doc);
  std::vector<ViolationRecord> out;
  int p = mg.var_count();
  int bound = std::clamp(max_conditioning_size, 0, std::max(p - 2, 0));
  for (VarId i = 0; i < p; ++i) {
    for (VarId j = i + 1; j < p; ++j) {
      std::vector<VarId> candidates;
      for (VarId x = 0; x < p; ++x)
        if (x != i && x != j) candidates.push_back(x);
      for (const VarSet& c : bounded_subsets(candidates, bound)) {
        SeparationQuery query{{i}, {j}, c, semantics};
        if (!m_d_separated(mg, query).separated) continue;
        if (!d_separated_mother(mg, {i}, {j}, c).separated)
          out.push_back({graph_text, 0, Statement{i, j, c},
                         ViolationKind::Lemma3Violation, 0.0});
      }
    }
  }
  return out;
}

CounterexampleReport dsep_counterexample_report(const MotherGraphDoc& doc,
                                                const SuiteConfig& config) {
  const MotherGraph& mg = doc.graph;
  CounterexampleReport report;
  int p = mg.var_count();
  int bound = std::clamp(config.max_conditioning_size, 0, std::max(p - 2, 0));
  for (VarId i = 0; i < p; ++i) {
    for (VarId j = i + 1; j < p; ++j) {
      std::vector<VarId> candidates;
      for (VarId x = 0; x < p; ++x)
        if (x != i && x != j) candidates.push_back(x);
      for (const VarSet& c : bounded_subsets(candidates, bound)) {
        if (!d_separated_mother(mg, {i}, {j}, c).separated) continue;
        SeparationQuery query{{i}, {j}, c, Semantics::Default};
        if (m_d_separated(mg, query).separated) continue;

        CounterexampleEntry entry;
        entry.statement = Statement{i, j, c};
        entry.models_checked = config.models_per_graph;
        for (int n = 0; n < config.models_per_graph; ++n) {
          uint64_t seed = config.base_seed + static_cast<uint64_t>(n);
          MixtureModel model = random_model(mg, config.cardinality, seed);
          CiReport ci = ci_test(joint_table(model), VarSet{i}, VarSet{j}, c,
                                config.dependence_threshold);
          if (!ci.independent) ++entry.dependent_models;
          entry.max_deviation = std::max(entry.max_deviation,
                                         ci.max_deviation);
        }
        report.entries.push_back(std::move(entry));
      }
    }
  }
  return report;
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.max_p < 2)
    throw Error(Errc::invalid_argument, "max_p must be at least 2");
  if (config.max_q < 1)
    throw Error(Errc::invalid_argument, "max_q must be at least 1");
  if (!(config.edge_probability > 0.0 && config.edge_probability < 1.0))
    throw Error(Errc::invalid_argument,
                "edge probability must be in (0, 1)");

  SuiteReport report;
  report.config = config;
  for (int g = 0; g < config.graph_count; ++g) {
    Rng meta(mix_seed(config.base_seed, static_cast<uint64_t>(g) * 2));
    int p = meta.uniform_int(2, config.max_p);
    int q = meta.uniform_int(1, config.max_q);
    MotherGraph mg = random_mother_graph(
        p, q, config.edge_probability,
        mix_seed(config.base_seed, static_cast<uint64_t>(g) * 2 + 1));
    MotherGraphDoc doc{default_names(p), mg};

    SuiteConfig local = config;
    local.base_seed =
        mix_seed(config.base_seed, 0x4d6f64656cull + static_cast<uint64_t>(g));

    std::vector<ViolationRecord> markov = check_global_markov(doc, local);
    std::vector<ViolationRecord> lemma3 = check_lemma3(
        doc, config.max_conditioning_size, config.semantics);

    report.graphs_checked += 1;
    report.statements_checked += static_cast<int>(
        enumerate_statements(mg, config.max_conditioning_size,
                             config.semantics)
            .size());
    report.models_checked += config.models_per_graph;
    report.violations.insert(report.violations.end(), markov.begin(),
                             markov.end());
    report.violations.insert(report.violations.end(), lemma3.begin(),
                             lemma3.end());
  }
  return report;
}

}  // namespace mixdag
