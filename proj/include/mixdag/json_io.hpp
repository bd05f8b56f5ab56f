#pragma once

#include <json.hpp>

#include "mixdag/density.hpp"
#include "mixdag/mg_format.hpp"
#include "mixdag/separation.hpp"
#include "mixdag/verify.hpp"

namespace mixdag {

// Key order is fixed so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

// Graph mirror: {"vars": [...], "subdags": [[[from, to], ...], ...]}.
Json graph_to_json(const MotherGraphDoc& doc);
MotherGraphDoc graph_from_json(const Json& j);

// Model document: cardinalities, kappa (1-based sub-DAG ids), mixing, and
// per-variable CPTs as nested arrays in row-major parent-configuration
// order. Non-stationary variables carry one table per time point.
Json model_to_json(const MotherGraphDoc& doc, const MixtureModel& model);
MixtureModel model_from_json(const MotherGraphDoc& doc, const Json& j);

Json statement_to_json(const MotherGraphDoc& doc, const Statement& s);
Json statements_to_json(const MotherGraphDoc& doc,
                        const std::vector<Statement>& statements);

Json witness_to_json(const MotherGraphDoc& doc, const WitnessPath& witness);
Json verdict_to_json(const MotherGraphDoc& doc, const SeparationVerdict& v);

Json violation_to_json(const MotherGraphDoc& doc, const ViolationRecord& r);
Json violations_to_json(const MotherGraphDoc& doc,
                        const std::vector<ViolationRecord>& records);

Json suite_config_to_json(const SuiteConfig& config);
Json counterexample_report_to_json(const MotherGraphDoc& doc,
                                   const CounterexampleReport& report);

}  // namespace mixdag
