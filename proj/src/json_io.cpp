#include "mixdag/json_io.hpp"

#include <algorithm>

#include "mixdag/errors.hpp"

namespace mixdag {

namespace {

Json names_json(const MotherGraphDoc& doc, const VarSet& vars) {
  Json arr = Json::array();
  for (VarId v : vars) arr.push_back(doc.name_of(v));
  return arr;
}

std::vector<VarId> x_parents_of(const Dag& g, VarId v, VarId t_var) {
  std::vector<VarId> out;
  for (VarId pa : g.parents(v))
    if (pa != t_var) out.push_back(pa);
  return out;
}

CptTable table_from_json(const Json& j) {
  if (!j.is_array())
    throw Error(Errc::parse_error, "CPT table must be an array of rows");
  CptTable table;
  for (const Json& row : j) {
    if (!row.is_array())
      throw Error(Errc::parse_error, "CPT row must be an array");
    table.push_back(row.get<std::vector<double>>());
  }
  return table;
}

Json table_to_json(const Cpt& cpt) {
  Json rows = Json::array();
  for (int r = 0; r < cpt.rows(); ++r) {
    Json row = Json::array();
    for (int s = 0; s < cpt.card; ++s) row.push_back(cpt.value(r, s));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json graph_to_json(const MotherGraphDoc& doc) {
  Json j;
  j["vars"] = doc.names;
  Json subdags = Json::array();
  for (int k = 0; k < doc.graph.subdag_count(); ++k) {
    Json edges = Json::array();
    for (const auto& [from, to] : doc.graph.subdag(k).edges())
      edges.push_back(Json::array({doc.name_of(from), doc.name_of(to)}));
    subdags.push_back(std::move(edges));
  }
  j["subdags"] = std::move(subdags);
  return j;
}

MotherGraphDoc graph_from_json(const Json& j) {
  if (!j.contains("vars") || !j.contains("subdags"))
    throw Error(Errc::parse_error, "graph document needs vars and subdags");
  std::vector<std::string> names = j["vars"].get<std::vector<std::string>>();
  int vertex_count = static_cast<int>(names.size()) + 1;
  auto resolve = [&names](const std::string& name) -> VarId {
    if (name == "T") return static_cast<VarId>(names.size());
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw Error(Errc::undeclared_variable,
                  "undeclared variable '" + name + "'");
    return static_cast<VarId>(it - names.begin());
  };
  std::vector<Dag> dags;
  for (const Json& edges_json : j["subdags"]) {
    std::vector<Edge> edges;
    for (const Json& e : edges_json) {
      if (!e.is_array() || e.size() != 2)
        throw Error(Errc::parse_error, "edge must be a [from, to] pair");
      edges.push_back({resolve(e[0].get<std::string>()),
                       resolve(e[1].get<std::string>())});
    }
    dags.emplace_back(vertex_count, edges);
  }
  return MotherGraphDoc{std::move(names), MotherGraph(std::move(dags))};
}

Json model_to_json(const MotherGraphDoc& doc, const MixtureModel& model) {
  Json j;
  j["vars"] = doc.names;
  j["cardinalities"] = model.cardinalities();
  Json kappa = Json::array();
  for (int k : model.kappa()) kappa.push_back(k + 1);
  j["kappa"] = std::move(kappa);
  j["mixing"] = model.mixing();
  Json cpts = Json::array();
  const MotherGraph& mg = model.graph();
  for (VarId i = 0; i < mg.var_count(); ++i) {
    Json entry;
    entry["var"] = doc.name_of(i);
    entry["stationary"] = mg.is_stationary(i);
    if (mg.is_stationary(i)) {
      const Cpt& cpt = model.cpt(i, 0);
      Json parents = Json::array();
      for (VarId pa : cpt.parents) parents.push_back(doc.name_of(pa));
      entry["parents"] = std::move(parents);
      entry["table"] = table_to_json(cpt);
    } else {
      Json tables = Json::array();
      for (int t = 0; t < model.time_point_count(); ++t) {
        const Cpt& cpt = model.cpt(i, t);
        Json item;
        item["t"] = t + 1;
        Json parents = Json::array();
        for (VarId pa : cpt.parents) parents.push_back(doc.name_of(pa));
        item["parents"] = std::move(parents);
        item["table"] = table_to_json(cpt);
        tables.push_back(std::move(item));
      }
      entry["tables"] = std::move(tables);
    }
    cpts.push_back(std::move(entry));
  }
  j["cpts"] = std::move(cpts);
  return j;
}

MixtureModel model_from_json(const MotherGraphDoc& doc, const Json& j) {
  const MotherGraph& mg = doc.graph;
  int p = mg.var_count();
  for (const char* key : {"cardinalities", "kappa", "mixing", "cpts"})
    if (!j.contains(key))
      throw Error(Errc::parse_error,
                  std::string("model document is missing '") + key + "'");

  std::vector<int> cards = j["cardinalities"].get<std::vector<int>>();
  std::vector<int> kappa;
  for (const Json& k : j["kappa"]) kappa.push_back(k.get<int>() - 1);
  std::vector<double> mixing = j["mixing"].get<std::vector<double>>();

  std::vector<std::vector<CptTable>> cpts(static_cast<size_t>(p));
  std::vector<bool> seen(static_cast<size_t>(p), false);
  for (const Json& entry : j["cpts"]) {
    std::string name = entry.at("var").get<std::string>();
    VarId i = doc.id_of(name);
    if (i < 0 || i >= p)
      throw Error(Errc::undeclared_variable,
                  "unknown variable '" + name + "' in model");
    if (seen[static_cast<size_t>(i)])
      throw Error(Errc::parse_error, "duplicate CPT entry for '" + name + "'");
    seen[static_cast<size_t>(i)] = true;

    bool stationary = entry.at("stationary").get<bool>();
    if (stationary != mg.is_stationary(i))
      throw Error(Errc::shape_mismatch,
                  "stationarity flag for '" + name +
                      "' does not match the graph");

    auto check_parents = [&](const Json& item, const Dag& g) {
      if (!item.contains("parents")) return;
      std::vector<std::string> expected;
      for (VarId pa : x_parents_of(g, i, mg.t()))
        expected.push_back(doc.name_of(pa));
      if (item["parents"].get<std::vector<std::string>>() != expected)
        throw Error(Errc::shape_mismatch,
                    "parent list for '" + name +
                        "' does not match the graph");
    };

    if (stationary) {
      check_parents(entry, mg.subdag(0));
      cpts[static_cast<size_t>(i)].push_back(
          table_from_json(entry.at("table")));
    } else {
      for (const Json& item : entry.at("tables")) {
        int t = item.at("t").get<int>() - 1;
        if (t != static_cast<int>(cpts[static_cast<size_t>(i)].size()))
          throw Error(Errc::parse_error,
                      "time points for '" + name +
                          "' must be consecutive starting at 1");
        if (t >= static_cast<int>(kappa.size()))
          throw Error(Errc::shape_mismatch,
                      "time point out of range for '" + name + "'");
        check_parents(item, mg.subdag(kappa[static_cast<size_t>(t)]));
        cpts[static_cast<size_t>(i)].push_back(
            table_from_json(item.at("table")));
      }
    }
  }
  for (VarId i = 0; i < p; ++i)
    if (!seen[static_cast<size_t>(i)])
      throw Error(Errc::shape_mismatch,
                  "missing CPT entry for '" + doc.name_of(i) + "'");
  return build_model(mg, std::move(cards), std::move(kappa),
                     std::move(mixing), cpts);
}

Json statement_to_json(const MotherGraphDoc& doc, const Statement& s) {
  Json j;
  j["a"] = doc.name_of(s.a);
  j["b"] = doc.name_of(s.b);
  j["c"] = names_json(doc, s.c);
  return j;
}

Json statements_to_json(const MotherGraphDoc& doc,
                        const std::vector<Statement>& statements) {
  Json arr = Json::array();
  for (const Statement& s : statements)
    arr.push_back(statement_to_json(doc, s));
  return arr;
}

Json witness_to_json(const MotherGraphDoc& doc, const WitnessPath& w) {
  Json j;
  Json path = Json::array();
  for (VarId v : w.vertices) path.push_back(doc.name_of(v));
  j["path"] = std::move(path);
  j["subdag"] = w.subdag >= 0 ? Json(w.subdag + 1) : Json(nullptr);
  Json triples = Json::array();
  for (const TripleRealization& r : w.triples) {
    Json item;
    item["middle"] = doc.name_of(r.middle);
    switch (r.kind) {
      case RealizationKind::NonCollider: item["kind"] = "non-collider"; break;
      case RealizationKind::Collider: item["kind"] = "collider"; break;
      case RealizationKind::Cond2: item["kind"] = "cond2"; break;
    }
    item["as_collider"] = r.as_collider;
    item["subdag"] = r.subdag >= 0 ? Json(r.subdag + 1) : Json(nullptr);
    item["subdag_pair"] =
        r.kind == RealizationKind::Cond2
            ? Json::array({r.subdag_pair.first + 1, r.subdag_pair.second + 1})
            : Json(nullptr);
    triples.push_back(std::move(item));
  }
  j["triples"] = std::move(triples);
  return j;
}

Json verdict_to_json(const MotherGraphDoc& doc, const SeparationVerdict& v) {
  Json j;
  j["verdict"] = v.separated ? "separated" : "connected";
  j["witness"] = v.witness ? witness_to_json(doc, *v.witness) : Json(nullptr);
  return j;
}

Json violation_to_json(const MotherGraphDoc& doc, const ViolationRecord& r) {
  Json j;
  j["kind"] = violation_kind_name(r.kind);
  j["statement"] = statement_to_json(doc, r.statement);
  j["model_seed"] = r.model_seed;
  j["deviation"] = r.deviation;
  j["graph"] = r.graph;
  return j;
}

Json violations_to_json(const MotherGraphDoc& doc,
                        const std::vector<ViolationRecord>& records) {
  Json arr = Json::array();
  for (const ViolationRecord& r : records)
    arr.push_back(violation_to_json(doc, r));
  return arr;
}

Json suite_config_to_json(const SuiteConfig& config) {
  Json j;
  j["graph_count"] = config.graph_count;
  j["max_p"] = config.max_p;
  j["max_q"] = config.max_q;
  j["edge_probability"] = config.edge_probability;
  j["models_per_graph"] = config.models_per_graph;
  j["max_conditioning_size"] = config.max_conditioning_size;
  j["cardinality"] = config.cardinality;
  j["base_seed"] = config.base_seed;
  j["semantics"] = semantics_name(config.semantics);
  j["independence_threshold"] = config.independence_threshold;
  j["dependence_threshold"] = config.dependence_threshold;
  return j;
}

Json counterexample_report_to_json(const MotherGraphDoc& doc,
                                   const CounterexampleReport& report) {
  Json arr = Json::array();
  for (const CounterexampleEntry& e : report.entries) {
    Json item;
    item["statement"] = statement_to_json(doc, e.statement);
    item["models_checked"] = e.models_checked;
    item["dependent_models"] = e.dependent_models;
    item["max_deviation"] = e.max_deviation;
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace mixdag
