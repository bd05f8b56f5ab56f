#include "mixdag/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "mixdag/errors.hpp"
#include "mixdag/json_io.hpp"

namespace mixdag {

namespace {

VarSet resolve_vars(const MotherGraphDoc& doc,
                    const std::vector<std::string>& names, bool allow_t) {
  VarSet out;
  for (const std::string& name : names) {
    VarId id = doc.id_of(name);
    if (id < 0)
      throw Error(Errc::undeclared_variable,
                  "unknown variable '" + name + "'");
    if (!allow_t && id == doc.graph.t())
      throw Error(Errc::bad_query, "T is not allowed in this set");
    out.insert(id);
  }
  return out;
}

Semantics parse_semantics(const std::string& name) {
  std::optional<Semantics> s = semantics_from_name(name);
  if (!s)
    throw Error(Errc::bad_query,
                "unknown semantics '" + name +
                    "' (expected default, strict-def3 or literal-collider)");
  return *s;
}

std::string format_set(const MotherGraphDoc& doc, const VarSet& vars) {
  std::string out = "{";
  bool first = true;
  for (VarId v : vars) {
    if (!first) out += ", ";
    out += doc.name_of(v);
    first = false;
  }
  return out + "}";
}

std::string format_statement(const MotherGraphDoc& doc, const Statement& s) {
  return doc.name_of(s.a) + " _||_ " + doc.name_of(s.b) + " | " +
         format_set(doc, s.c);
}

void print_witness(std::ostream& out, const MotherGraphDoc& doc,
                   const WitnessPath& w) {
  out << "witness:";
  for (size_t i = 0; i < w.vertices.size(); ++i)
    out << (i == 0 ? " " : " -- ") << doc.name_of(w.vertices[i]);
  if (w.subdag >= 0) out << "  (sub-DAG " << (w.subdag + 1) << ")";
  out << "\n";
  for (const TripleRealization& r : w.triples) {
    out << "  " << doc.name_of(r.middle) << ": ";
    switch (r.kind) {
      case RealizationKind::NonCollider:
        out << "non-collider via sub-DAG " << (r.subdag + 1);
        break;
      case RealizationKind::Collider:
        out << "collider via sub-DAG " << (r.subdag + 1);
        break;
      case RealizationKind::Cond2:
        out << "cond2 collider via sub-DAGs (" << (r.subdag_pair.first + 1)
            << ", " << (r.subdag_pair.second + 1) << ")";
        break;
    }
    out << "\n";
  }
}

struct SeparationArgs {
  std::string file;
  std::vector<std::string> a, b, c;
  std::string semantics = "default";
  bool witness = false;
  bool json = false;
};

void add_separation_options(CLI::App* cmd, SeparationArgs& args,
                            bool with_semantics) {
  cmd->add_option("file", args.file, "mother-graph file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--a", args.a, "left variable set (comma separated)")
      ->required()
      ->delimiter(',');
  cmd->add_option("--b", args.b, "right variable set (comma separated)")
      ->required()
      ->delimiter(',');
  cmd->add_option("--c", args.c, "conditioning set (comma separated)")
      ->delimiter(',');
  if (with_semantics)
    cmd->add_option("--semantics", args.semantics,
                    "default | strict-def3 | literal-collider");
  cmd->add_flag("--witness", args.witness, "print the witness path");
  cmd->add_flag("--json", args.json, "machine-readable output");
}

int report_verdict(std::ostream& out, const MotherGraphDoc& doc,
                   const SeparationVerdict& verdict, const Json& config,
                   bool json, bool witness) {
  if (json) {
    Json j = verdict_to_json(doc, verdict);
    j["config"] = config;
    out << j.dump(2) << "\n";
  } else {
    out << (verdict.separated ? "separated" : "connected") << "\n";
    if (witness && verdict.witness) print_witness(out, doc, *verdict.witness);
  }
  return verdict.separated ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("mixdag");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "separation queries and exact conditional-independence checks for "
      "mixtures of DAGs"};
  app.require_subcommand(1);
  int status = 0;

  // validate
  struct {
    std::string file;
    bool json = false;
  } validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "parse and validate a mother-graph file");
  validate->add_option("file", validate_args.file, "mother-graph file")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_flag("--json", validate_args.json, "machine-readable output");
  validate->callback([&]() {
    MotherGraphDoc doc = load_mother_file(validate_args.file);
    if (validate_args.json) {
      Json j;
      j["valid"] = true;
      j["graph"] = graph_to_json(doc);
      j["stationary"] = Json::array();
      for (VarId v : doc.graph.stationary_set())
        j["stationary"].push_back(doc.name_of(v));
      out << j.dump(2) << "\n";
    } else {
      out << "valid: p=" << doc.graph.var_count()
          << " q=" << doc.graph.subdag_count()
          << " stationary=" << format_set(doc, doc.graph.stationary_set())
          << "\n";
    }
    status = 0;
  });

  // msep
  SeparationArgs msep_args;
  CLI::App* msep =
      app.add_subcommand("msep", "m-d-separation query on a mother graph");
  add_separation_options(msep, msep_args, true);
  msep->callback([&]() {
    MotherGraphDoc doc = load_mother_file(msep_args.file);
    SeparationQuery query{resolve_vars(doc, msep_args.a, false),
                          resolve_vars(doc, msep_args.b, false),
                          resolve_vars(doc, msep_args.c, true),
                          parse_semantics(msep_args.semantics)};
    SeparationVerdict verdict = m_d_separated(doc.graph, query);
    Json config;
    config["a"] = msep_args.a;
    config["b"] = msep_args.b;
    config["c"] = msep_args.c;
    config["semantics"] = semantics_name(query.semantics);
    status = report_verdict(out, doc, verdict, config, msep_args.json,
                            msep_args.witness);
  });

  // dsep
  SeparationArgs dsep_args;
  CLI::App* dsep = app.add_subcommand(
      "dsep", "vertex-level d-separation query on a mother graph");
  add_separation_options(dsep, dsep_args, false);
  dsep->callback([&]() {
    MotherGraphDoc doc = load_mother_file(dsep_args.file);
    SeparationVerdict verdict = d_separated_mother(
        doc.graph, resolve_vars(doc, dsep_args.a, false),
        resolve_vars(doc, dsep_args.b, false),
        resolve_vars(doc, dsep_args.c, true));
    Json config;
    config["a"] = dsep_args.a;
    config["b"] = dsep_args.b;
    config["c"] = dsep_args.c;
    status = report_verdict(out, doc, verdict, config, dsep_args.json,
                            dsep_args.witness);
  });

  // enumerate
  struct {
    std::string file;
    int max_c = 2;
    std::string semantics = "default";
    bool json = false;
  } enum_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list all separated singleton-pair statements");
  enumerate->add_option("file", enum_args.file, "mother-graph file")
      ->required()
      ->check(CLI::ExistingFile);
  enumerate->add_option("--max-c", enum_args.max_c,
                        "largest conditioning-set size");
  enumerate->add_option("--semantics", enum_args.semantics,
                        "default | strict-def3 | literal-collider");
  enumerate->add_flag("--json", enum_args.json, "machine-readable output");
  enumerate->callback([&]() {
    MotherGraphDoc doc = load_mother_file(enum_args.file);
    Semantics semantics = parse_semantics(enum_args.semantics);
    std::vector<Statement> statements =
        enumerate_statements(doc.graph, enum_args.max_c, semantics);
    if (enum_args.json) {
      Json j;
      j["statements"] = statements_to_json(doc, statements);
      Json config;
      config["max_c"] = enum_args.max_c;
      config["semantics"] = semantics_name(semantics);
      j["config"] = config;
      out << j.dump(2) << "\n";
    } else {
      for (const Statement& s : statements)
        out << format_statement(doc, s) << "\n";
      out << statements.size() << " statement(s)\n";
    }
    status = 0;
  });

  // verify
  struct {
    std::string file;
    bool random = false;
    int graphs = 200;
    int max_p = 4;
    int max_q = 3;
    double edge_prob = 0.5;
    int models = 3;
    int max_c = 2;
    int cardinality = 2;
    uint64_t seed = 0;
    std::string semantics = "default";
    bool counterexamples = false;
    bool json = false;
  } verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the global Markov property empirically");
  CLI::Option* verify_file =
      verify->add_option("file", verify_args.file, "mother-graph file")
          ->check(CLI::ExistingFile);
  CLI::Option* verify_random = verify->add_flag(
      "--random", verify_args.random, "run the randomized graph suite");
  verify_file->excludes(verify_random);
  verify->add_option("--graphs", verify_args.graphs,
                     "random suite: number of graphs");
  verify->add_option("--max-p", verify_args.max_p,
                     "random suite: largest variable count");
  verify->add_option("--max-q", verify_args.max_q,
                     "random suite: largest sub-DAG count");
  verify->add_option("--edge-prob", verify_args.edge_prob,
                     "random suite: edge probability");
  verify->add_option("--models", verify_args.models, "models per graph");
  verify->add_option("--max-c", verify_args.max_c,
                     "largest conditioning-set size");
  verify->add_option("--cardinality", verify_args.cardinality,
                     "state count per variable");
  verify->add_option("--seed", verify_args.seed, "base seed");
  verify->add_option("--semantics", verify_args.semantics,
                     "default | strict-def3 | literal-collider");
  verify->add_flag("--counterexamples", verify_args.counterexamples,
                   "also report statements where d-separation overclaims");
  verify->add_flag("--json", verify_args.json, "machine-readable output");
  verify->callback([&]() {
    SuiteConfig config;
    config.graph_count = verify_args.graphs;
    config.max_p = verify_args.max_p;
    config.max_q = verify_args.max_q;
    config.edge_probability = verify_args.edge_prob;
    config.models_per_graph = verify_args.models;
    config.max_conditioning_size = verify_args.max_c;
    config.cardinality = verify_args.cardinality;
    config.base_seed = verify_args.seed;
    config.semantics = parse_semantics(verify_args.semantics);

    if (!verify_args.random && verify_args.file.empty())
      throw CLI::ValidationError(
          "verify", "provide a mother-graph file or --random");

    Json j;
    std::vector<ViolationRecord> violations;
    MotherGraphDoc doc{{}, MotherGraph({Dag(2, {})})};
    int statements_checked = 0;
    int graphs_checked = 0;

    if (verify_args.random) {
      SuiteReport report = run_suite(config);
      violations = report.violations;
      statements_checked = report.statements_checked;
      graphs_checked = report.graphs_checked;
      doc = MotherGraphDoc{default_names(config.max_p),
                           MotherGraph({Dag(config.max_p + 1, {})})};
    } else {
      doc = load_mother_file(verify_args.file);
      violations = check_global_markov(doc, config);
      std::vector<ViolationRecord> lemma3 = check_lemma3(
          doc.graph.var_count() >= 2 ? doc : doc,
          config.max_conditioning_size, config.semantics);
      // check_lemma3 needs the doc only for serialization context
      lemma3 = check_lemma3(doc, config.max_conditioning_size,
                            config.semantics);
      violations.insert(violations.end(), lemma3.begin(), lemma3.end());
      statements_checked = static_cast<int>(
          enumerate_statements(doc.graph, config.max_conditioning_size,
                               config.semantics)
              .size());
      graphs_checked = 1;
    }

    if (verify_args.json) {
      j["config"] = suite_config_to_json(config);
      Json summary;
      summary["graphs"] = graphs_checked;
      summary["statements"] = statements_checked;
      summary["models_per_graph"] = config.models_per_graph;
      summary["violation_count"] = violations.size();
      j["summary"] = std::move(summary);
      j["violations"] = violations_to_json(doc, violations);
      if (!verify_args.random && verify_args.counterexamples)
        j["counterexamples"] = counterexample_report_to_json(
            doc, dsep_counterexample_report(doc, config));
      out << j.dump(2) << "\n";
    } else {
      out << "graphs checked: " << graphs_checked << "\n";
      out << "separated statements checked: " << statements_checked << "\n";
      out << "models per graph: " << config.models_per_graph << "\n";
      if (violations.empty()) {
        out << "no violations\n";
      } else {
        out << violations.size() << " violation(s):\n";
        for (const ViolationRecord& r : violations) {
          out << "  [" << violation_kind_name(r.kind) << "] "
              << format_statement(doc, r.statement)
              << " seed=" << r.model_seed << " deviation=" << r.deviation
              << "\n";
        }
      }
      if (!verify_args.random && verify_args.counterexamples) {
        CounterexampleReport report =
            dsep_counterexample_report(doc, config);
        out << report.entries.size()
            << " d-separation overclaim(s) examined\n";
        for (const CounterexampleEntry& e : report.entries)
          out << "  " << format_statement(doc, e.statement) << ": dependent in "
              << e.dependent_models << "/" << e.models_checked
              << " models, max deviation " << e.max_deviation << "\n";
      }
    }
    status = violations.empty() ? 0 : 1;
  });

  // random-graph
  struct {
    int p = 3;
    int q = 2;
    double edge_prob = 0.5;
    uint64_t seed = 0;
    bool json = false;
  } rg_args;
  CLI::App* random_graph = app.add_subcommand(
      "random-graph", "generate a seeded random mother graph");
  random_graph->add_option("--p", rg_args.p, "variable count")->required();
  random_graph->add_option("--q", rg_args.q, "sub-DAG count")->required();
  random_graph->add_option("--edge-prob", rg_args.edge_prob,
                           "edge probability");
  random_graph->add_option("--seed", rg_args.seed, "seed");
  random_graph->add_flag("--json", rg_args.json, "machine-readable output");
  random_graph->callback([&]() {
    MotherGraph mg =
        random_mother_graph(rg_args.p, rg_args.q, rg_args.edge_prob,
                            rg_args.seed);
    MotherGraphDoc doc{default_names(mg.var_count()), mg};
    if (rg_args.json) {
      Json j;
      j["graph"] = graph_to_json(doc);
      j["text"] = to_mg_text(doc);
      out << j.dump(2) << "\n";
    } else {
      out << to_mg_text(doc);
    }
    status = 0;
  });

  // sample
  struct {
    std::string file;
    std::string model_file;
    uint64_t model_seed = 0;
    bool has_model_seed = false;
    int n = 0;
    int cardinality = 2;
    uint64_t seed = 0;
    bool json = false;
  } sample_args;
  CLI::App* sample_cmd =
      app.add_subcommand("sample", "draw labelled rows from a mixture model");
  sample_cmd->add_option("file", sample_args.file, "mother-graph file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::Option* model_opt =
      sample_cmd
          ->add_option("--model", sample_args.model_file,
                       "model document (JSON)")
          ->check(CLI::ExistingFile);
  CLI::Option* model_seed_opt = sample_cmd->add_option(
      "--random-seed", [&sample_args](const std::vector<std::string>& vals) {
        sample_args.has_model_seed = true;
        sample_args.model_seed = std::stoull(vals.front());
        return true;
      },
      "draw a random model with this seed");
  model_opt->excludes(model_seed_opt);
  sample_cmd->add_option("--n", sample_args.n, "number of rows")->required();
  sample_cmd->add_option("--cardinality", sample_args.cardinality,
                         "state count for --random-seed models");
  sample_cmd->add_option("--seed", sample_args.seed, "sampling seed");
  sample_cmd->add_flag("--json", sample_args.json, "machine-readable output");
  sample_cmd->callback([&]() {
    MotherGraphDoc doc = load_mother_file(sample_args.file);
    if (sample_args.model_file.empty() && !sample_args.has_model_seed)
      throw CLI::ValidationError("sample",
                                 "provide --model or --random-seed");
    MixtureModel model = [&]() {
      if (!sample_args.model_file.empty()) {
        std::ifstream in(sample_args.model_file);
        Json j = Json::parse(in, nullptr, true, true);
        return model_from_json(doc, j);
      }
      return random_model(doc.graph, sample_args.cardinality,
                          sample_args.model_seed);
    }();
    Dataset data = sample(model, sample_args.n, sample_args.seed, doc.names);
    if (sample_args.json) {
      Json j;
      j["columns"] = data.columns;
      j["rows"] = data.rows;
      out << j.dump(2) << "\n";
    } else {
      out << to_csv(data);
    }
    status = 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace mixdag
