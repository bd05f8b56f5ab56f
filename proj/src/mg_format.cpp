#include "mixdag/mg_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mixdag/density.hpp"
#include "mixdag/errors.hpp"

namespace mixdag {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto alnum = [&alpha](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), alnum);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

VarId MotherGraphDoc::id_of(const std::string& name) const {
  if (name == "T") return static_cast<VarId>(names.size());
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return -1;
  return static_cast<VarId>(it - names.begin());
}

std::string MotherGraphDoc::name_of(VarId v) const {
  if (v == static_cast<VarId>(names.size())) return "T";
  return names.at(static_cast<size_t>(v));
}

MotherGraphDoc parse_mother_file(const std::string& text) {
  std::vector<std::string> names;
  bool vars_seen = false;
  std::vector<std::vector<Edge>> subdag_edges;
  int line_no = 0;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (size_t hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& head = tokens.front();

    if (!vars_seen) {
      if (head != "vars")
        throw ParseError(Errc::parse_error, line_no,
                         "expected a 'vars' line first, got '" + head + "'");
      if (tokens.size() < 2)
        throw ParseError(Errc::parse_error, line_no,
                         "'vars' needs at least one variable name");
      for (size_t i = 1; i < tokens.size(); ++i) {
        const std::string& name = tokens[i];
        if (!valid_identifier(name))
          throw ParseError(Errc::parse_error, line_no,
                           "invalid variable name '" + name + "'");
        if (name == "T")
          throw ParseError(Errc::parse_error, line_no,
                           "'T' is reserved and must not be declared");
        if (std::find(names.begin(), names.end(), name) != names.end())
          throw ParseError(Errc::parse_error, line_no,
                           "duplicate variable name '" + name + "'");
        names.push_back(name);
      }
      vars_seen = true;
      continue;
    }

    if (head == "vars")
      throw ParseError(Errc::parse_error, line_no,
                       "'vars' may appear only once");

    if (head == "subdag") {
      if (tokens.size() != 2)
        throw ParseError(Errc::parse_error, line_no,
                         "usage: subdag <index>");
      int expected = static_cast<int>(subdag_edges.size()) + 1;
      int got = 0;
      try {
        size_t used = 0;
        got = std::stoi(tokens[1], &used);
        if (used != tokens[1].size()) got = -1;
      } catch (const std::exception&) {
        got = -1;
      }
      if (got != expected)
        throw ParseError(Errc::parse_error, line_no,
                         "sub-DAG headers must be consecutive and 1-based; "
                         "expected 'subdag " +
                             std::to_string(expected) + "'");
      subdag_edges.emplace_back();
      continue;
    }

    if (head == "edge") {
      if (subdag_edges.empty())
        throw ParseError(Errc::parse_error, line_no,
                         "'edge' must appear under a 'subdag' header");
      if (tokens.size() != 4 || tokens[2] != "->")
        throw ParseError(Errc::parse_error, line_no,
                         "usage: edge <name> -> <name>");
      VarId p_count = static_cast<VarId>(names.size());
      auto resolve = [&](const std::string& name) -> VarId {
        if (name == "T") return p_count;
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
          throw ParseError(Errc::undeclared_variable, line_no,
                           "undeclared variable '" + name + "'");
        return static_cast<VarId>(it - names.begin());
      };
      Edge e{resolve(tokens[1]), resolve(tokens[3])};
      auto& edges = subdag_edges.back();
      if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw ParseError(Errc::parse_error, line_no,
                         "duplicate edge in sub-DAG " +
                             std::to_string(subdag_edges.size()));
      edges.push_back(e);
      continue;
    }

    throw ParseError(Errc::parse_error, line_no,
                     "unknown directive '" + head + "'");
  }

  if (!vars_seen)
    throw ParseError(Errc::parse_error, line_no + 1, "missing 'vars' line");
  if (subdag_edges.empty())
    throw ParseError(Errc::parse_error, line_no + 1,
                     "at least one sub-DAG is required");

  int vertex_count = static_cast<int>(names.size()) + 1;
  std::vector<Dag> dags;
  dags.reserve(subdag_edges.size());
  for (size_t k = 0; k < subdag_edges.size(); ++k) {
    try {
      dags.emplace_back(vertex_count, subdag_edges[k]);
    } catch (const Error& e) {
      throw Error(e.code(), "sub-DAG " + std::to_string(k + 1) + ": " +
                                e.what());
    }
  }
  return MotherGraphDoc{std::move(names), MotherGraph(std::move(dags))};
}

MotherGraphDoc load_mother_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mother_file(buf.str());
}

std::string to_mg_text(const MotherGraphDoc& doc) {
  std::ostringstream out;
  out << "vars";
  for (const std::string& name : doc.names) out << ' ' << name;
  out << '\n';
  for (int k = 0; k < doc.graph.subdag_count(); ++k) {
    out << "subdag " << (k + 1) << '\n';
    for (const auto& [from, to] : doc.graph.subdag(k).edges())
      out << "edge " << doc.name_of(from) << " -> " << doc.name_of(to)
          << '\n';
  }
  return out.str();
}

std::string to_mg_text(const MotherGraph& mg) {
  return to_mg_text(MotherGraphDoc{default_names(mg.var_count()), mg});
}

}  // namespace mixdag
