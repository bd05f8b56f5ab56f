#pragma once

#include <string>
#include <vector>

#include "mixdag/mother_graph.hpp"

namespace mixdag {

// A mother graph together with its variable name table. Names are in
// declaration order and define the variable indices; `T` is reserved and
// always maps to index p.
struct MotherGraphDoc {
  std::vector<std::string> names;
  MotherGraph graph;

  VarId id_of(const std::string& name) const;  // -1 when unknown
  std::string name_of(VarId v) const;
};

// Line-oriented format:
//   # comment, blank lines ignored
//   vars <name>+                 exactly once, first meaningful line
//   subdag <k>                   1-based, consecutive, at least one
//   edge <name> -> <name>        under the current subdag header
// Names match [A-Za-z_][A-Za-z0-9_]*; `T` is usable in edges only.
MotherGraphDoc parse_mother_file(const std::string& text);

MotherGraphDoc load_mother_file(const std::string& path);

std::string to_mg_text(const MotherGraphDoc& doc);
std::string to_mg_text(const MotherGraph& mg);  // default names X1..Xp

}  // namespace mixdag
