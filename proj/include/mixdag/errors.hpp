#pragma once

#include <stdexcept>
#include <string>

namespace mixdag {

enum class Errc {
  invalid_argument,
  invalid_edge,
  cyclic_graph,
  t_not_root,
  stationarity_violation,
  duplicate_subdag,
  overlapping_sets,
  bad_query,
  shape_mismatch,
  not_normalized,
  kappa_not_surjective,
  budget_exceeded,
  parse_error,
  undeclared_variable,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parse-level failure; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mixdag
