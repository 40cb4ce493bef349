#pragma once

// Plain-text polynomial systems. See docs/system-format.md for the grammar.

#include <optional>
#include <string>
#include <vector>

#include "zdgb/buchberger.hpp"
#include "zdgb/monomial.hpp"

namespace zdgb {

struct Generator {
  std::string name;  // empty when unnamed
  std::string text;
  std::size_t line;
  std::size_t column;  // where `text` starts
};

struct SystemFile {
  std::vector<std::string> vars;  // precedence order; the eliminated variable is last
  std::string eliminate;
  OrderKind order = OrderKind::Lex;
  std::vector<Generator> generators;
};

SystemFile parse_system(const std::string& text);
SystemFile load_system(const std::string& path);

/// A parsed system in both representations.
struct Problem {
  SystemFile system;
  OrderPtr flat;   // on all variables, eliminated variable last
  OrderPtr tilde;  // on the remaining variables
  std::vector<FieldPoly> flat_generators;
};

Problem make_problem(SystemFile sys, std::optional<OrderKind> order_override = std::nullopt);

/// Parses an expression against the problem's variables.
FieldPoly parse_in(const Problem& p, const std::string& text);

}  // namespace zdgb
