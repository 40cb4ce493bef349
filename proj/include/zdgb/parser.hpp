#pragma once

// Recursive-descent parser for polynomial expressions.
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { '*' factor | <implicit product next to a parenthesis> }
//   factor  := ('+'|'-') factor | primary [ '^' integer ]
//   primary := integer [ '/' integer ] | variable | '(' expr ')'
//
// A product may omit '*' only when a parenthesis is on one side, as in 2(z+1) or (x)(y).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zdgb/buchberger.hpp"

namespace zdgb {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;  // column of the first character of the text
};

/// Parses `text` as a polynomial in `vars` (indexed as in the order's arity). Errors are
/// ParseError with positions relative to `origin`.
FieldPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, const OrderPtr& order,
                     SourcePos origin = {});

/// Canonical text: terms in decreasing order, coefficients as reduced integers or p/q.
std::string render(const FieldPoly& f, const std::vector<std::string>& vars);

}  // namespace zdgb
