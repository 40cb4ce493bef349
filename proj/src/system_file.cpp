#include "zdgb/system_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "zdgb/convert.hpp"
#include "zdgb/errors.hpp"
#include "zdgb/parser.hpp"

namespace zdgb {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

SystemFile parse_system(const std::string& text) {
  SystemFile sys;
  bool have_vars = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      std::size_t col = colon + 2;
      if (key == "vars") {
        if (have_vars) throw ParseError("duplicate 'vars:' line", line_no, 1);
        std::stringstream ss(value);
        std::string v;
        while (std::getline(ss, v, ',')) {
          v = trim(v);
          if (!is_identifier(v)) throw ParseError("bad variable name '" + v + "'", line_no, col);
          if (std::find(sys.vars.begin(), sys.vars.end(), v) != sys.vars.end())
            throw ParseError("duplicate variable '" + v + "'", line_no, col);
          sys.vars.push_back(v);
        }
        if (sys.vars.size() < 2) throw ParseError("at least two variables are required", line_no, col);
        have_vars = true;
      } else if (key == "eliminate") {
        if (!is_identifier(value)) throw ParseError("bad variable name '" + value + "'", line_no, col);
        sys.eliminate = value;
      } else if (key == "order") {
        try {
          sys.order = parse_order_kind(value);
        } catch (const InputError& e) {
          throw ParseError(e.what(), line_no, col);
        }
      } else {
        throw ParseError("unknown directive '" + key + "'", line_no, 1);
      }
      continue;
    }
    Generator g{"", "", line_no, 1};
    std::size_t offset = 0;
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      g.name = trim(line.substr(0, eq));
      if (!is_identifier(g.name)) throw ParseError("bad generator name '" + g.name + "'", line_no, 1);
      offset = eq + 1;
    }
    g.text = line.substr(offset);
    g.column = offset + 1;
    if (trim(g.text).empty()) throw ParseError("empty generator", line_no, offset + 1);
    sys.generators.push_back(g);
  }
  if (!have_vars) throw InputError("missing 'vars:' line");
  if (sys.eliminate.empty()) sys.eliminate = sys.vars.back();
  if (std::find(sys.vars.begin(), sys.vars.end(), sys.eliminate) == sys.vars.end())
    throw InputError("eliminated variable '" + sys.eliminate + "' is not declared");
  if (sys.eliminate != sys.vars.back())
    throw InputError("eliminated variable '" + sys.eliminate + "' must be the last (least) variable");
  if (sys.generators.empty()) throw InputError("no generators");
  return sys;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

Problem make_problem(SystemFile sys, std::optional<OrderKind> order_override) {
  if (order_override) sys.order = *order_override;
  Problem p;
  p.tilde = make_order(sys.order, sys.vars.size() - 1);
  p.flat = flat_order(*p.tilde);
  p.system = std::move(sys);
  for (const auto& g : p.system.generators) {
    p.flat_generators.push_back(parse_poly(g.text, p.system.vars, p.flat, SourcePos{g.line, g.column}));
  }
  return p;
}

FieldPoly parse_in(const Problem& p, const std::string& text) { return parse_poly(text, p.system.vars, p.flat); }

}  // namespace zdgb
