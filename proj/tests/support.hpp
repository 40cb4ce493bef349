#pragma once

// Random generators, fixtures and the random system corpus shared by the test binaries.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zdgb/assemble.hpp"
#include "zdgb/buchberger.hpp"
#include "zdgb/convert.hpp"
#include "zdgb/parser.hpp"
#include "zdgb/report.hpp"
#include "zdgb/system_file.hpp"

namespace zt {

using namespace zdgb;
using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline UPoly rand_upoly(Rng& rng, int max_deg, long bound = 5, bool nonzero = false) {
  for (;;) {
    int d = static_cast<int>(rand_int(rng, 0, max_deg));
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
    for (auto& c : cs) c = rand_int(rng, -bound, bound);
    UPoly p = UPoly::from_coeffs(std::move(cs));
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline UPoly rand_nonconstant(Rng& rng, int max_deg, long bound = 5) {
  for (;;) {
    UPoly p = rand_upoly(rng, max_deg, bound);
    if (p.degree() >= 1) return p;
  }
}

inline Monomial rand_monomial(Rng& rng, std::size_t arity, unsigned max_total) {
  Monomial m(arity);
  unsigned budget = static_cast<unsigned>(rand_int(rng, 0, max_total));
  for (unsigned k = 0; k < budget; ++k) m[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(arity) - 1))] += 1;
  return m;
}

/// Random element of (K[x1])[x~].
inline RPoly rand_rpoly(Rng& rng, const OrderPtr& order, int terms, unsigned max_total, int coeff_deg, long bound = 5) {
  std::vector<RPoly::Term> ts;
  for (int k = 0; k < terms; ++k)
    ts.push_back({rand_monomial(rng, order->arity(), max_total), rand_upoly(rng, coeff_deg, bound)});
  return RPoly(order, std::move(ts));
}

/// Random polynomial that is not constant in x~.
inline RPoly rand_rpoly_nc(Rng& rng, const OrderPtr& order, int terms, unsigned max_total, int coeff_deg,
                           long bound = 5) {
  for (;;) {
    RPoly f = rand_rpoly(rng, order, terms, max_total, coeff_deg, bound);
    if (!f.is_constant()) return f;
  }
}

/// lc times lc(a) of the leading rational coefficients, the constant by which monic gcd/lcm
/// conventions rescale several identities.
inline Rational lead_product(const UPoly& a, const UPoly& b) { return a.leading() * b.leading(); }

inline std::string fixture_path(const std::string& name) { return std::string(ZDGB_FIXTURES_DIR) + "/" + name; }

/// Non-comment lines of a fixture file, with an optional "name =" prefix removed.
inline std::vector<std::string> fixture_lines(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    out.push_back(eq == std::string::npos ? line : line.substr(eq + 1));
  }
  return out;
}

inline Problem worked_example() { return make_problem(load_system(fixture_path("example_7_1.sys"))); }

inline UPoly worked_example_chi(const Problem& p) {
  return to_univariate(parse_in(p, fixture_lines("worked_example_chi.txt").at(0)), p.system.vars.size() - 1).monic();
}

struct CorpusSystem {
  std::string text;  // system file source
  Problem problem;
  std::vector<FieldPoly> gb;  // reduced basis in the problem's flat order
  UPoly chi;                  // oracle eliminant
};

inline std::string random_generator_text(Rng& rng, const std::vector<std::string>& vars, unsigned max_deg) {
  std::ostringstream os;
  int terms = static_cast<int>(rand_int(rng, 2, 4));
  bool first = true;
  for (int t = 0; t < terms; ++t) {
    long c = 0;
    while (c == 0) c = rand_int(rng, -5, 5);
    unsigned budget = static_cast<unsigned>(rand_int(rng, 0, max_deg));
    std::vector<unsigned> e(vars.size(), 0);
    for (unsigned k = 0; k < budget; ++k) e[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(vars.size()) - 1))]++;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) << (c < 0 ? -c : c);
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (e[v]) os << "*" << vars[v] << (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
    first = false;
  }
  return os.str();
}

/// A zero-dimensional, nontrivial random system in 2 or 3 variables with total degree <= 3
/// and integer coefficients in [-5, 5]; candidates are redrawn until the oracle agrees.
inline CorpusSystem random_system(Rng& rng, std::size_t nvars) {
  std::vector<std::string> vars = nvars == 2 ? std::vector<std::string>{"x", "z"}
                                             : std::vector<std::string>{"x", "y", "z"};
  for (;;) {
    std::ostringstream src;
    src << "vars: ";
    for (std::size_t k = 0; k < vars.size(); ++k) src << (k ? ", " : "") << vars[k];
    src << "\norder: lex\n";
    std::size_t ngens = nvars + static_cast<std::size_t>(rand_int(rng, 0, 1));
    for (std::size_t g = 0; g < ngens; ++g) src << random_generator_text(rng, vars, 3) << "\n";
    Problem p = make_problem(parse_system(src.str()));
    bool usable = true;
    for (const auto& f : p.flat_generators) usable = usable && !f.is_zero() && !f.is_constant();
    if (!usable) continue;
    std::vector<FieldPoly> gb;
    UPoly chi;
    try {
      chi = eliminant_oracle(p.flat_generators, &gb);
    } catch (const NotZeroDimensional&) {
      continue;
    }
    if (chi.is_constant() || !is_zero_dimensional(gb)) continue;
    return CorpusSystem{src.str(), std::move(p), std::move(gb), chi};
  }
}

inline std::vector<CorpusSystem> corpus(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CorpusSystem> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_system(rng, k % 2 == 0 ? 2 : 3));
  return out;
}

/// Random probe: either a combination sum h_i g_i of the generators or an unrelated polynomial.
inline FieldPoly random_probe(Rng& rng, const Problem& p, bool member) {
  const auto& vars = p.system.vars;
  if (!member) return parse_poly(random_generator_text(rng, vars, 3), vars, p.flat);
  FieldPoly acc(p.flat);
  for (const auto& g : p.flat_generators) acc += g * parse_poly(random_generator_text(rng, vars, 2), vars, p.flat);
  return acc;
}

}  // namespace zt
