#pragma once

// Classical Buchberger algorithm over Q: the reference oracle for eliminants and membership.

#include <cstddef>
#include <vector>

#include "zdgb/mpoly.hpp"
#include "zdgb/upoly.hpp"

namespace zdgb {

using FieldPoly = MPoly<Rational>;

/// x^eta (f / lt f - g / lt g), x^eta = lcm(lm f, lm g).
FieldPoly spoly_field(const FieldPoly& f, const FieldPoly& g);
FieldPoly make_monic(const FieldPoly& f);
/// Full reduction of f by `basis` (every term, not just the leading one).
FieldPoly normal_form(const FieldPoly& f, const std::vector<FieldPoly>& basis);

struct BuchbergerStats {
  std::size_t pairs = 0;
  std::size_t reductions = 0;
  std::size_t criterion_skips = 0;
};

/// Reduced monic Groebner basis under the order carried by the generators, sorted by
/// decreasing leading monomial. Zero generators are ignored; an empty input gives {}.
std::vector<FieldPoly> buchberger_reduced(const std::vector<FieldPoly>& generators, BuchbergerStats* stats = nullptr);

/// True iff every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const std::vector<FieldPoly>& gb);

/// Monic generator of <F> intersected with K[x_last], where the last variable is least. The
/// generators are re-expressed in an elimination order (kind of the given order on the other
/// variables, last variable as a trailing block). Throws NotZeroDimensional when the
/// intersection is zero; a nonzero intersection is all the pipeline needs.
UPoly eliminant_oracle(const std::vector<FieldPoly>& generators, std::vector<FieldPoly>* gb_out = nullptr);

/// Re-sorts f under another order of the same arity.
FieldPoly reorder(const FieldPoly& f, const OrderPtr& order);

/// Coprime integer coefficients with a positive leading coefficient.
FieldPoly integer_normalize(const FieldPoly& f);

/// Univariate polynomial in the variable `var`; requires f to involve no other variable.
UPoly to_univariate(const FieldPoly& f, std::size_t var);

}  // namespace zdgb
