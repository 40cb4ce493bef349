#pragma once

// Moving polynomials between (K[x1])[x~] and K[x~, x1]. In the flat form the variable x1
// occupies the last slot.

#include "zdgb/buchberger.hpp"
#include "zdgb/pqr.hpp"

namespace zdgb {

/// Ordering on K[x~, x1] induced by an ordering on x~: x~ compared first, x1 breaks ties.
OrderPtr flat_order(const MonomialOrder& tilde);
/// Ordering on x~ obtained by dropping the trailing variable of a flat ordering.
OrderPtr tilde_order(const MonomialOrder& flat);

FieldPoly to_field(const RPoly& f, const OrderPtr& flat);
RPoly from_field(const FieldPoly& f, const OrderPtr& tilde);
inline FieldPoly to_field(const QPoly& f, const OrderPtr& flat) { return to_field(lift(f), flat); }

}  // namespace zdgb
