#include "zdgb/compat.hpp"

#include <utility>

#include "zdgb/errors.hpp"

namespace zdgb {

CompatReport compatible_part(const UPoly& chi_eps, const std::vector<UPoly>& multipliers) {
  CompatReport rep;
  if (chi_eps.is_constant()) {
    rep.cp = UPoly(1);
    return rep;
  }
  UPoly removed(1);
  for (const auto& sf : squarefree_decompose(chi_eps)) {
    OmegaSet set{sf.multiplicity, {}};
    auto& omega = set.elements;
    for (const auto& lambda : multipliers) {
      UPoly d = gcd_monic(lambda, sf.factor);
      bool split = true;
      while (!d.is_constant() && split) {
        split = false;
        for (std::size_t k = 0; k < omega.size(); ++k) {
          UPoly g = gcd_monic(d, omega[k]);
          if (g.is_constant()) continue;
          d = exact_div(d, g).monic();
          UPoly rest = exact_div(omega[k], g).monic();
          if (!rest.is_constant()) {
            omega[k] = g;
            omega.insert(omega.begin() + static_cast<std::ptrdiff_t>(k) + 1, rest);
          }
          split = true;
          break;
        }
      }
      if (!d.is_constant()) omega.push_back(d);
    }
    for (const auto& w : omega) {
      UPoly q = w.pow(sf.multiplicity);
      removed *= q;
      rep.composites.push_back({w, sf.multiplicity, q});
    }
    rep.omega.push_back(std::move(set));
  }
  DivRem dr = divrem(chi_eps.monic(), removed);
  ZDGB_CHECK(dr.remainder.is_zero(), "composite divisors do not divide the pseudo-eliminant");
  rep.cp = dr.quotient.monic();
  return rep;
}

bool is_compatible_divisor(const UPoly& p, unsigned /*multiplicity*/, const std::vector<UPoly>& multipliers) {
  for (const auto& l : multipliers)
    if (!gcd_monic(p, l).is_constant()) return false;
  return true;
}

}  // namespace zdgb
