#pragma once

// Proper reduction over R_q[x~] and the proper eliminant algorithm.

#include <cstddef>
#include <optional>
#include <vector>

#include "zdgb/pqr.hpp"

namespace zdgb {

struct ProperTermReduction {
  QPoly h;
  PqrElem mu;        // unit interim multiplier
  PqrElem cofactor;  // sigma(lcm(l_alpha, l_g) / l_g)
  Monomial shift;
};

/// The interim multiplier sigma(lcm(l_alpha, l_g) / l_alpha) for reducing coefficient c by g.
PqrElem interim_multiplier(const PqrElem& c, const QPoly& g);
/// Throws InputError when the target is absent, not divisible, or the multiplier is not a unit.
ProperTermReduction proper_term_reduce(const QPoly& f, const QPoly& g, const Monomial& target);
bool is_properly_reducible(const PqrElem& c, const Monomial& m, const QPoly& g);
bool is_properly_reduced(const QPoly& f, const std::vector<QPoly>& divisors);

struct ProperDivision {
  PqrElem multiplier;  // always a unit
  std::vector<QPoly> quotients;
  QPoly remainder;
  std::size_t steps = 0;
};

/// lambda f = sum q_j f_j + r with a unit lambda; r properly reduced w.r.t. `divisors`.
ProperDivision proper_divide(const PqrCtxPtr& ctx, const QPoly& f, const std::vector<QPoly>& divisors,
                             bool track_quotients = false);

/// m_f x^g/lm f * f - m_g x^g/lm g * g.
QPoly spoly_pqr(const QPoly& f, const QPoly& g);
/// sigma(l_e / gcd(l_f, l_e)) (f - lt f) for a nonzero zero divisor e.
QPoly spoly_pqr(const QPoly& f, const PqrElem& e);
/// n_f (f - lt f) with n_f = sigma(lcm(l_f, q) / l_f).
QPoly spoly_pqr_modulus(const QPoly& f);

/// sigma(gcd(l_f, l_g)); requires coprime leading monomials.
PqrElem coprime_criterion_pqr(const QPoly& f, const QPoly& g);
/// sigma(l_h / gcd(lcm(l_f, l_g), l_h)); requires lcm(lm f, lm g) in <lm h>.
PqrElem triangular_criterion_pqr(const QPoly& f, const QPoly& g, const QPoly& h);

struct ProperStats {
  std::size_t iterations = 0;
  std::size_t spolys = 0;
  std::size_t special_spolys = 0;
  std::size_t reduction_steps = 0;
  std::size_t e_refinements = 0;
};

struct ProperResult {
  PqrElem e;  // standardized: 0, 1, or gcd(iota e, q)
  std::vector<QPoly> basis;
  ProperStats stats;
};

/// Runs on F projected into the context; zero images are dropped, a unit image yields e = 1,
/// other images in R_q are folded into e. Throws InternalError after `max_iter` pops.
ProperResult proper_eliminant(const std::vector<QPoly>& F, const PqrCtxPtr& ctx, std::size_t max_iter = 200000);

}  // namespace zdgb
