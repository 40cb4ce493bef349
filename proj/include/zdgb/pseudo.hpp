#pragma once

// Pseudo-division over the PID K[x1] and the pseudo-eliminant algorithm.

#include <cstddef>
#include <vector>

#include "zdgb/pqr.hpp"
#include "zdgb/upoly.hpp"

namespace zdgb {

struct TermReduction {
  RPoly h;
  UPoly mu;        // interim multiplier m / c_alpha
  UPoly cofactor;  // m / lc(g); h = mu*f - cofactor * (x^alpha / lm g) * g
  Monomial shift;  // x^alpha / lm g
};

/// Eliminates the term of f at `target` using g. Throws InputError if target is not in
/// supp f or not divisible by lm g.
TermReduction term_pseudo_reduce(const RPoly& f, const RPoly& g, const Monomial& target);

struct PseudoDivision {
  UPoly multiplier;             // lambda
  std::vector<RPoly> quotients;  // one per divisor, empty unless requested
  RPoly remainder;
  std::size_t steps = 0;
};

/// lambda f = sum q_j b_j + r with r pseudo-reduced w.r.t. `divisors`. Always reduces the
/// highest reducible term, using the lowest-index divisor whose lm divides it.
PseudoDivision pseudo_divide(const RPoly& f, const std::vector<RPoly>& divisors, bool track_quotients = false);

bool is_pseudo_reduced(const RPoly& f, const std::vector<RPoly>& divisors);

/// (m x^g / lt f) f - (m x^g / lt g) g with m = lcm(lc f, lc g), x^g = lcm(lm f, lm g).
RPoly spoly(const RPoly& f, const RPoly& g);
/// (m / lc f) f - m lm(f) with m = lcm(lc f, g), for a nonzero univariate g.
RPoly spoly_univariate(const RPoly& f, const UPoly& g);
/// gcd(lc f, lc g); requires coprime leading monomials.
UPoly coprime_criterion(const RPoly& f, const RPoly& g);
/// monic(lc h) / gcd(lcm(lc f, lc g), lc h); requires lcm(lm f, lm g) in <lm h>.
UPoly triangular_criterion(const RPoly& f, const RPoly& g, const RPoly& h);

struct PseudoStats {
  std::size_t pairs = 0;
  std::size_t coprime_skips = 0;
  std::size_t triangle_skips = 0;
  std::size_t spolys = 0;
  std::size_t reduction_steps = 0;
  std::size_t zero_remainders = 0;
};

struct PseudoResult {
  UPoly chi_eps;                   // monic; 1 when trivial
  std::vector<RPoly> basis;        // B_eps, all non-constant in x~
  std::vector<UPoly> multipliers;  // Lambda, monic and non-constant, in insertion order
  bool trivial = false;
  PseudoStats stats;
};

/// Pseudo-eliminant, pseudo-basis and multiplier set of <F>. Generators constant in x~
/// seed the univariate accumulator. Throws NotZeroDimensional if no univariate element
/// arises, InputError if every generator is zero.
PseudoResult pseudo_eliminant(const std::vector<RPoly>& generators);

/// Makes the leading rational coefficient of lc(f) equal to 1.
RPoly normalize_rational(const RPoly& f);

}  // namespace zdgb
