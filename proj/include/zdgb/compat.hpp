#pragma once

// Splitting a pseudo-eliminant into its compatible part and composite divisors.

#include <vector>

#include "zdgb/upoly.hpp"

namespace zdgb {

struct CompositeDivisor {
  UPoly omega;  // monic, squarefree
  unsigned multiplicity;
  UPoly modulus;  // omega^multiplicity
};

struct OmegaSet {
  unsigned multiplicity;
  std::vector<UPoly> elements;  // pairwise coprime
};

struct CompatReport {
  UPoly cp;                      // compatible part, monic
  std::vector<OmegaSet> omega;   // one entry per multiplicity of the squarefree decomposition
  std::vector<CompositeDivisor> composites;
};

/// Refines each squarefree part q_i of chi_eps by gcds with the multipliers; only gcds are used.
/// A constant chi_eps gives cp = 1 and no composite divisors.
CompatReport compatible_part(const UPoly& chi_eps, const std::vector<UPoly>& multipliers);

/// True iff p is coprime to every multiplier.
bool is_compatible_divisor(const UPoly& p, unsigned multiplicity, const std::vector<UPoly>& multipliers);

}  // namespace zdgb
