#pragma once

// Proper divisors, eliminant reconstruction, the new basis and ideal membership.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zdgb/compat.hpp"
#include "zdgb/proper.hpp"
#include "zdgb/pseudo.hpp"

namespace zdgb {

enum class BranchKind { Compatible, ProperZero, ProperNonzero };

std::string branch_kind_name(BranchKind kind);

struct Branch {
  BranchKind kind;
  UPoly modulus;         // d for the compatible branch, the composite divisor otherwise
  UPoly proper_divisor;  // modulus of the branch basis
  PqrCtxPtr ctx;         // R_c with c = proper_divisor
  std::vector<QPoly> basis;
};

/// Algorithm output for one composite divisor, trivial or not.
struct BranchOutcome {
  CompositeDivisor divisor;
  PqrElem e;  // standardized proper eliminant over R_q
  UPoly proper_divisor;
  std::vector<QPoly> basis;
  ProperStats stats;
};

struct NewBasis {
  bool trivial = false;            // the ideal is <1>
  std::optional<Branch> compatible;  // absent when CP is 1
  std::vector<Branch> proper;        // branches with a non-constant proper divisor
  UPoly chi;
};

/// 1 for a unit, q for zero, iota(e) otherwise.
UPoly proper_divisor(const PqrElem& e, const UPoly& q);
UPoly reconstruct_eliminant(const UPoly& cp, const std::vector<UPoly>& proper_divisors);

struct EliminationOptions {
  std::size_t max_iter = 200000;
  bool parallel = false;
};

/// Runs the proper eliminant algorithm on sigma_q(B_eps) for every composite divisor.
std::vector<BranchOutcome> run_branches(const PseudoResult& pseudo, const CompatReport& compat,
                                        const EliminationOptions& opts = {});

NewBasis build_new_basis(const PseudoResult& pseudo, const CompatReport& compat,
                         const std::vector<BranchOutcome>& outcomes, const EliminationOptions& opts = {});

struct Elimination {
  PseudoResult pseudo;
  CompatReport compat;
  std::vector<BranchOutcome> outcomes;
  NewBasis basis;
};

Elimination eliminate(const std::vector<RPoly>& generators, const EliminationOptions& opts = {});

struct BranchEvidence {
  BranchKind kind;
  UPoly modulus;
  QPoly remainder;
  PqrElem multiplier;
};

struct Membership {
  bool member;
  std::vector<BranchEvidence> evidence;
};

/// f lies in the ideal iff its proper remainder vanishes on every branch.
Membership membership(const RPoly& f, const NewBasis& nb);

}  // namespace zdgb
