#pragma once

// Operation counts for one S-polynomial: the one-gcd construction versus the extended
// Euclidean chain that the classical algorithm runs on the leading coefficients.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zdgb/pqr.hpp"

namespace zdgb {

struct OpCounter {
  std::size_t gcd_calls = 0;
  std::size_t mults = 0;
  std::size_t adds = 0;
  std::size_t max_coeff_bits = 0;

  void observe(const UPoly& p);
  std::size_t ops() const { return mults + adds; }
};

struct SpolyComparison {
  OpCounter fresh;     // lambda x^(g-a) f1 - mu x^(g-b) g1 with one gcd
  OpCounter classical;  // simulated reduction chain
  RPoly s;              // S(f, g)
  RPoly chain_result;   // what the chain produces: t * S / (lc(a) lc(b))
  UPoly bezout_t;       // t of s a' + t b' = gcd(a', b')
  Rational lc_product;  // lc(a) lc(b) over K
  std::size_t chain_length = 0;
};

/// Requires f, g non-constant in x~.
SpolyComparison compare_spoly(const RPoly& f, const RPoly& g);

/// Random pair with deg lc <= m, m tail terms each, and leading coefficients sharing a factor.
std::pair<RPoly, RPoly> bench_pair(unsigned m, std::mt19937_64& rng);

struct BenchRow {
  unsigned m;
  unsigned trial;
  std::string method;  // "new" or "old"
  OpCounter ops;
};

std::vector<BenchRow> bench_spoly_compare(const std::vector<unsigned>& ms, unsigned trials, std::uint64_t seed);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace zdgb
