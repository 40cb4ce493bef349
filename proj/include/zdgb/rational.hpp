#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace zdgb {

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Bits in numerator plus bits in denominator; the coefficient-size measure used by the bench.
inline std::size_t bit_size(const Rational& r) {
  auto bits = [](const mpz_class& z) -> std::size_t {
    return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
  };
  return bits(r.get_num()) + bits(r.get_den());
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace zdgb
