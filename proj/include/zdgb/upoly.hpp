#pragma once

// Univariate polynomials over the rationals: the PID K[x1] that serves as the
// coefficient ring of every multivariate computation in this library.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "zdgb/rational.hpp"

namespace zdgb {

class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UPoly(long c) : UPoly(Rational(c)) {}
  UPoly(int c) : UPoly(Rational(c)) {}

  /// Coefficients listed from degree 0 upward.
  UPoly(std::initializer_list<Rational> low_to_high);
  static UPoly from_coeffs(std::vector<Rational> low_to_high);
  static UPoly monomial(const Rational& c, std::size_t degree);
  /// The indeterminate itself.
  static UPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// True for 0 and for nonzero elements of K.
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(std::size_t d) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::size_t term_count() const;

  UPoly monic() const;
  UPoly derivative() const;
  Rational eval(const Rational& at) const;
  UPoly pow(unsigned e) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  UPoly operator-() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
  /// Total order for deterministic containers: by degree, then coefficients from the top.
  friend std::strong_ordering operator<=>(const UPoly& a, const UPoly& b);

  /// Sparse rendering in the expression grammar, e.g. "z^3 - 1/2*z + 4".
  std::string to_string(std::string_view var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // index = degree, no trailing zeros
};

struct DivRem {
  UPoly quotient;
  UPoly remainder;
};

struct XGcd {
  UPoly g;  // monic gcd
  UPoly s;
  UPoly t;  // s*a + t*b = g
};

struct SquarefreeFactor {
  UPoly factor;  // monic, squarefree
  unsigned multiplicity;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b = 0.
DivRem divrem(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
/// Quotient of an exact division; throws std::domain_error if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
bool divides(const UPoly& b, const UPoly& a);

/// Monic generator of <a, b>; gcd(a, 0) = monic(a). Throws on (0, 0).
UPoly gcd_monic(const UPoly& a, const UPoly& b);
/// Monic least common multiple of nonzero a, b.
UPoly lcm(const UPoly& a, const UPoly& b);
XGcd xgcd(const UPoly& a, const UPoly& b);

/// Yun's algorithm. Factors are monic, squarefree, pairwise coprime, sorted by multiplicity;
/// their product with multiplicities equals monic(a). Requires deg a >= 1.
std::vector<SquarefreeFactor> squarefree_decompose(const UPoly& a);

/// Largest k with p^k | a, for non-constant p and nonzero a.
unsigned multiplicity(const UPoly& p, const UPoly& a);

/// Removes from `a` every irreducible factor it shares with `b`, using gcds only.
UPoly strip_common_factors(UPoly a, const UPoly& b);

}  // namespace zdgb
