#pragma once

// The normal principal quotient ring R_q = K[x1]/<q>, its projection sigma_q and lift iota_q.

#include <memory>
#include <string>
#include <string_view>

#include "zdgb/mpoly.hpp"
#include "zdgb/upoly.hpp"

namespace zdgb {

class PqrCtx {
 public:
  /// Stores monic(q); throws InputError for a constant modulus.
  explicit PqrCtx(const UPoly& q);
  const UPoly& modulus() const noexcept { return q_; }
  int degree() const noexcept { return q_.degree(); }

 private:
  UPoly q_;
};

using PqrCtxPtr = std::shared_ptr<const PqrCtx>;

inline PqrCtxPtr make_pqr(const UPoly& q) { return std::make_shared<const PqrCtx>(q); }

class PqrElem {
 public:
  /// The residue of `a` modulo the context's modulus.
  PqrElem(PqrCtxPtr ctx, const UPoly& a);

  const PqrCtxPtr& ctx() const noexcept { return ctx_; }
  const UPoly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  friend PqrElem operator+(const PqrElem& a, const PqrElem& b);
  friend PqrElem operator-(const PqrElem& a, const PqrElem& b);
  friend PqrElem operator*(const PqrElem& a, const PqrElem& b);
  PqrElem operator-() const;
  friend bool operator==(const PqrElem& a, const PqrElem& b);

  std::string to_string(std::string_view var = "z") const { return rep_.to_string(var); }

 private:
  PqrElem(PqrCtxPtr ctx, UPoly rep, bool /*reduced*/) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}
  static const PqrCtxPtr& common(const PqrElem& a, const PqrElem& b);

  PqrCtxPtr ctx_;
  UPoly rep_;  // deg < deg q
};

using RPoly = MPoly<UPoly>;    // (K[x1])[x~]
using QPoly = MPoly<PqrElem>;  // R_q[x~]

PqrElem project(const PqrCtxPtr& ctx, const UPoly& a);
QPoly project(const PqrCtxPtr& ctx, const RPoly& f);
UPoly lift(const PqrElem& a);
RPoly lift(const QPoly& f);

bool is_unit(const PqrElem& a);
/// Throws std::domain_error for a non-unit.
PqrElem inverse(const PqrElem& a);
/// sigma_q(gcd(iota_q(a), q)); throws std::domain_error for a = 0.
PqrElem standard_rep(const PqrElem& a);
bool is_associate(const PqrElem& a, const PqrElem& b);
/// A unit u with u * a == standard_rep(a), for a != 0.
PqrElem unit_normalizer(const PqrElem& a);

/// f scaled by a unit so that lc(f) equals its standard representative.
QPoly normalize_lc(const QPoly& f);

/// gcd(iota(a), q) as a monic polynomial of K[x1]; q itself for a = 0.
UPoly gcd_with_modulus(const PqrElem& a);

}  // namespace zdgb
