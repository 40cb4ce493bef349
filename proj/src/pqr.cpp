#include "zdgb/pqr.hpp"

#include <stdexcept>
#include <utility>

#include "zdgb/errors.hpp"

namespace zdgb {

PqrCtx::PqrCtx(const UPoly& q) : q_(q.monic()) {
  if (q_.is_constant()) throw InputError("quotient ring modulus must be a non-constant polynomial");
}

PqrElem::PqrElem(PqrCtxPtr ctx, const UPoly& a) : ctx_(std::move(ctx)) {
  ZDGB_CHECK(ctx_ != nullptr, "residue without a modulus");
  rep_ = a.degree() < ctx_->degree() ? a : rem(a, ctx_->modulus());
}

const PqrCtxPtr& PqrElem::common(const PqrElem& a, const PqrElem& b) {
  ZDGB_CHECK(a.ctx_ == b.ctx_ || a.ctx_->modulus() == b.ctx_->modulus(),
             "arithmetic between residues of different quotient rings");
  return a.ctx_;
}

PqrElem operator+(const PqrElem& a, const PqrElem& b) { return {PqrElem::common(a, b), a.rep_ + b.rep_, true}; }

PqrElem operator-(const PqrElem& a, const PqrElem& b) { return {PqrElem::common(a, b), a.rep_ - b.rep_, true}; }

PqrElem operator*(const PqrElem& a, const PqrElem& b) {
  const auto& ctx = PqrElem::common(a, b);
  if (a.is_zero() || b.is_zero()) return {ctx, UPoly(), true};
  return PqrElem(ctx, a.rep_ * b.rep_);
}

PqrElem PqrElem::operator-() const { return {ctx_, -rep_, true}; }

bool operator==(const PqrElem& a, const PqrElem& b) {
  PqrElem::common(a, b);
  return a.rep_ == b.rep_;
}

PqrElem project(const PqrCtxPtr& ctx, const UPoly& a) { return PqrElem(ctx, a); }

QPoly project(const PqrCtxPtr& ctx, const RPoly& f) {
  return f.transform<PqrElem>([&](const UPoly& c) { return PqrElem(ctx, c); });
}

UPoly lift(const PqrElem& a) { return a.rep(); }

RPoly lift(const QPoly& f) {
  return f.transform<UPoly>([](const PqrElem& c) { return c.rep(); });
}

UPoly gcd_with_modulus(const PqrElem& a) { return gcd_monic(a.rep(), a.ctx()->modulus()); }

bool is_unit(const PqrElem& a) { return !a.is_zero() && gcd_with_modulus(a).degree() == 0; }

PqrElem inverse(const PqrElem& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero residue");
  XGcd x = xgcd(a.rep(), a.ctx()->modulus());
  if (x.g.degree() != 0) throw std::domain_error("inverse of a zero divisor");
  return PqrElem(a.ctx(), x.s);
}

PqrElem standard_rep(const PqrElem& a) {
  if (a.is_zero()) throw std::domain_error("standard representation of zero residue");
  return PqrElem(a.ctx(), gcd_with_modulus(a));
}

bool is_associate(const PqrElem& a, const PqrElem& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return gcd_with_modulus(a) == gcd_with_modulus(b);
}

PqrElem unit_normalizer(const PqrElem& a) {
  if (a.is_zero()) throw std::domain_error("unit normalizer of zero residue");
  const UPoly& q = a.ctx()->modulus();
  UPoly g = gcd_with_modulus(a);
  UPoly cofactor = exact_div(a.rep(), g);  // coprime to q / g
  UPoly c = exact_div(q, g);
  UPoly u = c.is_constant() ? UPoly(1) : xgcd(cofactor, c).s;
  // u is only fixed modulo c; also force u = 1 modulo the part of q coprime to c.
  UPoly r = strip_common_factors(q, c);
  if (!r.is_constant()) {
    UPoly c_inv = xgcd(c, r).s;
    u += c * rem((UPoly(1) - u) * c_inv, r);
  }
  PqrElem unit(a.ctx(), u);
  ZDGB_CHECK(is_unit(unit) && unit * a == PqrElem(a.ctx(), g), "unit normalizer construction failed");
  return unit;
}

QPoly normalize_lc(const QPoly& f) {
  if (f.is_zero()) return f;
  const PqrElem& lc = f.lc();
  if (lc.rep() == gcd_with_modulus(lc)) return f;
  return f.scale(unit_normalizer(lc));
}

}  // namespace zdgb
