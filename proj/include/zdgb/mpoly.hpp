#pragma once

// Sparse multivariate polynomials over a pluggable coefficient ring.
//
// The coefficient type C must provide +, -, * (binary), unary -, == and a zero test via
// CoeffTraits. Products may vanish (rings with zero divisors); such terms are dropped.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "zdgb/errors.hpp"
#include "zdgb/monomial.hpp"
#include "zdgb/rational.hpp"

namespace zdgb {

template <class C>
struct CoeffTraits {
  static bool is_zero(const C& c) { return c.is_zero(); }
};

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
};

template <class C>
class MPoly {
 public:
  struct Term {
    Monomial mono;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit MPoly(OrderPtr order) : order_(std::move(order)) {}

  /// Sorts, merges like monomials and drops zero coefficients.
  MPoly(OrderPtr order, std::vector<Term> terms) : order_(std::move(order)) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order_->greater(a.mono, b.mono); });
    for (auto& t : terms) {
      ZDGB_CHECK(t.mono.arity() == order_->arity(), "monomial arity does not match ordering");
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coeff = terms_.back().coeff + t.coeff;
        if (is_zero_c(terms_.back().coeff)) terms_.pop_back();
      } else if (!is_zero_c(t.coeff)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  static MPoly constant(OrderPtr order, const C& c) {
    Monomial one(order->arity());
    return term(std::move(order), c, std::move(one));
  }

  static MPoly term(OrderPtr order, const C& c, Monomial m) {
    MPoly p(std::move(order));
    if (!is_zero_c(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }

  const OrderPtr& order() const noexcept { return order_; }
  std::size_t arity() const noexcept { return order_->arity(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// True when the polynomial lies in the coefficient ring (supp f is empty or {1}).
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& lt() const {
    ZDGB_CHECK(!terms_.empty(), "leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& lm() const { return lt().mono; }
  const C& lc() const { return lt().coeff; }

  MPoly tail() const {
    MPoly r(order_);
    if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  const C* find(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term& t, const Monomial& x) {
      return order_->greater(t.mono, x);
    });
    if (it != terms_.end() && it->mono == m) return &it->coeff;
    return nullptr;
  }

  std::vector<Monomial> support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& t : terms_) s.push_back(t.mono);
    return s;
  }

  /// c * m * this
  MPoly mul_term(const C& c, const Monomial& m) const {
    MPoly r(order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      C v = t.coeff * c;
      if (!is_zero_c(v)) r.terms_.push_back({t.mono * m, std::move(v)});
    }
    return r;
  }

  MPoly scale(const C& c) const {
    MPoly r(order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      C v = t.coeff * c;
      if (!is_zero_c(v)) r.terms_.push_back({t.mono, std::move(v)});
    }
    return r;
  }

  /// a*f - b*m*g in a single merge pass.
  static MPoly combine(const C& a, const MPoly& f, const C& b, const Monomial& m, const MPoly& g) {
    return merge(f.scale(a), g.mul_term(b, m), true);
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.order_);
    for (const auto& t : b.terms_) r += a.mul_term(t.coeff, t.mono);
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  /// Coefficient-wise map into another ring; vanishing images are dropped.
  template <class D, class F>
  MPoly<D> transform(F&& fn) const {
    std::vector<typename MPoly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      D v = fn(t.coeff);
      if (!CoeffTraits<D>::is_zero(v)) out.push_back({t.mono, std::move(v)});
    }
    return MPoly<D>::from_sorted(order_, std::move(out));
  }

  /// Trusts that `terms` are strictly decreasing and nonzero.
  static MPoly from_sorted(OrderPtr order, std::vector<Term> terms) {
    MPoly p(std::move(order));
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  static bool is_zero_c(const C& c) { return CoeffTraits<C>::is_zero(c); }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    MPoly r(a.order_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& ord = *a.order_;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? C(-t.coeff) : t.coeff});
      } else {
        C v = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!is_zero_c(v)) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  OrderPtr order_;
  std::vector<Term> terms_;  // strictly decreasing under *order_
};

template <class C>
std::vector<Monomial> leading_monomials(const std::vector<MPoly<C>>& polys) {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys)
    if (!p.is_zero()) out.push_back(p.lm());
  return out;
}

}  // namespace zdgb
