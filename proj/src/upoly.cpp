#include "zdgb/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zdgb {

namespace {
const Rational kZero(0);
}

UPoly::UPoly(const Rational& c) {
  if (!zdgb::is_zero(c)) coeffs_.push_back(c);
}

UPoly::UPoly(std::initializer_list<Rational> low_to_high) : coeffs_(low_to_high) { trim(); }

UPoly UPoly::from_coeffs(std::vector<Rational> low_to_high) {
  UPoly p;
  p.coeffs_ = std::move(low_to_high);
  p.trim();
  return p;
}

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  UPoly p;
  if (zdgb::is_zero(c)) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = c;
  return p;
}

void UPoly::trim() {
  while (!coeffs_.empty() && zdgb::is_zero(coeffs_.back())) coeffs_.pop_back();
}

bool UPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& UPoly::coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : kZero; }

const Rational& UPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

std::size_t UPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !zdgb::is_zero(c); }));
}

UPoly UPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  UPoly r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return from_coeffs(std::move(d));
}

Rational UPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (zdgb::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly::from_coeffs(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& c) {
  if (zdgb::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::strong_ordering operator<=>(const UPoly& a, const UPoly& b) {
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (zdgb::is_zero(c)) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivRem divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(r.size() - db, Rational(0));
  Rational inv = 1 / b.leading();
  for (std::size_t k = r.size(); k-- > db;) {
    if (zdgb::is_zero(r[k])) continue;
    Rational t = r[k] * inv;
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly::from_coeffs(std::move(q)), UPoly::from_coeffs(std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divrem(a, b).remainder; }

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const UPoly& b, const UPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return rem(a, b).is_zero();
}

UPoly gcd_monic(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly r = rem(x, y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm of zero polynomial");
  return (exact_div(a, gcd_monic(a, b)) * b).monic();
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("xgcd(0, 0) is undefined");
  UPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<SquarefreeFactor> squarefree_decompose(const UPoly& a) {
  if (a.degree() < 1) throw std::domain_error("squarefree decomposition of a constant");
  std::vector<SquarefreeFactor> out;
  UPoly f = a.monic();
  UPoly fp = f.derivative();
  UPoly g = gcd_monic(f, fp);
  UPoly w = exact_div(f, g);
  UPoly y = exact_div(fp, g) * (1 / f.leading());
  UPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() >= 1) {
    UPoly h = gcd_monic(w, z);
    if (h.degree() >= 1) out.push_back({h, i});
    w = exact_div(w, h);
    y = exact_div(z, h);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

unsigned multiplicity(const UPoly& p, const UPoly& a) {
  if (p.degree() < 1) throw std::domain_error("multiplicity of a constant");
  if (a.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  unsigned k = 0;
  UPoly cur = a;
  for (;;) {
    auto [q, r] = divrem(cur, p);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

UPoly strip_common_factors(UPoly a, const UPoly& b) {
  if (b.is_zero()) return UPoly(1);
  for (;;) {
    UPoly g = gcd_monic(a, b);
    if (g.degree() < 1) return a;
    a = exact_div(a, g);
  }
}

}  // namespace zdgb
