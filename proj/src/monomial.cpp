#include "zdgb/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zdgb/errors.hpp"

namespace zdgb {

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
  Monomial m(arity);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  ZDGB_CHECK(a.arity() == b.arity(), "monomial arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  ZDGB_CHECK(mono_divides(b, a), "inexact monomial division");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  ZDGB_CHECK(a.arity() == b.arity(), "monomial arity mismatch");
  Monomial r(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  ZDGB_CHECK(d.arity() == m.arity(), "monomial arity mismatch");
  for (std::size_t i = 0; i < d.arity(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

bool monomial_ideal_member(const Monomial& m, std::span<const Monomial> gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return mono_divides(g, m); });
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
  return h;
}

OrderKind parse_order_kind(const std::string& name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::GrLex;
  if (name == "grevlex") return OrderKind::GrevLex;
  throw InputError("unknown monomial order '" + name + "' (expected lex, grlex or grevlex)");
}

std::string order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t arity, bool trailing_block)
    : kind_(kind), precedence_(arity), trailing_block_(trailing_block) {
  std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence, bool trailing_block)
    : kind_(kind), precedence_(std::move(precedence)), trailing_block_(trailing_block) {
  std::vector<std::size_t> check = precedence_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw std::invalid_argument("variable precedence is not a permutation");
  if (trailing_block_ && !precedence_.empty() && precedence_.back() != precedence_.size() - 1)
    throw std::invalid_argument("trailing block variable must be last in precedence");
}

int MonomialOrder::compare_block(const Monomial& a, const Monomial& b, std::size_t count) const {
  auto lex = [&]() {
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t v = precedence_[k];
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  };
  if (kind_ == OrderKind::Lex) return lex();
  std::uint64_t da = 0, db = 0;
  for (std::size_t k = 0; k < count; ++k) {
    da += a[precedence_[k]];
    db += b[precedence_[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  if (kind_ == OrderKind::GrLex) return lex();
  // grevlex: the smaller exponent in the least significant differing variable wins
  for (std::size_t k = count; k-- > 0;) {
    std::size_t v = precedence_[k];
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = precedence_.size();
  if (!trailing_block_ || n == 0) return compare_block(a, b, n);
  if (int c = compare_block(a, b, n - 1); c != 0) return c;
  std::size_t last = precedence_.back();
  if (a[last] != b[last]) return a[last] < b[last] ? -1 : 1;
  return 0;
}

}  // namespace zdgb
