#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace zdgb {

/// Exponent vector x^a over a fixed list of variables. The all-zero vector is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  std::uint64_t total_degree() const;
  bool is_one() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
/// True iff d divides m componentwise.
bool mono_divides(const Monomial& d, const Monomial& m);
bool mono_coprime(const Monomial& a, const Monomial& b);
/// True iff m lies in the monomial ideal generated by `gens`.
bool monomial_ideal_member(const Monomial& m, std::span<const Monomial> gens);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { Lex, GrLex, GrevLex };

OrderKind parse_order_kind(const std::string& name);
std::string order_name(OrderKind kind);

/// A monomial ordering. `precedence[0]` names the most significant variable. When
/// `trailing_block` is set, the last variable is excluded from the chosen ordering and only
/// breaks ties (an elimination ordering with that variable least).
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t arity, bool trailing_block = false);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence, bool trailing_block = false);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return precedence_.size(); }
  bool trailing_block() const noexcept { return trailing_block_; }
  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

  /// Negative, zero, positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  int compare_block(const Monomial& a, const Monomial& b, std::size_t count) const;

  OrderKind kind_;
  std::vector<std::size_t> precedence_;
  bool trailing_block_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

inline OrderPtr make_order(OrderKind kind, std::size_t arity, bool trailing_block = false) {
  return std::make_shared<const MonomialOrder>(kind, arity, trailing_block);
}

}  // namespace zdgb
