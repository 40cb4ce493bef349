#include "zdgb/convert.hpp"

#include <map>
#include <utility>

#include "zdgb/errors.hpp"

namespace zdgb {

OrderPtr flat_order(const MonomialOrder& tilde) {
  std::vector<std::size_t> prec = tilde.precedence();
  prec.push_back(prec.size());
  return std::make_shared<const MonomialOrder>(tilde.kind(), std::move(prec), true);
}

OrderPtr tilde_order(const MonomialOrder& flat) {
  std::vector<std::size_t> prec = flat.precedence();
  ZDGB_CHECK(!prec.empty() && prec.back() == prec.size() - 1, "flat ordering must end with the eliminated variable");
  prec.pop_back();
  return std::make_shared<const MonomialOrder>(flat.kind(), std::move(prec), false);
}

FieldPoly to_field(const RPoly& f, const OrderPtr& flat) {
  ZDGB_CHECK(flat->arity() == f.arity() + 1, "flat ordering arity mismatch");
  std::vector<FieldPoly::Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    e.push_back(0);
    const auto& cs = t.coeff.coeffs();
    for (std::size_t d = 0; d < cs.size(); ++d) {
      if (is_zero(cs[d])) continue;
      e.back() = static_cast<std::uint32_t>(d);
      terms.push_back({Monomial(e), cs[d]});
    }
  }
  return FieldPoly(flat, std::move(terms));
}

RPoly from_field(const FieldPoly& f, const OrderPtr& tilde) {
  ZDGB_CHECK(tilde->arity() + 1 == f.arity(), "ordering arity mismatch");
  std::size_t n = tilde->arity();
  std::vector<std::pair<Monomial, std::vector<Rational>>> groups;
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().begin() + n);
    auto [it, fresh] = index.try_emplace(e, groups.size());
    if (fresh) groups.push_back({Monomial(e), {}});
    auto& cs = groups[it->second].second;
    std::size_t d = t.mono[n];
    if (cs.size() <= d) cs.resize(d + 1);
    cs[d] += t.coeff;
  }
  std::vector<RPoly::Term> terms;
  for (auto& [m, cs] : groups) terms.push_back({m, UPoly::from_coeffs(std::move(cs))});
  return RPoly(tilde, std::move(terms));
}

}  // namespace zdgb
