#include "zdgb/buchberger.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "zdgb/errors.hpp"

namespace zdgb {

FieldPoly spoly_field(const FieldPoly& f, const FieldPoly& g) {
  ZDGB_CHECK(!f.is_zero() && !g.is_zero(), "S-polynomial of zero");
  Monomial eta = mono_lcm(f.lm(), g.lm());
  return f.mul_term(Rational(1 / f.lc()), eta / f.lm()) - g.mul_term(Rational(1 / g.lc()), eta / g.lm());
}

FieldPoly make_monic(const FieldPoly& f) {
  if (f.is_zero() || f.lc() == 1) return f;
  return f.scale(Rational(1 / f.lc()));
}

FieldPoly normal_form(const FieldPoly& f, const std::vector<FieldPoly>& basis) {
  std::vector<FieldPoly::Term> rest;
  FieldPoly p = f;
  while (!p.is_zero()) {
    const auto& lt = p.lt();
    const FieldPoly* div = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && mono_divides(g.lm(), lt.mono)) {
        div = &g;
        break;
      }
    }
    if (div == nullptr) {
      rest.push_back(lt);
      p = p.tail();
      continue;
    }
    Rational c = lt.coeff / div->lc();
    p = FieldPoly::combine(Rational(1), p, c, lt.mono / div->lm(), *div);
  }
  return FieldPoly::from_sorted(f.order(), std::move(rest));
}

namespace {

struct PairKey {
  Monomial lcm;
  std::size_t seq, i, j;
};

}  // namespace

std::vector<FieldPoly> buchberger_reduced(const std::vector<FieldPoly>& generators, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::vector<FieldPoly> G;
  OrderPtr order;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    order = f.order();
    FieldPoly r = make_monic(normal_form(f, G));
    if (r.is_zero()) continue;
    if (r.is_constant()) return {FieldPoly::constant(order, Rational(1))};
    G.push_back(std::move(r));
  }
  if (G.empty()) return {};

  auto cmp = [&](const PairKey& a, const PairKey& b) {
    int c = order->compare(a.lcm, b.lcm);
    return c != 0 ? c < 0 : a.seq < b.seq;
  };
  std::set<PairKey, decltype(cmp)> queue(cmp);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t seq = 0;
  auto push = [&](std::size_t i, std::size_t j) {
    queue.insert({mono_lcm(G[i].lm(), G[j].lm()), seq++, i, j});
    pending.insert({i, j});
    ++st.pairs;
  };
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push(i, j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    if (mono_coprime(G[pk.i].lm(), G[pk.j].lm())) {
      ++st.criterion_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pk.i || k == pk.j || !mono_divides(G[k].lm(), pk.lcm)) continue;
      chain = !is_pending(pk.i, k) && !is_pending(pk.j, k);
    }
    if (chain) {
      ++st.criterion_skips;
      continue;
    }
    ++st.reductions;
    FieldPoly r = make_monic(normal_form(spoly_field(G[pk.i], G[pk.j]), G));
    if (r.is_zero()) continue;
    if (r.is_constant()) return {FieldPoly::constant(order, Rational(1))};
    G.push_back(std::move(r));
    for (std::size_t i = 0; i + 1 < G.size(); ++i) push(i, G.size() - 1);
  }

  // Minimal basis, then inter-reduction.
  std::vector<FieldPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || !mono_divides(G[k].lm(), G[i].lm())) continue;
      redundant = G[k].lm() != G[i].lm() || k < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<FieldPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FieldPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    FieldPoly t = normal_form(minimal[i].tail(), others);
    reduced.push_back(make_monic(FieldPoly::term(order, minimal[i].lc(), minimal[i].lm()) + t));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const FieldPoly& a, const FieldPoly& b) { return order->greater(a.lm(), b.lm()); });
  return reduced;
}

bool is_zero_dimensional(const std::vector<FieldPoly>& gb) {
  if (gb.empty()) return false;
  std::size_t n = gb.front().arity();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& g : gb) {
      const Monomial& m = g.lm();
      bool pure = true;
      for (std::size_t k = 0; k < n && pure; ++k) pure = (k == v) ? true : m[k] == 0;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

FieldPoly reorder(const FieldPoly& f, const OrderPtr& order) {
  ZDGB_CHECK(order->arity() == f.arity(), "reorder: arity mismatch");
  std::vector<FieldPoly::Term> terms(f.terms().begin(), f.terms().end());
  return FieldPoly(order, std::move(terms));
}

UPoly to_univariate(const FieldPoly& f, std::size_t var) {
  std::vector<Rational> coeffs;
  for (const auto& t : f.terms()) {
    for (std::size_t k = 0; k < t.mono.arity(); ++k)
      if (k != var && t.mono[k] != 0) throw InputError("polynomial involves more than one variable");
    std::size_t d = t.mono[var];
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] += t.coeff;
  }
  return UPoly::from_coeffs(std::move(coeffs));
}

UPoly eliminant_oracle(const std::vector<FieldPoly>& generators, std::vector<FieldPoly>* gb_out) {
  if (generators.empty()) throw InputError("no generators");
  const OrderPtr& given = generators.front().order();
  std::size_t n = given->arity();
  OrderPtr elim = std::make_shared<const MonomialOrder>(given->kind(), given->precedence(), true);
  ZDGB_CHECK(given->precedence().back() == n - 1, "the eliminated variable must be least in the precedence");
  std::vector<FieldPoly> F;
  for (const auto& f : generators) F.push_back(reorder(f, elim));
  std::vector<FieldPoly> gb = buchberger_reduced(F);
  if (gb_out) *gb_out = gb;
  if (gb.size() == 1 && gb.front().is_constant()) return UPoly(1);
  for (const auto& g : gb) {
    bool univariate = true;
    for (std::size_t k = 0; k + 1 < n && univariate; ++k) univariate = g.lm()[k] == 0;
    if (univariate) return to_univariate(g, n - 1).monic();
  }
  throw NotZeroDimensional("the ideal has no nonzero univariate element in the eliminated variable");
}

FieldPoly integer_normalize(const FieldPoly& f) {
  if (f.is_zero()) return f;
  mpz_class den = 1, num = 0;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (const auto& t : f.terms()) {
    mpz_class v = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(f.lc()) < 0) scale = -scale;
  return f.scale(scale);
}

}  // namespace zdgb
