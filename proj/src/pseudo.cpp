#include "zdgb/pseudo.hpp"

#include <set>
#include <utility>

#include "zdgb/errors.hpp"

namespace zdgb {

namespace {

struct QueuedPair {
  Monomial lcm;
  std::size_t seq;
  std::size_t i, j;
};

struct PairOrder {
  const MonomialOrder* order;
  bool operator()(const QueuedPair& a, const QueuedPair& b) const {
    int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

// Records p in Lambda unless every irreducible factor of p already divides a recorded multiplier.
void record_multiplier(std::vector<UPoly>& lambda, const UPoly& p) {
  if (p.is_constant()) return;
  UPoly rest = p.monic();
  for (const auto& l : lambda) {
    rest = strip_common_factors(rest, l);
    if (rest.is_constant()) return;
  }
  lambda.push_back(p.monic());
}

}  // namespace

RPoly normalize_rational(const RPoly& f) {
  if (f.is_zero()) return f;
  const Rational& lead = f.lc().leading();
  if (lead == 1) return f;
  return f.scale(UPoly(Rational(1 / lead)));
}

TermReduction term_pseudo_reduce(const RPoly& f, const RPoly& g, const Monomial& target) {
  const UPoly* c = f.find(target);
  if (c == nullptr) throw InputError("term pseudo-reduction: target monomial not in the support");
  if (g.is_zero() || !mono_divides(g.lm(), target))
    throw InputError("term pseudo-reduction: target not divisible by the divisor's leading monomial");
  UPoly m = lcm(*c, g.lc());
  TermReduction t{RPoly(f.order()), exact_div(m, *c), exact_div(m, g.lc()), target / g.lm()};
  t.h = RPoly::combine(t.mu, f, t.cofactor, t.shift, g);
  return t;
}

bool is_pseudo_reduced(const RPoly& f, const std::vector<RPoly>& divisors) {
  auto lms = leading_monomials(divisors);
  for (const auto& t : f.terms())
    if (monomial_ideal_member(t.mono, lms)) return false;
  return true;
}

PseudoDivision pseudo_divide(const RPoly& f, const std::vector<RPoly>& divisors, bool track_quotients) {
  for (const auto& b : divisors) ZDGB_CHECK(!b.is_constant(), "pseudo-division by a polynomial without x~ terms");
  PseudoDivision out{UPoly(1), {}, f, 0};
  if (track_quotients) out.quotients.assign(divisors.size(), RPoly(f.order()));
  // Terms above the last reduced one keep their monomials, so the scan resumes below it.
  std::size_t start = 0;
  for (;;) {
    const auto& terms = out.remainder.terms();
    std::size_t pos = start, which = divisors.size();
    for (; pos < terms.size(); ++pos) {
      for (std::size_t k = 0; k < divisors.size(); ++k) {
        if (mono_divides(divisors[k].lm(), terms[pos].mono)) {
          which = k;
          break;
        }
      }
      if (which != divisors.size()) break;
    }
    if (which == divisors.size()) return out;
    Monomial target = terms[pos].mono;
    TermReduction t = term_pseudo_reduce(out.remainder, divisors[which], target);
    if (track_quotients) {
      for (auto& q : out.quotients) q = q.scale(t.mu);
      out.quotients[which] += RPoly::term(f.order(), t.cofactor, t.shift);
    }
    out.multiplier *= t.mu;
    out.remainder = std::move(t.h);
    ++out.steps;
    start = pos;
  }
}

RPoly spoly(const RPoly& f, const RPoly& g) {
  ZDGB_CHECK(!f.is_constant() && !g.is_constant(), "S-polynomial of a polynomial without x~ terms");
  Monomial gamma = mono_lcm(f.lm(), g.lm());
  UPoly m = lcm(f.lc(), g.lc());
  return f.mul_term(exact_div(m, f.lc()), gamma / f.lm()) - g.mul_term(exact_div(m, g.lc()), gamma / g.lm());
}

RPoly spoly_univariate(const RPoly& f, const UPoly& g) {
  ZDGB_CHECK(!f.is_constant() && !g.is_zero(), "special S-polynomial preconditions");
  UPoly m = lcm(f.lc(), g);
  return f.scale(exact_div(m, f.lc())) - RPoly::term(f.order(), m, f.lm());
}

UPoly coprime_criterion(const RPoly& f, const RPoly& g) {
  if (!mono_coprime(f.lm(), g.lm())) throw InputError("coprime criterion: leading monomials share a variable");
  return gcd_monic(f.lc(), g.lc());
}

UPoly triangular_criterion(const RPoly& f, const RPoly& g, const RPoly& h) {
  if (!mono_divides(h.lm(), mono_lcm(f.lm(), g.lm())))
    throw InputError("triangular criterion: lcm of leading monomials not divisible by lm(h)");
  return exact_div(h.lc().monic(), gcd_monic(lcm(f.lc(), g.lc()), h.lc()));
}

PseudoResult pseudo_eliminant(const std::vector<RPoly>& generators) {
  PseudoResult res;
  std::vector<RPoly>& G = res.basis;
  UPoly f0;
  OrderPtr order;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    order = f.order();
    if (f.is_constant()) {
      if (f.lc().is_constant()) {
        res.trivial = true;
      } else {
        f0 = gcd_monic(f0, f.lc());
        if (f0.is_constant()) res.trivial = true;
      }
    } else {
      G.push_back(f);
    }
  }
  if (!order) throw InputError("the generator list contains only zero polynomials");
  if (res.trivial) {
    res.chi_eps = UPoly(1);
    return res;
  }

  std::set<QueuedPair, PairOrder> queue(PairOrder{order.get()});
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t seq = 0;
  auto push = [&](std::size_t i, std::size_t j) {
    queue.insert({mono_lcm(G[i].lm(), G[j].lm()), seq++, i, j});
    pending.insert({i, j});
    ++res.stats.pairs;
  };
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push(i, j);

  while (!queue.empty()) {
    QueuedPair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const RPoly& f = G[pr.i];
    const RPoly& g = G[pr.j];

    if (mono_coprime(f.lm(), g.lm())) {
      record_multiplier(res.multipliers, coprime_criterion(f, g));
      ++res.stats.coprime_skips;
      continue;
    }
    // Triangle: h is eligible once both of its pairs with f and g have been resolved.
    bool skipped = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == pr.i || k == pr.j || !mono_divides(G[k].lm(), pr.lcm)) continue;
      if (is_pending(pr.i, k) || is_pending(pr.j, k)) continue;
      record_multiplier(res.multipliers, triangular_criterion(f, g, G[k]));
      skipped = true;
      break;
    }
    if (skipped) {
      ++res.stats.triangle_skips;
      continue;
    }

    ++res.stats.spolys;
    PseudoDivision div = pseudo_divide(spoly(f, g), G);
    res.stats.reduction_steps += div.steps;
    record_multiplier(res.multipliers, div.multiplier);
    RPoly& r = div.remainder;
    if (r.is_zero()) {
      ++res.stats.zero_remainders;
      continue;
    }
    if (r.is_constant()) {
      if (r.lc().is_constant()) {
        res.trivial = true;
        res.chi_eps = UPoly(1);
        return res;
      }
      f0 = gcd_monic(f0, r.lc());
      if (f0.is_constant()) {
        res.trivial = true;
        res.chi_eps = UPoly(1);
        return res;
      }
      continue;
    }
    ZDGB_CHECK(!monomial_ideal_member(r.lm(), leading_monomials(G)), "monomial ideal of the basis did not grow");
    G.push_back(normalize_rational(r));
    for (std::size_t i = 0; i + 1 < G.size(); ++i) push(i, G.size() - 1);
  }

  if (f0.is_zero()) throw NotZeroDimensional("the ideal is not zero-dimensional (no univariate element found)");
  res.chi_eps = f0.monic();
  for (const auto& f : G) record_multiplier(res.multipliers, gcd_monic(f.lc(), res.chi_eps));
  return res;
}

}  // namespace zdgb
