#include "zdgb/proper.hpp"

#include <set>
#include <utility>

#include "zdgb/errors.hpp"

namespace zdgb {

PqrElem interim_multiplier(const PqrElem& c, const QPoly& g) {
  UPoly l = lcm(c.rep(), g.lc().rep());
  return PqrElem(c.ctx(), exact_div(l, c.rep()));
}

bool is_properly_reducible(const PqrElem& c, const Monomial& m, const QPoly& g) {
  return !c.is_zero() && !g.is_zero() && mono_divides(g.lm(), m) && is_unit(interim_multiplier(c, g));
}

ProperTermReduction proper_term_reduce(const QPoly& f, const QPoly& g, const Monomial& target) {
  const PqrElem* c = f.find(target);
  if (c == nullptr) throw InputError("proper reduction: target monomial not in the support");
  if (g.is_zero() || !mono_divides(g.lm(), target))
    throw InputError("proper reduction: target not divisible by the divisor's leading monomial");
  UPoly l = lcm(c->rep(), g.lc().rep());
  PqrElem mu(c->ctx(), exact_div(l, c->rep()));
  if (!is_unit(mu)) throw InputError("proper reduction: interim multiplier is not a unit");
  ProperTermReduction t{QPoly(f.order()), mu, PqrElem(c->ctx(), exact_div(l, g.lc().rep())), target / g.lm()};
  t.h = QPoly::combine(t.mu, f, t.cofactor, t.shift, g);
  return t;
}

bool is_properly_reduced(const QPoly& f, const std::vector<QPoly>& divisors) {
  for (const auto& t : f.terms())
    for (const auto& g : divisors)
      if (is_properly_reducible(t.coeff, t.mono, g)) return false;
  return true;
}

ProperDivision proper_divide(const PqrCtxPtr& ctx, const QPoly& f, const std::vector<QPoly>& divisors,
                             bool track_quotients) {
  for (const auto& g : divisors) ZDGB_CHECK(!g.is_constant(), "proper division by a polynomial without x~ terms");
  ProperDivision out{PqrElem(ctx, UPoly(1)), {}, f, 0};
  if (track_quotients) out.quotients.assign(divisors.size(), QPoly(f.order()));
  for (;;) {
    const auto& terms = out.remainder.terms();
    std::size_t pos = 0, which = divisors.size();
    for (; pos < terms.size() && which == divisors.size(); ++pos) {
      for (std::size_t k = 0; k < divisors.size(); ++k) {
        if (is_properly_reducible(terms[pos].coeff, terms[pos].mono, divisors[k])) {
          which = k;
          break;
        }
      }
    }
    if (which == divisors.size()) return out;
    Monomial target = terms[pos - 1].mono;
    ProperTermReduction t = proper_term_reduce(out.remainder, divisors[which], target);
    if (track_quotients) {
      for (auto& q : out.quotients) q = q.scale(t.mu);
      out.quotients[which] += QPoly::term(f.order(), t.cofactor, t.shift);
    }
    out.multiplier = out.multiplier * t.mu;
    out.remainder = std::move(t.h);
    ++out.steps;
  }
}

QPoly spoly_pqr(const QPoly& f, const QPoly& g) {
  ZDGB_CHECK(!f.is_constant() && !g.is_constant(), "S-polynomial of a polynomial without x~ terms");
  const UPoly& lf = f.lc().rep();
  const UPoly& lg = g.lc().rep();
  UPoly l = lcm(lf, lg);
  const PqrCtxPtr& ctx = f.lc().ctx();
  Monomial gamma = mono_lcm(f.lm(), g.lm());
  return f.mul_term(PqrElem(ctx, exact_div(l, lf)), gamma / f.lm()) -
         g.mul_term(PqrElem(ctx, exact_div(l, lg)), gamma / g.lm());
}

QPoly spoly_pqr(const QPoly& f, const PqrElem& e) {
  ZDGB_CHECK(!f.is_constant() && !e.is_zero(), "special S-polynomial preconditions");
  UPoly d = gcd_monic(f.lc().rep(), e.rep());
  return f.tail().scale(PqrElem(e.ctx(), exact_div(e.rep(), d)));
}

QPoly spoly_pqr_modulus(const QPoly& f) {
  ZDGB_CHECK(!f.is_constant(), "special S-polynomial of a polynomial without x~ terms");
  const auto& ctx = f.lc().ctx();
  const UPoly& lf = f.lc().rep();
  return f.tail().scale(PqrElem(ctx, exact_div(lcm(lf, ctx->modulus()), lf)));
}

PqrElem coprime_criterion_pqr(const QPoly& f, const QPoly& g) {
  if (!mono_coprime(f.lm(), g.lm())) throw InputError("coprime criterion: leading monomials share a variable");
  return PqrElem(f.lc().ctx(), gcd_monic(f.lc().rep(), g.lc().rep()));
}

PqrElem triangular_criterion_pqr(const QPoly& f, const QPoly& g, const QPoly& h) {
  if (!mono_divides(h.lm(), mono_lcm(f.lm(), g.lm())))
    throw InputError("triangular criterion: lcm of leading monomials not divisible by lm(h)");
  const UPoly& lh = h.lc().rep();
  UPoly d = gcd_monic(lcm(f.lc().rep(), g.lc().rep()), lh);
  return PqrElem(h.lc().ctx(), exact_div(lh, d));
}

namespace {

struct Item {
  Monomial key;
  std::size_t seq;
  std::size_t i, j;               // pair indices when `special` is empty
  std::optional<QPoly> special;  // precomputed S(f, q) or S(f, e)
};

struct ItemOrder {
  const MonomialOrder* order;
  bool operator()(const Item& a, const Item& b) const {
    int c = order->compare(a.key, b.key);
    if (c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

class ProperRun {
 public:
  ProperRun(const PqrCtxPtr& ctx, std::size_t max_iter) : ctx_(ctx), e_(ctx, UPoly()), max_iter_(max_iter) {}

  ProperResult run(const std::vector<QPoly>& input) {
    for (const auto& f0 : input) {
      QPoly f = f0.transform<PqrElem>([&](const PqrElem& c) { return PqrElem(ctx_, c.rep()); });
      if (f.is_zero()) continue;
      if (f.is_constant()) {
        if (absorb_constant(f.lc())) return finish_unit();
        continue;
      }
      if (!order_) order_ = f.order();
      basis_.push_back(normalize_lc(f));
    }
    if (basis_.empty()) {
      if (e_.is_zero()) throw InputError("proper eliminant: no nonzero input polynomial");
      return finish();
    }
    queue_.emplace(ItemOrder{order_.get()});
    for (std::size_t j = 1; j < basis_.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    for (;;) {
      while (!queue_->empty()) {
        if (++stats_.iterations > max_iter_)
          throw InternalError("proper eliminant exceeded the iteration cap (" + std::to_string(max_iter_) + ")");
        Item it = std::move(queue_->extract(queue_->begin()).value());
        std::optional<QPoly> s;
        if (it.special) {
          s = std::move(it.special);
        } else {
          pending_.erase({it.i, it.j});
          s = pair_spoly(it.i, it.j, it.key);
          if (!s) continue;
          ++stats_.spolys;
        }
        ProperDivision div = proper_divide(ctx_, *s, basis_);
        stats_.reduction_steps += div.steps;
        ZDGB_CHECK(is_unit(div.multiplier), "proper division multiplier is not a unit");
        QPoly& r = div.remainder;
        if (r.is_zero()) continue;
        if (r.is_constant()) {
          if (absorb_constant(r.lc())) return finish_unit();
          continue;
        }
        basis_.push_back(normalize_lc(r));
        for (std::size_t i = 0; i + 1 < basis_.size(); ++i) push_pair(i, basis_.size() - 1);
      }
      if (!enqueue_special()) break;
    }
    return finish();
  }

 private:
  // Returns true when c is a unit (the ideal is the whole ring).
  bool absorb_constant(const PqrElem& c) {
    if (is_unit(c)) return true;
    UPoly g = gcd_with_modulus(c);
    if (e_.is_zero()) {
      e_ = PqrElem(ctx_, g);
      ++stats_.e_refinements;
      return false;
    }
    UPoly d = gcd_monic(g, e_.rep());
    if (d != e_.rep()) {
      ZDGB_CHECK(d.degree() < e_.rep().degree(), "proper eliminant refinement is not ascending");
      e_ = PqrElem(ctx_, d);
      ++stats_.e_refinements;
      if (d.is_constant()) return true;
    }
    return false;
  }

  void push_pair(std::size_t i, std::size_t j) {
    queue_->insert(Item{mono_lcm(basis_[i].lm(), basis_[j].lm()), seq_++, i, j, std::nullopt});
    pending_.insert({i, j});
  }

  bool is_pending(std::size_t a, std::size_t b) const { return pending_.count({std::min(a, b), std::max(a, b)}) > 0; }

  std::optional<QPoly> pair_spoly(std::size_t i, std::size_t j, const Monomial& lcm_lm) {
    const QPoly& f = basis_[i];
    const QPoly& g = basis_[j];
    if (mono_coprime(f.lm(), g.lm())) {
      if (is_unit(coprime_criterion_pqr(f, g))) return std::nullopt;
      return spoly_pqr(f, g);
    }
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == i || k == j || !mono_divides(basis_[k].lm(), lcm_lm)) continue;
      if (is_pending(i, k) || is_pending(j, k)) continue;
      if (is_unit(triangular_criterion_pqr(f, g, basis_[k]))) return std::nullopt;
    }
    return spoly_pqr(f, g);
  }

  bool enqueue_special() {
    bool added = false;
    for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
      const QPoly& f = basis_[idx];
      if (is_unit(f.lc())) continue;
      std::optional<QPoly> s;
      if (e_.is_zero()) {
        if (!beheaded_.insert(idx).second) continue;
        s = spoly_pqr_modulus(f);
      } else {
        UPoly d = gcd_monic(f.lc().rep(), e_.rep());
        if (d.is_constant()) continue;
        if (!special_done_.insert({idx, e_.rep()}).second) continue;
        s = spoly_pqr(f, e_);
      }
      ++stats_.special_spolys;
      queue_->insert(Item{f.lm(), seq_++, idx, idx, std::move(s)});
      added = true;
    }
    return added;
  }

  ProperResult finish_unit() {
    e_ = PqrElem(ctx_, UPoly(1));
    return finish();
  }

  ProperResult finish() { return ProperResult{e_, std::move(basis_), stats_}; }

  PqrCtxPtr ctx_;
  OrderPtr order_;
  PqrElem e_;
  std::size_t max_iter_;
  std::vector<QPoly> basis_;
  std::optional<std::set<Item, ItemOrder>> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::set<std::size_t> beheaded_;
  std::set<std::pair<std::size_t, UPoly>> special_done_;
  std::size_t seq_ = 0;
  ProperStats stats_;
};

}  // namespace

ProperResult proper_eliminant(const std::vector<QPoly>& F, const PqrCtxPtr& ctx, std::size_t max_iter) {
  return ProperRun(ctx, max_iter).run(F);
}

}  // namespace zdgb
