#include "zdgb/bench.hpp"

#include <algorithm>
#include <sstream>

#include "zdgb/errors.hpp"

namespace zdgb {

void OpCounter::observe(const UPoly& p) {
  for (const auto& c : p.coeffs()) max_coeff_bits = std::max(max_coeff_bits, bit_size(c));
}

namespace {

// Schoolbook univariate arithmetic that charges every coefficient operation to a counter.
class Counted {
 public:
  explicit Counted(OpCounter& c) : c_(c) {}

  UPoly mul(const UPoly& a, const UPoly& b) {
    std::size_t na = a.term_count(), nb = b.term_count();
    c_.mults += na * nb;
    c_.adds += na * nb;
    return seen(a * b);
  }
  UPoly scale(const UPoly& a, const Rational& s) {
    c_.mults += a.term_count();
    return seen(a * s);
  }
  UPoly sub(const UPoly& a, const UPoly& b) {
    c_.adds += std::min(a.term_count(), b.term_count());
    return seen(a - b);
  }
  UPoly add(const UPoly& a, const UPoly& b) {
    c_.adds += std::min(a.term_count(), b.term_count());
    return seen(a + b);
  }
  DivRem divrem(const UPoly& a, const UPoly& b) {
    int steps = std::max(0, a.degree() - b.degree() + 1);
    std::size_t nb = b.term_count();
    c_.mults += static_cast<std::size_t>(steps) * (nb + 1);
    c_.adds += static_cast<std::size_t>(steps) * nb;
    DivRem dr = zdgb::divrem(a, b);
    seen(dr.quotient);
    seen(dr.remainder);
    return dr;
  }
  UPoly monic(const UPoly& a) { return scale(a, Rational(1 / a.leading())); }
  UPoly exact_div(const UPoly& a, const UPoly& b) {
    DivRem dr = divrem(a, b);
    ZDGB_CHECK(dr.remainder.is_zero(), "inexact division in bench");
    return dr.quotient;
  }
  UPoly gcd(UPoly a, UPoly b) {
    ++c_.gcd_calls;
    while (!b.is_zero()) {
      UPoly r = divrem(a, b).remainder;
      a = std::move(b);
      b = r.is_zero() ? r : monic(r);
    }
    return monic(a);
  }
  RPoly mul_coeff(const RPoly& f, const UPoly& c, const Monomial& shift) {
    std::vector<RPoly::Term> out;
    for (const auto& t : f.terms()) out.push_back({t.mono * shift, mul(t.coeff, c)});
    return RPoly(f.order(), std::move(out));
  }
  RPoly sub(const RPoly& f, const RPoly& g) {
    for (const auto& t : g.terms())
      if (const UPoly* c = f.find(t.mono)) c_.adds += std::min(c->term_count(), t.coeff.term_count());
    RPoly r = f - g;
    for (const auto& t : r.terms()) c_.observe(t.coeff);
    return r;
  }
  RPoly add(const RPoly& f, const RPoly& g) { return sub(f, -g); }

 private:
  UPoly seen(UPoly p) {
    c_.observe(p);
    return p;
  }
  OpCounter& c_;
};

}  // namespace

SpolyComparison compare_spoly(const RPoly& f, const RPoly& g) {
  ZDGB_CHECK(!f.is_constant() && !g.is_constant(), "bench pair must be non-constant in x~");
  SpolyComparison out{{}, {}, RPoly(f.order()), RPoly(f.order()), UPoly(), Rational(0), 0};
  const UPoly& a = f.lc();
  const UPoly& b = g.lc();
  Monomial gamma = mono_lcm(f.lm(), g.lm());
  Monomial sa = gamma / f.lm(), sb = gamma / g.lm();
  RPoly f1 = f.tail(), g1 = g.tail();

  {
    Counted k(out.fresh);
    UPoly rho = k.gcd(a, b);
    UPoly lambda = k.exact_div(b, rho);
    UPoly mu = k.exact_div(a, rho);
    out.s = k.sub(k.mul_coeff(f1, lambda, sa), k.mul_coeff(g1, mu, sb));
  }

  {
    Counted k(out.classical);
    Rational la = a.leading(), lb = b.leading();
    out.lc_product = la * lb;
    UPoly ap = k.monic(a), bp = k.monic(b);
    // f1 / lc(a) and g1 / lc(b) shifted to x^gamma, as they enter every chain element
    RPoly F = k.mul_coeff(f1, UPoly(Rational(1 / la)), sa);
    RPoly G = k.mul_coeff(g1, UPoly(Rational(1 / lb)), sb);
    UPoly r0 = ap, r1 = bp, s0(1), s1, t0, t1(1);
    RPoly w = k.add(k.mul_coeff(G, t1, Monomial(f.arity())), RPoly::term(f.order(), r1, gamma));
    while (true) {
      DivRem dr = k.divrem(r0, r1);
      if (dr.remainder.is_zero()) break;
      Rational inv = 1 / dr.remainder.leading();
      UPoly r2 = k.scale(dr.remainder, inv);
      UPoly s2 = k.scale(k.sub(s0, k.mul(dr.quotient, s1)), inv);
      UPoly t2 = k.scale(k.sub(t0, k.mul(dr.quotient, t1)), inv);
      r0 = std::move(r1), r1 = std::move(r2);
      s0 = std::move(s1), s1 = std::move(s2);
      t0 = std::move(t1), t1 = std::move(t2);
      // the basis element the classical algorithm adds at this step
      w = k.add(k.add(k.mul_coeff(F, s1, Monomial(f.arity())), k.mul_coeff(G, t1, Monomial(f.arity()))),
                RPoly::term(f.order(), r1, gamma));
      ++out.chain_length;
    }
    out.bezout_t = t1;
    // x^(g-a) f / lc(a) - (a'/rho) w
    UPoly cof = k.exact_div(ap, r1);
    RPoly lhs = k.add(F, RPoly::term(f.order(), ap, gamma));
    out.chain_result = k.sub(lhs, k.mul_coeff(w, cof, Monomial(f.arity())));
  }
  return out;
}

namespace {

long small_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

UPoly random_upoly(std::mt19937_64& rng, int degree, long bound) {
  std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
  for (auto& c : cs) c = small_int(rng, -bound, bound);
  while (is_zero(cs.back())) cs.back() = small_int(rng, -bound, bound);
  return UPoly::from_coeffs(std::move(cs));
}

}  // namespace

std::pair<RPoly, RPoly> bench_pair(unsigned m, std::mt19937_64& rng) {
  OrderPtr order = make_order(OrderKind::Lex, 2);
  int dc = static_cast<int>(m / 2), dr = static_cast<int>(m) - dc;
  UPoly c = random_upoly(rng, dc, 9);
  UPoly a = c * random_upoly(rng, dr, 9);
  UPoly b = c * random_upoly(rng, std::max(0, dr - 1), 9);
  std::vector<RPoly::Term> ft{{Monomial{2, 0}, a}}, gt{{Monomial{1, 1}, b}};
  for (unsigned j = 0; j < m; ++j) {
    // tails below the leading monomials x^2 and xy
    ft.push_back({Monomial{j % 2, j / 2}, random_upoly(rng, 2, 9)});
    gt.push_back({Monomial{0, j}, random_upoly(rng, 2, 9)});
  }
  return {RPoly(order, std::move(ft)), RPoly(order, std::move(gt))};
}

std::vector<BenchRow> bench_spoly_compare(const std::vector<unsigned>& ms, unsigned trials, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (unsigned m : ms) {
    if (m < 1) throw InputError("bench size parameter must be at least 1");
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * m));
    for (unsigned t = 0; t < trials; ++t) {
      auto [f, g] = bench_pair(m, rng);
      SpolyComparison cmp = compare_spoly(f, g);
      rows.push_back({m, t, "new", cmp.fresh});
      rows.push_back({m, t, "old", cmp.classical});
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "m,trial,method,gcd_calls,mults,adds,max_coeff_bits\n";
  for (const auto& r : rows)
    os << r.m << ',' << r.trial << ',' << r.method << ',' << r.ops.gcd_calls << ',' << r.ops.mults << ','
       << r.ops.adds << ',' << r.ops.max_coeff_bits << '\n';
  return os.str();
}

}  // namespace zdgb
