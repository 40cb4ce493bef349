#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zdgb/proper.hpp"

using namespace zdgb;

namespace {
UPoly z() { return UPoly::x(); }
}  // namespace

TEST_CASE("interim multipliers and term reduction") {
  auto ctx = make_pqr(z().pow(2) * (z() - UPoly(1)));
  auto ord = make_order(OrderKind::Lex, 1);
  QPoly g = project(ctx, RPoly(ord, {{Monomial{1}, z()}, {Monomial{0}, UPoly(1)}}));
  QPoly f = project(ctx, RPoly(ord, {{Monomial{2}, z() * (z() + UPoly(1))}}));
  PqrElem mu = interim_multiplier(f.lc(), g);
  CHECK(is_unit(mu));
  ProperTermReduction tr = proper_term_reduce(f, g, Monomial{2});
  CHECK(tr.h == f.scale(tr.mu) - g.mul_term(tr.cofactor, tr.shift));
  CHECK(tr.h.find(Monomial{2}) == nullptr);
  // A unit coefficient cannot be reduced by g with lc z: the multiplier would be z.
  QPoly u = project(ctx, RPoly(ord, {{Monomial{1}, UPoly(1)}}));
  CHECK_FALSE(is_properly_reducible(u.lc(), u.lm(), g));
  CHECK_THROWS_AS(proper_term_reduce(u, g, Monomial{1}), InputError);
}

TEST_CASE("proper division edge cases") {
  auto ctx = make_pqr(z().pow(3));
  auto ord = make_order(OrderKind::GrevLex, 2);
  QPoly g = project(ctx, RPoly(ord, {{Monomial{1, 0}, z()}, {Monomial{0, 1}, UPoly(1)}}));
  QPoly reduced = project(ctx, RPoly(ord, {{Monomial{2, 0}, UPoly(1)}, {Monomial{0, 0}, UPoly(2)}}));
  ProperDivision pd = proper_divide(ctx, reduced, {g});
  CHECK(pd.multiplier == project(ctx, UPoly(1)));
  CHECK(pd.remainder == reduced);
  CHECK(is_properly_reduced(reduced, {g}));
  QPoly m = g * project(ctx, RPoly(ord, {{Monomial{0, 1}, z() + UPoly(1)}}));
  CHECK(proper_divide(ctx, m, {g}).remainder.is_zero());
}

TEST_CASE("special S-polynomials") {
  auto ctx = make_pqr(z().pow(4));
  auto ord = make_order(OrderKind::Lex, 2);
  QPoly f = project(ctx, RPoly(ord, {{Monomial{1, 0}, z()}, {Monomial{0, 1}, UPoly(3)}, {Monomial{0, 0}, z()}}));
  // S(f, q) = n_f (f - lt f) with n_f = z^3, and n_f kills lt f.
  QPoly sq = spoly_pqr_modulus(f);
  CHECK(sq == f.tail().scale(project(ctx, z().pow(3))));
  CHECK((f.lc() * project(ctx, z().pow(3))).is_zero());
  // S(f, e) with e = z^2: sigma(z^2 / gcd(z, z^2)) (f - lt f).
  QPoly se = spoly_pqr(f, project(ctx, z().pow(2)));
  CHECK(se == f.tail().scale(project(ctx, z())));
  QPoly g = project(ctx, RPoly(ord, {{Monomial{0, 2}, z().pow(2)}, {Monomial{0, 0}, UPoly(1)}}));
  CHECK(spoly_pqr(f, g) == f.mul_term(project(ctx, z()), Monomial{0, 2}) - g.mul_term(project(ctx, UPoly(1)), Monomial{1, 0}));
}

TEST_CASE("proper eliminant on small systems") {
  auto ord = make_order(OrderKind::Lex, 1);
  RPoly lin = RPoly(ord, {{Monomial{1}, UPoly(1)}, {Monomial{0}, -z()}});  // x - z
  RPoly sq = RPoly(ord, {{Monomial{2}, UPoly(1)}});                          // x^2
  RPoly sq1 = RPoly(ord, {{Monomial{2}, UPoly(1)}, {Monomial{0}, UPoly(-1)}});

  // <x - z, x^2> contains z^2.
  auto c3 = make_pqr(z().pow(3));
  ProperResult r3 = proper_eliminant({project(c3, lin), project(c3, sq)}, c3);
  CHECK(lift(r3.e) == z().pow(2));
  auto c2 = make_pqr(z().pow(2));
  CHECK(proper_eliminant({project(c2, lin), project(c2, sq)}, c2).e.is_zero());
  // <x - z, x^2 - 1> contains z^2 - 1, a unit modulo z^2.
  CHECK(proper_eliminant({project(c2, lin), project(c2, sq1)}, c2).e == project(c2, UPoly(1)));
  // A unit among the generators.
  CHECK(proper_eliminant({QPoly::constant(ord, project(c2, z() + UPoly(1)))}, c2).e == project(c2, UPoly(1)));
}

TEST_CASE("basis leading coefficients are standard representatives") {
  Problem p = zt::worked_example();
  PseudoResult pr = pseudo_eliminant(tilde_generators(p));
  auto ctx = make_pqr(z().pow(10));
  std::vector<QPoly> F;
  for (const auto& f : pr.basis) F.push_back(project(ctx, f));
  ProperResult r = proper_eliminant(F, ctx);
  CHECK(lift(r.e) == z().pow(6));
  for (const auto& f : r.basis) CHECK(f.lc() == standard_rep(f.lc()));
}
