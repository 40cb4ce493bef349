#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace zdgb;

namespace {
UPoly z() { return UPoly::x(); }
}  // namespace

TEST_CASE("residues are canonical") {
  auto ctx = make_pqr(z().pow(2) * Rational(3) - UPoly(3));
  CHECK(ctx->modulus() == z().pow(2) - UPoly(1));
  PqrElem a(ctx, z().pow(3));
  CHECK(a.rep() == z());
  CHECK(lift(a) == z());
  CHECK(PqrElem(ctx, z().pow(2)) == PqrElem(ctx, UPoly(1)));
  CHECK((a * a).rep() == UPoly(1));
  CHECK_THROWS_AS(make_pqr(UPoly(7)), InputError);
}

TEST_CASE("arithmetic is a ring homomorphism from K[x1]") {
  zt::Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    auto ctx = make_pqr(zt::rand_nonconstant(rng, 5));
    UPoly a = zt::rand_upoly(rng, 9), b = zt::rand_upoly(rng, 9);
    PqrElem pa = project(ctx, a), pb = project(ctx, b);
    CHECK(pa + pb == project(ctx, a + b));
    CHECK(pa - pb == project(ctx, a - b));
    CHECK(pa * pb == project(ctx, a * b));
    CHECK(-pa == project(ctx, -a));
    CHECK(lift(pa).degree() < ctx->degree());
    CHECK(divides(ctx->modulus(), a - lift(pa)));
  }
}

TEST_CASE("mixing rings is an internal error") {
  auto c1 = make_pqr(z()), c2 = make_pqr(z() + UPoly(1));
  CHECK_THROWS_AS(PqrElem(c1, UPoly(1)) + PqrElem(c2, UPoly(1)), InternalError);
}

TEST_CASE("units, inverses and standard representatives") {
  UPoly q = z().pow(2) * (z() - UPoly(1)).pow(2);
  auto ctx = make_pqr(q);
  CHECK(is_unit(PqrElem(ctx, z() + UPoly(1))));
  CHECK_FALSE(is_unit(PqrElem(ctx, z().pow(3))));
  CHECK_THROWS_AS(inverse(PqrElem(ctx, z())), std::domain_error);
  CHECK(standard_rep(PqrElem(ctx, z().pow(3))) == PqrElem(ctx, z().pow(2)));
  CHECK(gcd_with_modulus(PqrElem(ctx, UPoly())) == q);
  CHECK_THROWS_AS(standard_rep(PqrElem(ctx, UPoly())), std::domain_error);

  zt::Rng rng(22);
  for (int k = 0; k < 300; ++k) {
    UPoly base = zt::rand_nonconstant(rng, 2);
    UPoly mod = base.pow(static_cast<unsigned>(zt::rand_int(rng, 1, 3))) * zt::rand_nonconstant(rng, 2);
    auto c = make_pqr(mod);
    PqrElem a = project(c, zt::rand_upoly(rng, 6) * base);
    if (a.is_zero()) continue;
    PqrElem s = standard_rep(a);
    CHECK(lift(s) == gcd_monic(lift(a), c->modulus()));
    PqrElem u = unit_normalizer(a);
    CHECK(is_unit(u));
    CHECK(u * a == s);
    CHECK(is_associate(a, s));
    CHECK(is_associate(a * u, a));
    PqrElem v = project(c, zt::rand_upoly(rng, 4, 5, true));
    if (is_unit(v)) {
      CHECK(inverse(v) * v == project(c, UPoly(1)));
      CHECK(standard_rep(v) == project(c, UPoly(1)));
    }
  }
}

TEST_CASE("polynomial projection and leading coefficient normalization") {
  auto ord = make_order(OrderKind::Lex, 2);
  auto ctx = make_pqr(z().pow(3));
  RPoly f(ord, {{Monomial{1, 0}, z().pow(4) * Rational(5)}, {Monomial{0, 1}, z() * Rational(2) + UPoly(6)},
                {Monomial{0, 0}, z().pow(3)}});
  QPoly p = project(ctx, f);
  CHECK(p.size() == 1);
  CHECK(p.lm() == Monomial{0, 1});
  QPoly n = normalize_lc(p);
  CHECK(n.lc() == standard_rep(p.lc()));
  CHECK(is_unit(n.lc()));
  CHECK(lift(n).lc() == UPoly(1));

  RPoly g(ord, {{Monomial{1, 0}, z().pow(2) * Rational(3) + z().pow(3)}});
  QPoly ng = normalize_lc(project(ctx, g));
  CHECK(lift(ng).lc() == z().pow(2));
}
