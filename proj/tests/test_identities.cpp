#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "identities.hpp"

namespace {
void require_clean(const zt::IdentityResult& r) {
  INFO(r.name << ": " << r.failures << " failures, first: " << r.first_failure);
  CHECK(r.instances >= 1000);
  CHECK(r.failures == 0);
}
}  // namespace

TEST_CASE("pseudo-division") { require_clean(zt::check_pseudo_division(1000, 101)); }
TEST_CASE("proper division") { require_clean(zt::check_proper_division(1000, 102)); }
TEST_CASE("S-polynomial with a univariate element") { require_clean(zt::check_univariate_spoly(1000, 103)); }
TEST_CASE("coprime S-polynomials") { require_clean(zt::check_coprime_spoly(1000, 104)); }
TEST_CASE("triangular identity") { require_clean(zt::check_triangle_identity(1000, 105)); }
TEST_CASE("coprime S-polynomials over R_q") { require_clean(zt::check_coprime_spoly_pqr(1000, 106)); }
TEST_CASE("triangular identity over R_q") { require_clean(zt::check_triangle_identity_pqr(1000, 107)); }
TEST_CASE("syzygy over K[x1]") { require_clean(zt::check_syzygy(1000, 108)); }
TEST_CASE("syzygy over R_q") { require_clean(zt::check_syzygy_pqr(1000, 109)); }
