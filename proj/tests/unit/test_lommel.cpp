#include "helpers.hpp"
#include "qlab/cfrac/cfrac.hpp"
#include "qlab/lommel/lommel.hpp"
#include "qlab/qseries/qseries.hpp"
#include "qlab/ring/series.hpp"

using namespace qlab;
using namespace qlab::lommel;
using th::Q;
using th::T;
using LP = LaurentPoly<RatFun>;

TEST_CASE("classical Lommel polynomials") {
  RatFun nu = RatFun::var(Var::nu), one(1);
  CHECK(lommel_classical(0, nu) == LP(one));
  CHECK(lommel_classical(1, nu) == LP(-1, {RatFun(2) * nu}));
  CHECK(lommel_classical(2, nu) == LP(-2, {RatFun(4) * nu * (nu + one), RatFun(0), RatFun(-1)}));
}

TEST_CASE("q-Lommel polynomials") {
  RatFun one(1);
  CHECK(lommel_q(0, 0, Base::q).value() == LP(one));
  CHECK(lommel_q(1, 0, Base::q).value() == LP(-1, {one - T(), RatFun(0), one}));
  CHECK(lommel_q(2, 0, Base::q).value() ==
        LP(-2, {(one - T()) * (one - T() * Q()), RatFun(0), one - T() - T() * Q(), RatFun(0), one}));
}

TEST_CASE("modified q-Lommel in the shifted instance") {
  auto m0 = modified_lommel(0, 1);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0] == RatFun(1));
  auto m1 = modified_lommel(1, 1);
  REQUIRE(m1.size() == 2);
  CHECK(m1[1] == RatFun(1));
  CHECK(m1[0] == -(T() * Q()) / (RatFun(1) - T() * Q()));
}

TEST_CASE("type R_I polynomials") {
  RISpec<Rational> zero{[](unsigned) { return Rational(0); }, [](unsigned) { return Rational(0); },
                        [](unsigned) { return Rational(0); }};
  auto p = ri_poly_seq(zero, 4);
  for (unsigned n = 0; n <= 4; ++n) {
    REQUIRE(p[n].size() == n + 1);
    CHECK(p[n][n] == Rational(1));
    CHECK(ri_star(p[n])[0] == Rational(1));
    for (unsigned i = 0; i < n; ++i) CHECK(p[n][i] == Rational(0));
  }
  RISpec<Rational> s{[](unsigned n) { return Rational(static_cast<long>(n) + 2); },
                     [](unsigned) { return Rational(3); }, [](unsigned) { return Rational(5); }};
  auto p1 = ri_poly_seq(s, 1)[1];
  CHECK(p1 == Poly<Rational>{Rational(-2), Rational(1)});
  CHECK(ri_star(p1) == Poly<Rational>{Rational(1), Rational(-2)});
}

TEST_CASE("shape series leading term") {
  auto s = lommel_shape_series(1, 5);
  CHECK(s[0].is_zero());
  // Every one-column shape: sum over r >= 1 of t^{r+1} q^r.
  CHECK(s[2] == T() * T() * Q() / (RatFun(1) - Q() * T()));
  CHECK(ring::to_series_in(s[2], Var::q, 3)[1] == T() * T());
}

TEST_CASE("m = 0 ratio is a single-level fraction") {
  auto r = lommel_ratio_series(0, 7);
  CHECK(r[1] == -(Q() * T()) / (RatFun(1) - Q() * T()));
  // a z/(1 + b z^2) expanded: coefficients in geometric progression.
  REQUIRE_FALSE(r[3].is_zero());
  CHECK(r[3] * r[3] == r[1] * r[5]);
}

TEST_CASE("ratio stabilization") {
  auto full = qseries::hahn_exton_ratio(13);
  for (unsigned m = 0; m <= 5; ++m) {
    auto r = lommel_ratio_series(m, 13);
    for (unsigned n = 0; n <= m && 2 * n + 1 < 13; ++n) CHECK(r[2 * n + 1] == full[2 * n + 1]);
  }
}

TEST_CASE("lommel suite") { th::require_clean(check_lommel(6, 13)); }
