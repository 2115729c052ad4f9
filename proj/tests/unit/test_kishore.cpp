#include "helpers.hpp"
#include "qlab/kishore/kishore.hpp"

using namespace qlab;
using namespace qlab::kishore;
using th::P;
using th::Q;
using th::T;

TEST_CASE("Hahn-Exton mu values") {
  auto mu = mu_hahn(3).values;
  CHECK(mu[0] == RatFun(1));
  CHECK(mu[1] == T() / (bracket(1) * bracket(2)));
  CHECK(mu[2] == T() * T() * (RatFun(1) + T() * Q() * Q()) / (bracket(1) * bracket(1) * bracket(2) * bracket(3)));
  auto oracle = theta_ratio_hahn(8);
  auto rec = mu_hahn(8).values;
  for (std::size_t n = 0; n < 8; ++n) CHECK(rec[n] == oracle[n]);
}

TEST_CASE("beta certificates") {
  auto beta = beta_hahn(13);
  CHECK(beta[0].poly == MultiPoly(1));
  CHECK(beta[1].poly == MultiPoly(1));
  CHECK(beta[2].poly == MultiPoly(1) + P(Var::q, 2) * P(Var::t));
  for (const auto& b : beta) {
    INFO("n=" << b.n);
    CHECK(b.nonneg);
    CHECK(b.poly.all_coefficients_nonnegative());
  }
  auto mu = mu_hahn(13).values;
  for (unsigned n = 0; n < 13; ++n) CHECK(mu_from_beta(beta[n].poly, n, T()) == mu[n]);
}

TEST_CASE("classical limit of beta_2") { CHECK(classical_limit(beta_hahn(3)[2].poly) == MultiPoly(2)); }

TEST_CASE("mirror relations at small n") {
  auto inv = mu_hahn_inverse(2).values;
  CHECK(inv[0] == RatFun(1));
  CHECK(inv[1] == Q() * T() / (bracket(1) * bracket(2)));
  auto j = mu_jackson(3).values, ji = mu_jackson_inverse(3).values;
  CHECK(j[0] == ji[0]);
  CHECK(j[2] == Q() * Q() * ji[2]);
}

TEST_CASE("Jackson mu values") {
  auto mu = mu_jackson(3).values;
  CHECK(mu[0] == RatFun(1));
  CHECK(mu[1] == Q() * T() / (bracket(1) * bracket(2)));
  CHECK(mu[2] == Q() * Q() * T() * T() * (RatFun(1) + Q()) / (bracket(1) * bracket(1) * bracket(2) * bracket(3)));
}

TEST_CASE("d exponents") {
  CHECK(d_exponents(1) == std::vector<int>{2, 1});
  CHECK(d_exponents(0) == std::vector<int>{1});
  CHECK_THROWS(bracket_product({-1}));
}

TEST_CASE("epsilon maps u to [nu]_q") {
  CHECK(epsilon(P(Var::u)) == (RatFun(1) - T()) / (RatFun(1) - Q()));
  CHECK(classical_limit(P(Var::u) * P(Var::q) + P(Var::t)) == P(Var::nu) + MultiPoly(1));
}

TEST_CASE("finite Kishore exponent") {
  CHECK(finite_kishore_exponent(3, 2, 1) == 1);
}

TEST_CASE("classical ratio reproduces tan at nu = -1/2") {
  // Series in w = z/2: tan(2w) = 2w + 8w^3/3 + 64w^5/15.
  auto r = classical_ratio(Rational(-1, 2), 7);
  CHECK(r[1] == Rational(2));
  CHECK(r[3] == Rational(8, 3));
  CHECK(r[5] == Rational(64, 15));
  CHECK(r[2] == Rational(0));
}

TEST_CASE("kishore suites") {
  th::require_clean(check_thm_df(13));
  th::require_clean(check_hahn_mirrors(9));
  th::require_clean(check_hahn_qbase(9));
  th::require_clean(check_jackson(9));
  th::require_clean(classical_kishore(11));
}

TEST_CASE("conjecture verdicts are conjecture statuses") {
  auto r = conjecture_finite_kishore(3, 4);
  for (const auto& c : r)
    if (c.id == "finite-kishore") CHECK((c.status == Status::conjecture_pass || c.status == Status::conjecture_fail));
  th::require_clean(r);
  auto g = conjecture_gauss(3, false);
  th::require_clean(g);
}
