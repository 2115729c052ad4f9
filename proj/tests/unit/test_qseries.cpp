#include "helpers.hpp"
#include "qlab/cfrac/cfrac.hpp"
#include "qlab/qseries/qseries.hpp"

using namespace qlab;
using namespace qlab::qseries;
using th::P;
using th::Q;
using th::T;

TEST_CASE("q-Pochhammer examples") {
  MultiPoly q = P(Var::q), one(1);
  CHECK(qpoch(q, 2) == (one - q) * (one - q * q));
  CHECK(qpoch(P(Var::t) * q, 1) == one - P(Var::t) * q);
  CHECK(qpoch(P(Var::a), 0) == one);
  CHECK(qpoch_value(RatFun(Rational(1, 2)), RatFun(Rational(1, 3)), 2) == RatFun(Rational(1, 2)) * RatFun(Rational(5, 6)));
}

TEST_CASE("q-integers") {
  MultiPoly q = P(Var::q), one(1);
  CHECK(qint(3) == one + q + q * q);
  CHECK(qint_shifted(0).positive == P(Var::u));
  CHECK(qint_shifted(2).positive == P(Var::u) + P(Var::t) * (one + q));
  CHECK(qint_shifted(2).value == (RatFun(1) - T() * Q() * Q()) / (RatFun(1) - Q()));
}

TEST_CASE("phi series leading terms") {
  PhiSpec<RatFun> s{{RatFun(0)}, {T() * Q()}, Q(), Q() * T(), 2, Var::z, 5};
  auto f = phi_series(s);
  CHECK(f[0] == RatFun(1));
  CHECK(f[1].is_zero());
  CHECK(f[2] == -(Q() * T()) / ((RatFun(1) - Q()) * (RatFun(1) - T() * Q())));
  PhiSpec<RatFun> g{{RatFun(0), RatFun(0)}, {T() * Q()}, Q(), RatFun(1), 1, Var::z, 3};
  CHECK(phi_series(g)[1] == RatFun(1) / ((RatFun(1) - Q()) * (RatFun(1) - T() * Q())));
}

TEST_CASE("Hahn-Exton ratio coefficients") {
  auto r = hahn_exton_ratio(7);
  CHECK(r[0].is_zero());
  CHECK(r[1] == -(Q() * T()) / (RatFun(1) - Q() * T()));
  CHECK(r[2].is_zero());
  CHECK(r[4].is_zero());
  // One level of the Bessel fraction fixes z^3; that fraction carries the extra factor -tz.
  auto cf = cfrac::bessel_shape_cf(1, 6);
  CHECK(cf[4] == -T() * r[3]);
}

TEST_CASE("Hahn-Exton ratio agrees across its three normal forms") {
  const std::size_t n = 9;
  auto a = hahn_exton_ratio(Q(), T(), n);
  auto b = hahn_exton_ratio_inverse_base(Q(), T(), n);
  for (std::size_t k = 0; k < n; ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("Jackson ratio coefficients") {
  auto r = jackson_ratio(6);
  CHECK(r[1] == RatFun(Rational(1, 2)) / (RatFun(1) - Q() * T()));
  CHECK(r[2].is_zero());
  RatFun one(1);
  RatFun want = RatFun(Rational(1, 8)) * Q() * T() /
                ((one - Q() * T()) * (one - Q() * T()) * (one - Q() * Q() * T()));
  CHECK(r[3] == want);
}

TEST_CASE("Kishore denominators") {
  RatFun one(1);
  auto br = [&](unsigned j) { return qint_shifted(j).positive; };
  CHECK(kishore_denominator(1).positive == br(1));
  CHECK(kishore_denominator(2).positive == br(1) * br(1) * br(2));
  CHECK(kishore_exponents(2) == std::vector<unsigned>{2, 1});
  CHECK(kishore_exponents(6) == std::vector<unsigned>{6, 3, 2, 1, 1, 1});
}

TEST_CASE("Euler product against its finite form") {
  // (x;q)_inf through x^2 is 1 - x/(1-q) + q x^2/((1-q)(1-q^2)).
  auto e = euler_product(Q(), RatFun(1), 1, Var::z, 3);
  CHECK(e[1] == -(RatFun(1) / (RatFun(1) - Q())));
  CHECK(e[2] == Q() / ((RatFun(1) - Q()) * (RatFun(1) - Q() * Q())));
}
