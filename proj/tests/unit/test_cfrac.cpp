#include <random>

#include "helpers.hpp"
#include "qlab/cfrac/cfrac.hpp"
#include "qlab/lommel/lommel.hpp"
#include "qlab/qseries/qseries.hpp"

using namespace qlab;
using namespace qlab::cfrac;
using th::Q;
using th::T;

namespace {
CFSpec<Rational> spec_of(std::vector<Rational> a, std::vector<Rational> b) {
  CFSpec<Rational> s;
  s.depth = static_cast<unsigned>(a.size() - 1);
  s.a = [a](unsigned i) { return a[i]; };
  s.b = [b](unsigned i) { return b[i]; };
  return s;
}
}  // namespace

TEST_CASE("k_finite levels") {
  CHECK(k_finite(spec_of({Rational(3)}, {Rational(5)})) == Rational(3, 5));
  // 3/(5 + 2/7)
  CHECK(k_finite(spec_of({Rational(3), Rational(2)}, {Rational(5), Rational(7)})) == Rational(21, 37));
  CHECK(k_topdown(spec_of({Rational(3), Rational(2)}, {Rational(5), Rational(7)})) == Rational(21, 37));
  CHECK_THROWS_AS(k_finite(spec_of({Rational(1), Rational(1)}, {Rational(1), Rational(0)})), PoleError);
}

TEST_CASE("equivalence transform") {
  auto s = spec_of({Rational(3), Rational(2), Rational(-4)}, {Rational(5), Rational(7), Rational(1, 3)});
  auto same = equivalence_transform<Rational>(s, [](int) { return Rational(1); });
  CHECK(k_finite(same) == k_finite(s));
  CHECK(same.a(2) == s.a(2));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(1, 30);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 4; ++k) c.emplace_back(ring::Integer(d(rng)), ring::Integer(d(rng)));
    auto e = equivalence_transform<Rational>(s, [c](int k) { return c[static_cast<std::size_t>(k + 1)]; });
    CHECK(k_finite(e) == k_finite(s));
  }
  CHECK_THROWS_AS(equivalence_transform<Rational>(s, [](int k) { return Rational(k == 1 ? 0 : 1); }), PoleError);
}

TEST_CASE("moments: geometric and Catalan") {
  RISpec<Rational> geo{[](unsigned) { return Rational(3); }, [](unsigned) { return Rational(0); },
                       [](unsigned) { return Rational(0); }};
  auto g = moments(geo, 8);
  Rational p(1);
  for (std::size_t n = 0; n < 8; ++n, p = p * Rational(3)) CHECK(g[n] == p);
  RISpec<Rational> cat{[](unsigned) { return Rational(0); }, [](unsigned) { return Rational(0); },
                       [](unsigned n) { return Rational(n == 0 ? 0 : 2); }};
  auto c = moments(cat, 11);
  std::vector<long> catalan{1, 1, 2, 5, 14, 42};
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(c[2 * n] == Rational(catalan[n] * (1L << n)));
    if (2 * n + 1 < 11) CHECK(c[2 * n + 1] == Rational(0));
  }
}

TEST_CASE("moments of the Hahn-Exton spec give the ratio") {
  const std::size_t count = 6;
  auto mu = moments(lommel::hahn_exton_spec(), count);
  auto r = qseries::hahn_exton_ratio(2 * count + 1);
  RatFun pre = Q() * T() / (Q() * T() - RatFun(1));
  for (std::size_t n = 0; n < count; ++n) CHECK(r[2 * n + 1] == pre * mu[n]);
}

TEST_CASE("Bessel fraction prefix at depth 2 matches the ratio through z^5") {
  auto cf = bessel_shape_cf(2, 8);
  auto r = qseries::hahn_exton_ratio(8);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(cf[k + 1] == -T() * r[k]);
}

TEST_CASE("q-Norlund and Heine leading coefficients") {
  RatFun a = RatFun::var(Var::a), b = RatFun::var(Var::b), c = RatFun::var(Var::c), q = Q(), one(1);
  auto s = norlund_spec(a, b, c, q);
  CHECK(s.b(0) == (a + b - a * b - a * b * q) / (one - c));
  CHECK(s.a(0).is_zero());
  CHECK(s.lambda(0).is_zero());
  CHECK(heine_beta(1, a, b, c, q) == (one - b) * (a - c) / ((one - c) * (one - c * q)));
  CHECK(heine_beta(2, a, b, c, q) == (one - a * q) * (b - c * q) / ((one - c * q) * (one - c * q * q)));
  CHECK(heine_beta(3, a, b, c, q) == (one - b * q) * (a - c * q) * q / ((one - c * q * q) * (one - c * q * q * q)));
}

TEST_CASE("cfrac suites") {
  th::require_clean(check_prop_dp_p(13, 20240601));
  th::require_clean(check_lemma_equivalence(5));
  th::require_clean(check_eq4(13));
  RandomConfig rnd;
  rnd.points = 10;
  rnd.order = 9;
  th::require_clean(norlund_cf(9, rnd));
  th::require_clean(heine_cf(9, rnd));
  auto tc = two_cont(9, rnd);
  th::require_clean(tc);
  th::require_pass(tc, "two-cont.lambda1-a1");
  th::require_clean(jratio_moment_identities(13));
}
