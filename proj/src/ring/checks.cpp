#include "qlab/ring/checks.hpp"

#include <map>
#include <random>
#include <string>

#include "qlab/ring/ratfun.hpp"
#include "qlab/ring/series.hpp"

namespace qlab::ring {

namespace {

MultiPoly random_poly(std::mt19937_64& rng, std::size_t max_terms) {
  std::uniform_int_distribution<int> coef(-9, 9), expo(0, 3), count(1, static_cast<int>(max_terms));
  MultiPoly p;
  for (int i = count(rng); i > 0; --i) {
    int c = coef(rng);
    if (c == 0) c = 1;
    Monomial m = Monomial::var(Var::q, static_cast<unsigned>(expo(rng))) *
                 Monomial::var(Var::t, static_cast<unsigned>(expo(rng))) *
                 Monomial::var(Var::x, static_cast<unsigned>(expo(rng)));
    p += MultiPoly::monomial(m, c);
  }
  return p;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

std::string str(const MultiPoly& p) { return p.to_string(); }

}  // namespace

Report check_ring(std::uint64_t seed) {
  Report rep;
  MultiPoly q = MultiPoly::var(Var::q), t = MultiPoly::var(Var::t), one(1);
  Params sp{{"seed", std::to_string(seed)}};

  rep.push_back(run_check("ring.poly-examples", {}, [&]() -> std::optional<std::string> {
    if (*poly_arith(one - q, one + q, PolyOp::mul) != one - q * q) return std::string("(1-q)(1+q)");
    auto d = poly_arith(one - q * q, one - q, PolyOp::exact_div);
    if (!d || *d != one + q) return std::string("(1-q^2)/(1-q)");
    if (poly_arith(one + q * q, one - q, PolyOp::exact_div)) return std::string("(1+q^2)/(1-q) divided");
    return std::nullopt;
  }));

  rep.push_back(run_check("ring.normalize-examples", {}, [&]() -> std::optional<std::string> {
    RatFun a = ratfun_normalize(one - q * q, {{one - q, 1}});
    if (!a.is_polynomial() || *a.as_polynomial() != one + q) return "(1-q^2)/(1-q) -> " + a.to_string();
    RatFun b = ratfun_normalize(q * t, {{one - q * t, 1}});
    // Already reduced; the factor is stored with positive leading coefficient as qt - 1.
    if (b.factors().size() != 1 || b.factors()[0].mult != 1 || b.numerator() != -(q * t) ||
        b.denominator() != q * t - one)
      return "qt/(1-qt) -> " + b.to_string();
    RatFun c = ratfun_normalize((one - q * t) * (one - q * t), {{one - q * t, 1}});
    if (!c.is_polynomial() || *c.as_polynomial() != one - q * t) return "(1-qt)^2/(1-qt) -> " + c.to_string();
    bool threw = false;
    try {
      (void)ratfun_normalize(one, {{MultiPoly(0), 1}});
    } catch (const std::exception&) {
      threw = true;
    }
    if (!threw) return std::string("zero factor accepted");
    return std::nullopt;
  }));

  rep.push_back(run_check("ring.series-examples", {{"order", "8"}}, [&]() -> std::optional<std::string> {
    const std::size_t n = 8;
    Series<RatFun> f(Var::z, n);
    f[0] = RatFun(1);
    f[1] = RatFun(-1);
    Series<RatFun> g = f.recip();
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] != RatFun(1)) return "recip(1-z) at z^" + std::to_string(k);
    Series<RatFun> s = g.compose_scale(RatFun::var(Var::q));
    for (std::size_t k = 0; k < n; ++k)
      if (s[k] != RatFun(q.pow(static_cast<unsigned>(k)))) return "compose_scale at z^" + std::to_string(k);
    Series<RatFun> prod = g * f;
    for (std::size_t k = 0; k < n; ++k)
      if (prod[k] != RatFun(k == 0 ? 1 : 0)) return "recip(1-z)(1-z) at z^" + std::to_string(k);
    Series<RatFun> zero_head(Var::z, n);
    zero_head[1] = RatFun(1);
    try {
      (void)zero_head.recip();
      return std::string("recip(z) succeeded");
    } catch (const PoleError&) {
    }
    return std::nullopt;
  }));

  rep.push_back(run_check("ring.eval-examples", {}, [&]() -> std::optional<std::string> {
    Rational half(Integer(1), Integer(2)), third(Integer(1), Integer(3));
    if (RatFun(one + q).eval({{Var::q, half}}) != Rational(Integer(3), Integer(2))) return std::string("(1+q)(1/2)");
    try {
      (void)(RatFun(1) / RatFun(one - q)).eval({{Var::q, Rational(1)}});
      return std::string("1/(1-q) at q=1 evaluated");
    } catch (const PoleError&) {
    }
    RatFun r = RatFun(q * t) / RatFun(one - q * t);
    if (r.eval({{Var::q, half}, {Var::t, third}}) != Rational(Integer(1), Integer(5))) return std::string("qt/(1-qt)");
    return std::nullopt;
  }));

  rep.push_back(run_check("ring.poly-properties", sp, [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
      MultiPoly p = random_poly(rng, 6), r = random_poly(rng, 6), s = random_poly(rng, 6);
      if ((p + r) * s != p * s + r * s) return "distributivity " + str(p) + " | " + str(r) + " | " + str(s);
      if (p * r != r * p) return "commutativity " + str(p) + " | " + str(r);
      auto d = poly_arith(p * r, r, PolyOp::exact_div);
      if (!d || *d != p) return "exact_div " + str(p) + " | " + str(r);
    }
    return std::nullopt;
  }));

  rep.push_back(run_check("ring.normalize-properties", sp, [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(seed + 1);
    std::vector<MultiPoly> factors{one - q, one - q * t, one + q, one - q * q * t, one - t};
    std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
    std::uniform_int_distribution<unsigned> mult(1, 2);
    int points = 0;
    for (int i = 0; i < 40; ++i) {
      std::vector<std::pair<MultiPoly, unsigned>> den{{factors[pick(rng)], mult(rng)}, {factors[pick(rng)], 1}};
      MultiPoly num = random_poly(rng, 4) * factors[pick(rng)];
      RatFun r = ratfun_normalize(num, den);
      std::vector<std::pair<MultiPoly, unsigned>> again;
      for (const auto& f : r.factors()) again.emplace_back(f.poly, f.mult);
      RatFun r2 = ratfun_normalize(r.numerator(), again) / RatFun(MultiPoly(r.den_content()));
      if (r2 != r || r2.to_string() != r.to_string()) return "idempotence " + r.to_string();
      for (int tries = 0; tries < 20 && points < 100 * (i + 1) / 40; ++tries) {
        std::map<Var, Rational> pt{{Var::q, random_rational(rng)}, {Var::t, random_rational(rng)},
                                   {Var::x, random_rational(rng)}};
        Rational direct;
        try {
          direct = RatFun(num).eval(pt);
          Rational d(1);
          for (const auto& [f, k] : den)
            for (unsigned j = 0; j < k; ++j) d = d * RatFun(f).eval(pt);
          direct = direct / d;
        } catch (const PoleError&) {
          continue;
        }
        if (r.eval(pt) != direct) return "evaluation changed for " + r.to_string();
        ++points;
      }
    }
    if (points < 100) return "only " + std::to_string(points) + " pole-free points";
    return std::nullopt;
  }));

  rep.push_back(run_check("ring.series-inverse-law", sp, [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(seed + 2);
    const std::size_t n = 10;
    for (int i = 0; i < 20; ++i) {
      Series<RatFun> f(Var::z, n);
      for (std::size_t k = 0; k < n; ++k) f[k] = RatFun(random_poly(rng, 3)) / RatFun(one - q * t);
      if (f[0].is_zero()) f[0] = RatFun(1);
      Series<RatFun> g = f * f.recip();
      for (std::size_t k = 0; k < n; ++k)
        if (g[k] != RatFun(k == 0 ? 1 : 0)) return "f recip(f) at z^" + std::to_string(k);
    }
    return std::nullopt;
  }));

  rep.push_back(run_check("ring.serialization-determinism", sp, [&]() -> std::optional<std::string> {
    std::mt19937_64 rng1(seed + 3), rng2(seed + 3);
    for (int i = 0; i < 50; ++i) {
      MultiPoly a = random_poly(rng1, 6), b = random_poly(rng2, 6);
      RatFun ra = RatFun(a) / RatFun(one - q * t), rb = RatFun(b) / RatFun(one - q * t);
      if (a.to_string() != b.to_string() || ra.to_string() != rb.to_string()) return "serialization " + a.to_string();
    }
    return std::nullopt;
  }));
  return rep;
}

}  // namespace qlab::ring
