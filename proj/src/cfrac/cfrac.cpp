#include "qlab/cfrac/cfrac.hpp"

#include <map>
#include <random>
#include <string>

#include "qlab/qseries/qseries.hpp"

namespace qlab::cfrac {

using qseries::PhiSpec;
using qseries::phi_series;
using ring::Integer;
using ring::MultiPoly;

namespace {

RatFun var(Var v) { return RatFun::var(v); }

template <class F>
F power(const F& x, unsigned k) {
  F r(1);
  for (unsigned i = 0; i < k; ++i) r = r * x;
  return r;
}

std::string idx(const char* what, long n) { return std::string(what) + "=" + std::to_string(n); }

Params order_param(std::size_t order) { return {{"order", std::to_string(order)}}; }

Params random_params(const RandomConfig& r) {
  return {{"seed", std::to_string(r.seed)}, {"points", std::to_string(r.points)}, {"order", std::to_string(r.order)}};
}

template <class F>
std::optional<std::string> compare(const Series<F>& a, const Series<F>& b, const char* var = "z^") {
  long k = first_difference(a, b);
  if (k >= 0) return idx(var, k);
  return std::nullopt;
}

// Nonzero rational with |numerator|, denominator <= 97.
Rational draw(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(1, 97), den(1, 97), sign(0, 1);
  long n = num(g);
  return Rational(Integer(sign(g) ? -n : n), Integer(den(g)));
}

std::string show(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
  return s + ")";
}

// Runs `body` at `count` pole-free random points of dimension `dim`.
template <class Fn>
std::optional<std::string> at_random_points(std::uint64_t seed, unsigned count, std::size_t dim, Fn&& body) {
  std::mt19937_64 g(seed);
  unsigned done = 0, tries = 0;
  while (done < count) {
    if (++tries > 50 * count) return std::string("too many poles while drawing points");
    std::vector<Rational> p;
    for (std::size_t i = 0; i < dim; ++i) p.push_back(draw(g));
    std::optional<std::string> w;
    try {
      w = body(p);
    } catch (const PoleError&) {
      continue;
    }
    if (w) return *w + " at " + show(p);
    ++done;
  }
  return std::nullopt;
}

template <class F>
Series<F> phi21(const F& a, const F& b, const F& c, const F& q, std::size_t order) {
  return phi_series(PhiSpec<F>{{a, b}, {c}, q, F(1), 1, Var::z, order});
}

template <class F>
Series<F> phi11(const F& c, const F& q, const F& arg, std::size_t order) {
  return phi_series(PhiSpec<F>{{F(0)}, {c}, q, arg, 1, Var::z, order});
}

template <class F>
Series<F> const_series(const F& c, std::size_t order) {
  return Series<F>::constant(Var::z, order, c);
}

// -- Norlund -------------------------------------------------------------------

template <class F>
std::optional<std::string> norlund_restated(const F& a, const F& b, const F& c, const F& q, std::size_t order) {
  auto lhs = phi21(a * q, b * q, c * q, q, order) / phi21(a, b, c, q, order);
  return compare(lhs, moments(norlund_spec(a, b, c, q), order));
}

// 2phi1(a,b;c)/2phi1(aq,bq;cq) = (1-c-(a+b-ab-abq)z)/(1-c) + K_{m>=1}(c_m(z)/(e_m + d_m z))/(1-c).
template <class F>
std::optional<std::string> norlund_lemma(const F& a, const F& b, const F& c, const F& q, std::size_t order) {
  auto lhs = phi21(a, b, c, q, order) / phi21(a * q, b * q, c * q, q, order);
  using S = Series<F>;
  CFSpec<S> k;
  k.a = [=](unsigned i) {
    unsigned m = i + 1;
    F qm = power(q, m);
    S cz(Var::z, order);
    F pre = (F(1) - a * qm) * (F(1) - b * qm) * power(q, m - 1);
    if (order > 1) cz[1] = pre * c;
    if (order > 2) cz[2] = -(pre * a * b * qm);
    return cz;
  };
  k.b = [=](unsigned i) {
    unsigned m = i + 1;
    F qm = power(q, m);
    S e(Var::z, order);
    e[0] = F(1) - c * qm;
    if (order > 1) e[1] = -((a + b - a * b * qm - a * b * qm * q) * qm);
    return e;
  };
  k.depth = static_cast<unsigned>(order);
  k.prefactor = const_series(F(1) / (F(1) - c), order);
  S head(Var::z, order);
  head[0] = F(1);
  if (order > 1) head[1] = -((a + b - a * b - a * b * q) / (F(1) - c));
  return compare(lhs, head + k_finite(k));
}

// -- Heine ---------------------------------------------------------------------

template <class F>
Series<F> heine_ratio(const F& a, const F& b, const F& c, const F& q, std::size_t order) {
  return phi21(a * q, b, c * q, q, order) / phi21(a, b, c, q, order);
}

template <class F>
std::optional<std::string> heine_fraction(const F& a, const F& b, const F& c, const F& q, std::size_t order) {
  auto spec = stieltjes_spec<F>([=](unsigned k) { return heine_beta(k, a, b, c, q); });
  return compare(heine_ratio(a, b, c, q, order), moments(spec, order));
}

template <class F>
std::optional<std::string> heine_contiguous(const F& a, const F& b, const F& c, const F& q, std::size_t order) {
  F beta1 = (F(1) - b) * (a - c) / ((F(1) - c) * (F(1) - c * q));
  auto inner = phi21(b * q, a * q, c * q * q, q, order) / phi21(b, a * q, c * q, q, order);
  auto rhs = (const_series(F(1), order) - inner.shift(1) * beta1).recip();
  if (auto w = compare(heine_ratio(a, b, c, q, order), rhs)) return w;
  // The difference form of the relation.
  auto diff = phi21(a * q, b, c * q, q, order) - phi21(a, b, c, q, order);
  return compare(diff, phi21(a * q, b * q, c * q * q, q, order).shift(1) * beta1);
}

// -- 1phi1 fractions -----------------------------------------------------------

template <class F>
RISpec<F> two_cont_ba(const F& c, const F& q) {
  return {[=](unsigned i) { return power(q, i) / (F(1) - c * power(q, i)); },
          [=](unsigned i) {
            if (i == 0) return F(0);
            return c * power(q, 2 * i - 1) / ((F(1) - c * power(q, i - 1)) * (F(1) - c * power(q, i)));
          },
          [](unsigned) { return F(0); }};
}

template <class F>
F two_cont_lambda(unsigned k, const F& c, const F& q) {
  unsigned i = k / 2;
  if (k % 2 == 0)
    return c * power(q, 3 * i - 1) / ((F(1) - c * power(q, 2 * i - 1)) * (F(1) - c * power(q, 2 * i)));
  return power(q, i) / ((F(1) - c * power(q, 2 * i)) * (F(1) - c * power(q, 2 * i + 1)));
}

template <class F>
F remark_lambda(unsigned k, const F& c, const F& q) {
  unsigned n = k / 2;
  if (k % 2 == 0) return power(q, n - 1) / ((F(1) - c * power(q, 2 * n - 1)) * (F(1) - c * power(q, 2 * n)));
  return c * power(q, 3 * n) / ((F(1) - c * power(q, 2 * n)) * (F(1) - c * power(q, 2 * n + 1)));
}

template <class F>
std::optional<std::string> two_cont_identities(const F& c, const F& q, std::size_t order) {
  auto lhs = phi11(c * q, q, q, order) / phi11(c, q, F(1), order);
  if (auto w = compare(lhs, moments(two_cont_ba(c, q), order))) return "b/a form " + *w;
  auto lam = stieltjes_spec<F>([=](unsigned k) { return two_cont_lambda(k, c, q); });
  if (auto w = compare(lhs, moments(lam, order))) return "lambda form " + *w;
  auto plain = phi11(c * q, q, F(1), order) / phi11(c, q, F(1), order);
  auto rem = stieltjes_spec<F>([=](unsigned k) { return remark_lambda(k, c, q); });
  if (auto w = compare(plain, moments(rem, order))) return "remark form " + *w;
  return std::nullopt;
}

// 1phi1(0;c;q,z) = 1phi1(0;1/c;1/q,z/(qc)), and the ratio it induces.
template <class F>
std::optional<std::string> two_cont_inversion(const F& c, const F& q, std::size_t order) {
  F qi = F(1) / q, ci = F(1) / c;
  if (auto w = compare(phi11(c, q, F(1), order), phi11(ci, qi, qi * ci, order))) return "inversion " + *w;
  auto lhs = phi11(q * c, q, q, order) / phi11(c, q, F(1), order);
  auto rhs = phi11(qi * ci, qi, qi * ci, order) / phi11(ci, qi, qi * ci, order);
  if (auto w = compare(lhs, rhs)) return "ratio " + *w;
  // The remark fraction with (c,q) -> (1/c,1/q) at argument z/(qc) then gives lhs.
  auto rem = stieltjes_spec<F>([=](unsigned k) { return remark_lambda(k, ci, qi); });
  auto remark = moments(rem, order).compose_scale(qi * ci);
  if (auto w = compare(lhs, remark)) return "remark equivalence " + *w;
  return std::nullopt;
}

// -- shared Bessel data ---------------------------------------------------------

RatFun Q() { return var(Var::q); }
RatFun T() { return var(Var::t); }

RISpec<RatFun> lambda_prime_spec() {
  auto zero = [](unsigned) { return RatFun(0); };
  return {zero, zero, [](unsigned k) {
    RatFun q = Q(), t = T(), one(1);
    unsigned i = k / 2;
    if (k % 2 == 0)
      return t * t * q.pow(3 * static_cast<int>(i) + 1) /
             ((one - t * q.pow(2 * static_cast<int>(i))) * (one - t * q.pow(2 * static_cast<int>(i) + 1)));
    return t * q.pow(static_cast<int>(i) + 1) /
           ((one - t * q.pow(2 * static_cast<int>(i) + 1)) * (one - t * q.pow(2 * static_cast<int>(i) + 2)));
  }};
}

RatFun jackson_a(unsigned n) {
  RatFun q = Q(), t = T(), one(1);
  return t * q.pow(static_cast<int>(n)) / ((one - t * q.pow(static_cast<int>(n))) * (one - t * q.pow(static_cast<int>(n) + 1)));
}

}  // namespace

Series<RatFun> shape_cf_series(unsigned m, std::size_t order) {
  using S = Series<RatFun>;
  RatFun x = var(Var::x), y = var(Var::y);
  auto mono = [=](const RatFun& c, std::size_t k) { return S::monomial(Var::q, order, c, k); };
  // -K(-q^{2i+1}xy / (1 - q^{i+1}(x+y))).
  CFSpec<S> k;
  k.a = [=](unsigned i) { return mono(-(x * y), 2 * i + 1); };
  k.b = [=](unsigned i) { return mono(RatFun(1), 0) - mono(x + y, i + 1); };
  k.depth = m;
  k.prefactor = mono(RatFun(-1), 0);
  return k_finite(k);
}

Series<RatFun> bessel_shape_cf(unsigned depth, std::size_t order) {
  using S = Series<RatFun>;
  RatFun q = Q(), t = T();
  CFSpec<S> k;
  k.a = [=](unsigned i) { return S::monomial(Var::z, order, -(t * t * q.pow(2 * static_cast<int>(i) + 1)), 2); };
  k.b = [=](unsigned i) {
    S s(Var::z, order);
    RatFun c = t * q.pow(static_cast<int>(i) + 1);
    s[0] = RatFun(1) - c;
    if (order > 2) s[2] = -c;
    return s;
  };
  k.depth = depth;
  k.prefactor = S::constant(Var::z, order, RatFun(-1));
  return k_finite(k);
}

Report check_cf_engine(std::size_t order, std::uint64_t seed) {
  Report rep;
  RatFun x = var(Var::x), y = var(Var::y);
  rep.push_back(run_check("cf.levels", {}, [&]() -> std::optional<std::string> {
    CFSpec<RatFun> s{[&](unsigned i) { return x + RatFun(static_cast<long>(i)); },
                     [&](unsigned i) { return y * RatFun(static_cast<long>(i + 2)); }, 0, RatFun(1)};
    if (!(k_finite(s) == x / (y * RatFun(2)))) return std::string("m=0");
    s.depth = 1;
    if (!(k_finite(s) == x / (y * RatFun(2) + (x + RatFun(1)) / (y * RatFun(3))))) return std::string("m=1");
    return std::nullopt;
  }));
  rep.push_back(run_check(
      "cf.bottom-up-vs-top-down", {{"seed", std::to_string(seed)}, {"specs", "20"}},
      [&]() -> std::optional<std::string> {
        std::mt19937_64 g(seed);
        return at_random_points(seed, 20, 24, [&](const std::vector<Rational>& p) -> std::optional<std::string> {
          unsigned depth = static_cast<unsigned>(g() % 12);
          CFSpec<Rational> s{[&](unsigned i) { return p[2 * i]; }, [&](unsigned i) { return p[2 * i + 1]; }, depth,
                             Rational(1)};
          if (!(k_finite(s) == k_topdown(s))) return idx("depth", depth);
          return std::nullopt;
        });
      }));
  rep.push_back(run_check("moments.geometric", order_param(order), [&]() -> std::optional<std::string> {
    RISpec<RatFun> s{[&](unsigned) { return x; }, [](unsigned) { return RatFun(0); },
                     [](unsigned) { return RatFun(0); }};
    auto mu = moments(s, order);
    for (std::size_t n = 0; n < order; ++n)
      if (!(mu[n] == x.pow(static_cast<int>(n)))) return idx("n", static_cast<long>(n));
    return std::nullopt;
  }));
  rep.push_back(run_check("moments.catalan", order_param(order), [&]() -> std::optional<std::string> {
    RISpec<RatFun> s{[](unsigned) { return RatFun(0); }, [](unsigned) { return RatFun(0); },
                     [&](unsigned) { return y; }};
    auto mu = moments(s, order);
    // Dyck paths of length n, counted height by height.
    std::vector<Integer> h(order + 1, 0);
    h[0] = 1;
    for (std::size_t n = 0; n < order; ++n) {
      if (n > 0) {
        std::vector<Integer> next(order + 1, 0);
        for (std::size_t k = 0; k < order; ++k) {
          if (k + 1 <= order) next[k + 1] += h[k];
          if (k > 0) next[k - 1] += h[k];
        }
        h = next;
      }
      RatFun want = n % 2 ? RatFun(0) : RatFun(h[0]) * y.pow(static_cast<int>(n / 2));
      if (!(mu[n] == want)) return idx("n", static_cast<long>(n));
    }
    return std::nullopt;
  }));
  rep.push_back(run_check(
      "moments.depth-stability", {{"seed", std::to_string(seed)}, {"m_max", "6"}},
      [&]() -> std::optional<std::string> {
        return at_random_points(seed + 1, 10, 24, [&](const std::vector<Rational>& p) -> std::optional<std::string> {
          for (int classical = 0; classical < 2; ++classical) {
            RISpec<Rational> s{[&](unsigned i) { return p[i % 8]; },
                               [&](unsigned i) { return classical ? Rational(0) : p[8 + i % 8]; },
                               [&](unsigned i) { return p[16 + i % 8]; }};
            for (unsigned m = 0; m <= 6; ++m) {
              auto lo = moments(s, m, 16), hi = moments(s, m + 1, 16);
              std::size_t agree = classical ? 2 * m + 2 : m + 1;
              for (std::size_t n = 0; n < agree && n < 16; ++n)
                if (!(lo[n] == hi[n])) return idx(classical ? "a=0 m" : "m", m) + " " + idx("n", static_cast<long>(n));
            }
          }
          return std::nullopt;
        });
      },
      false, "agreement for n <= m in general, n <= 2m+1 when a = 0"));
  return rep;
}

Report check_prop_dp_p(std::size_t order, std::uint64_t seed) {
  Report rep = check_cf_engine(order, seed);
  const unsigned m_max = 5;
  const std::size_t mu_order = 10;
  rep.push_back(run_check(
      "ri-moments.hahn-exton", {{"m_max", std::to_string(m_max)}, {"order", std::to_string(mu_order)}},
      [&]() -> std::optional<std::string> {
        auto spec = lommel::hahn_exton_spec();
        RatFun scale = RatFun(1) - (T() * Q()).inv();
        for (unsigned m = 0; m <= m_max; ++m) {
          auto mu = moments(spec, m, mu_order, Var::x);
          if (auto w = compare(mu, lommel::ri_ratio_series(spec, m, mu_order), "x^")) return idx("star ratio m", m) + " " + *w;
          auto r = lommel::lommel_ratio_series(m, 2 * mu_order);
          for (std::size_t n = 0; n < mu_order; ++n)
            if (!(mu[n] == scale * r[2 * n + 1])) return idx("lommel ratio m", m) + " " + idx("n", static_cast<long>(n));
        }
        return std::nullopt;
      }));
  rep.push_back(run_check(
      "ri-moments.random", {{"seed", std::to_string(seed)}, {"specs", "20"}},
      [&]() -> std::optional<std::string> {
        std::mt19937_64 g(seed + 2);
        return at_random_points(seed + 3, 20, 24, [&](const std::vector<Rational>& p) -> std::optional<std::string> {
          RISpec<Rational> s{[&](unsigned i) { return p[i % 8]; }, [&](unsigned i) { return p[8 + i % 8]; },
                             [&](unsigned i) { return p[16 + i % 8]; }};
          unsigned m = static_cast<unsigned>(g() % 7);
          if (auto w = compare(moments(s, m, 12, Var::x), lommel::ri_ratio_series(s, m, 12), "x^"))
            return idx("m", m) + " " + *w;
          // m large enough that the truncation is invisible below x^12.
          if (auto w = compare(moments(s, 12, Var::x), lommel::ri_ratio_series(s, 12, 12), "x^"))
            return "unbounded " + *w;
          return std::nullopt;
        });
      }));
  return rep;
}

Report check_lemma_equivalence(std::uint64_t seed) {
  Report rep;
  RatFun x = var(Var::x), y = var(Var::y), q = Q(), t = T(), z = var(Var::z), one(1);
  CFSpec<RatFun> sym{[&](unsigned i) { return x * q.pow(static_cast<int>(i)) + y; },
                     [&](unsigned i) { return one + y * q.pow(static_cast<int>(i) + 1) - x; }, 0, one};
  rep.push_back(run_check("equivalence.identity", {}, [&]() -> std::optional<std::string> {
    for (unsigned m = 0; m <= 4; ++m) {
      sym.depth = m;
      auto s = equivalence_transform<RatFun>(sym, [](int) { return RatFun(1); });
      for (unsigned i = 0; i <= m; ++i)
        if (!(s.a(i) == sym.a(i)) || !(s.b(i) == sym.b(i))) return idx("m", m);
      if (!(k_finite(s) == k_finite(sym))) return idx("m", m);
    }
    return std::nullopt;
  }));
  rep.push_back(run_check("equivalence.symbolic", {{"m_max", "4"}}, [&]() -> std::optional<std::string> {
    auto c = [&](int i) { return one - t * q.pow(i + 1) + x; };
    for (unsigned m = 0; m <= 4; ++m) {
      sym.depth = m;
      if (!(k_finite(equivalence_transform<RatFun>(sym, c)) == k_finite(sym))) return idx("m", m);
    }
    return std::nullopt;
  }));
  rep.push_back(run_check(
      "equivalence.random", {{"seed", std::to_string(seed)}, {"points", "50"}, {"m_max", "8"}},
      [&]() -> std::optional<std::string> {
        std::mt19937_64 g(seed + 4);
        return at_random_points(seed + 5, 50, 28, [&](const std::vector<Rational>& p) -> std::optional<std::string> {
          unsigned m = static_cast<unsigned>(g() % 9);
          CFSpec<Rational> s{[&](unsigned i) { return p[i]; }, [&](unsigned i) { return p[9 + i]; }, m, Rational(1)};
          auto c = [&](int i) { return p[19 + i]; };
          if (!(k_finite(equivalence_transform<Rational>(s, c)) == k_finite(s))) return idx("m", m);
          return std::nullopt;
        });
      }));
  rep.push_back(run_check(
      "equivalence.shape-instance", {{"m_max", "4"}},
      [&]() -> std::optional<std::string> {
        // -(1-t) K(-t^2 q^{2i+1} z^2/((1-tq^i)(1-tq^{i+1})) / (1 - tq^{i+1} z^2/(1-tq^{i+1}))) with c_i = 1 - tq^{i+1}.
        CFSpec<RatFun> s{[&](unsigned i) {
                           int k = static_cast<int>(i);
                           return -(t * t * q.pow(2 * k + 1) * z * z) /
                                  ((one - t * q.pow(k)) * (one - t * q.pow(k + 1)));
                         },
                         [&](unsigned i) {
                           RatFun c = t * q.pow(static_cast<int>(i) + 1);
                           return one - c * z * z / (one - c);
                         },
                         0, -(one - t)};
        CFSpec<RatFun> xy{[&](unsigned i) { return -(q.pow(2 * static_cast<int>(i) + 1) * x * y); },
                          [&](unsigned i) { return one - q.pow(static_cast<int>(i) + 1) * (x + y); }, 0, RatFun(-1)};
        std::map<Var, RatFun> sub{{Var::x, t * z * z}, {Var::y, t}};
        auto spec = lommel::hahn_exton_spec();
        for (unsigned m = 0; m <= 4; ++m) {
          s.depth = xy.depth = m;
          auto tr = equivalence_transform<RatFun>(s, [&](int i) { return one - t * q.pow(i + 1); });
          if (!(tr.prefactor == RatFun(-1))) return idx("prefactor m", m);
          for (unsigned i = 0; i <= m; ++i) {
            if (!(tr.a(i) == xy.a(i).substitute(sub))) return idx("numerator m", m) + " " + idx("i", i);
            if (!(tr.b(i) == xy.b(i).substitute(sub))) return idx("denominator m", m) + " " + idx("i", i);
          }
          // Both sides against the moment form t^2 q z^2/(1-tq) sum mu_n^{<=m} z^{2n}.
          RatFun value = k_finite(tr);
          if (!(value == k_finite(s))) return idx("value m", m);
          auto ser = ring::to_series_in(value, Var::z, 12);
          auto mu = moments(spec, m, 5, Var::z);
          RatFun pre = t * t * q / (one - t * q);
          for (std::size_t n = 0; n < 5; ++n)
            if (!(ser[2 * n + 2] == pre * mu[n])) return idx("moments m", m) + " " + idx("n", static_cast<long>(n));
        }
        return std::nullopt;
      }));
  return rep;
}

Report check_eq4(std::size_t order) {
  Report rep;
  rep.push_back(run_check(
      "bessel-cf.truncations", order_param(order), [&]() -> std::optional<std::string> {
        auto ratio = qseries::hahn_exton_ratio(order);
        auto target = ratio.shift(1) * (-T());
        for (unsigned d = 0; 2 * d + 3 < order; ++d) {
          auto cf = bessel_shape_cf(d, order);
          for (std::size_t k = 0; k < 2 * d + 4; ++k)
            if (!(cf[k] == target[k])) return idx("depth", d) + " " + idx("z^", static_cast<long>(k));
        }
        return std::nullopt;
      },
      false, "depth d agrees through z^{2d+3}"));
  return rep;
}

Report norlund_cf(std::size_t order, const RandomConfig& rnd) {
  Report rep;
  order = std::min<std::size_t>(order, 5);  // symbolic order; the random points use rnd.order
  RatFun a = var(Var::a), b = var(Var::b), c = var(Var::c), q = Q(), one(1);
  rep.push_back(run_check("norlund.b0", {}, [&]() -> std::optional<std::string> {
    if (!(norlund_spec(a, b, c, q).b(0) == (a + b - a * b - a * b * q) / (one - c))) return std::string("b_0");
    return std::nullopt;
  }));
  rep.push_back(run_check("norlund.z1", {}, [&]() -> std::optional<std::string> {
    return norlund_restated(a, b, c, q, 2);
  }));
  rep.push_back(run_check("norlund.restated.symbolic", order_param(order), [&]() {
    return norlund_restated(a, b, c, q, order);
  }));
  rep.push_back(run_check("norlund.lemma.symbolic", order_param(order), [&]() {
    return norlund_lemma(a, b, c, q, order);
  }));
  rep.push_back(run_check("norlund.random", random_params(rnd), [&]() {
    return at_random_points(rnd.seed, rnd.points, 4, [&](const std::vector<Rational>& p) -> std::optional<std::string> {
      if (auto w = norlund_restated(p[0], p[1], p[2], p[3], rnd.order)) return "restated " + *w;
      if (auto w = norlund_lemma(p[0], p[1], p[2], p[3], rnd.order)) return "lemma " + *w;
      return std::nullopt;
    });
  }));
  return rep;
}

Report heine_cf(std::size_t order, const RandomConfig& rnd) {
  Report rep;
  order = std::min<std::size_t>(order, 5);  // symbolic order; the random points use rnd.order
  RatFun a = var(Var::a), b = var(Var::b), c = var(Var::c), q = Q(), one(1);
  rep.push_back(run_check("heine.beta1", {}, [&]() -> std::optional<std::string> {
    if (!(heine_beta(1, a, b, c, q) == (one - b) * (a - c) / ((one - c) * (one - c * q)))) return std::string("beta_1");
    return std::nullopt;
  }));
  rep.push_back(run_check("heine.beta-from-contiguous", {{"k_max", std::to_string(2 * order)}}, [&]() -> std::optional<std::string> {
    // Step k uses (A,B,C) with ratio 2phi1(Aq,B;Cq)/2phi1(A,B;C); the next step is (B, Aq, Cq).
    RatFun A = a, B = b, C = c;
    for (unsigned k = 1; k <= 2 * order; ++k) {
      RatFun step = (one - B) * (A - C) / ((one - C) * (one - C * q));
      if (!(step == heine_beta(k, a, b, c, q))) return idx("k", k);
      RatFun nA = B, nB = A * q, nC = C * q;
      A = nA;
      B = nB;
      C = nC;
    }
    return std::nullopt;
  }));
  rep.push_back(run_check("heine.contiguous.symbolic", order_param(order), [&]() {
    return heine_contiguous(a, b, c, q, order);
  }));
  rep.push_back(run_check("heine.fraction.symbolic", order_param(order), [&]() {
    return heine_fraction(a, b, c, q, order);
  }));
  rep.push_back(run_check("heine.random", random_params(rnd), [&]() {
    return at_random_points(rnd.seed + 1, rnd.points, 4, [&](const std::vector<Rational>& p) -> std::optional<std::string> {
      if (auto w = heine_contiguous(p[0], p[1], p[2], p[3], rnd.order)) return "contiguous " + *w;
      if (auto w = heine_fraction(p[0], p[1], p[2], p[3], rnd.order)) return "fraction " + *w;
      return std::nullopt;
    });
  }));
  return rep;
}

Report two_cont(std::size_t order, const RandomConfig& rnd) {
  Report rep;
  order = std::min<std::size_t>(order, 9);  // symbolic order; the random points use rnd.order
  RatFun c = var(Var::c), q = Q(), one(1);
  rep.push_back(run_check("two-cont.lambda1-a1", {}, [&]() -> std::optional<std::string> {
    if (!(two_cont_lambda(1, c, q) == one / ((one - c) * (one - c * q)))) return std::string("lambda_1");
    if (!(two_cont_ba(c, q).a(1) == c * q / ((one - c) * (one - c * q)))) return std::string("a_1");
    return std::nullopt;
  }));
  rep.push_back(run_check("two-cont.symbolic", order_param(order), [&]() {
    return two_cont_identities(c, q, order);
  }));
  rep.push_back(run_check("two-cont.inversion.symbolic", order_param(order), [&]() {
    return two_cont_inversion(c, q, order);
  }));
  rep.push_back(run_check("two-cont.random", random_params(rnd), [&]() {
    return at_random_points(rnd.seed + 2, rnd.points, 2, [&](const std::vector<Rational>& p) -> std::optional<std::string> {
      if (auto w = two_cont_identities(p[0], p[1], rnd.order)) return w;
      return two_cont_inversion(p[0], p[1], rnd.order);
    });
  }));
  return rep;
}

Report jratio_moment_identities(std::size_t order) {
  Report rep;
  auto p = order_param(order);
  RatFun q = Q(), t = T(), one(1);
  const std::size_t zorder = order;
  const std::size_t count = (order + 1) / 2;  // moments in z^2
  rep.push_back(run_check("jratio.first-coefficients", {}, [&]() -> std::optional<std::string> {
    if (!(lambda_prime_spec().lambda(1) == t * q / ((one - t * q) * (one - t * q * q)))) return std::string("lambda'_1");
    if (!(jackson_a(1) == t * q / ((one - t * q) * (one - t * q * q)))) return std::string("jackson a_1");
    return std::nullopt;
  }));
  auto hahn = qseries::hahn_exton_ratio(zorder);
  RatFun pre = t * q / (t * q - one);
  rep.push_back(run_check("jratio.ri-moments", p, [&]() -> std::optional<std::string> {
    auto mu = moments(lommel::hahn_exton_spec(), count + 1, Var::z).stretch(2).shift(1) * pre;
    return compare(hahn, mu.truncated(zorder));
  }));
  rep.push_back(run_check("jratio.classical-moments", p, [&]() -> std::optional<std::string> {
    auto mu = moments(lambda_prime_spec(), zorder, Var::z);
    for (std::size_t n = 1; n < zorder; n += 2)
      if (!mu[n].is_zero()) return idx("odd moment n", static_cast<long>(n));
    return compare(hahn, mu.shift(1) * pre);
  }));
  auto jack = qseries::jackson_ratio(zorder);
  RatFun jpre = RatFun(Rational(1, 2)) / (one - t * q);
  RISpec<RatFun> ja = stieltjes_spec<RatFun>(jackson_a);
  RISpec<RatFun> jl{[](unsigned) { return RatFun(0); }, [](unsigned) { return RatFun(0); }, jackson_a};
  // mu_n(0,a,0) in w = z^2/4 and mu_n(0,0,lambda') in w = z/2.
  auto a_form = moments(ja, count, Var::z);
  auto l_form = moments(jl, zorder, Var::z);
  rep.push_back(run_check(
      "jratio.jackson-a-form", p,
      [&]() -> std::optional<std::string> {
        for (std::size_t n = 0; 2 * n + 1 < zorder; ++n) {
          RatFun want = jpre * a_form[n] * Rational(Integer(1), Integer(Integer(1) << (2 * n)));
          if (!(jack[2 * n + 1] == want)) return idx("z^", static_cast<long>(2 * n + 1));
        }
        return std::nullopt;
      },
      false, "sum runs over mu_n (z^2/4)^n"));
  rep.push_back(run_check(
      "jratio.jackson-lambda-form", p,
      [&]() -> std::optional<std::string> {
        for (std::size_t n = 0; n < zorder; ++n) {
          if (n % 2 == 1) {
            if (!l_form[n].is_zero()) return idx("odd moment n", static_cast<long>(n));
            continue;
          }
          if (!(l_form[n] == a_form[n / 2])) return idx("mu'_n vs mu_{n/2}, n", static_cast<long>(n));
          if (n + 1 < zorder &&
              !(jack[n + 1] == jpre * l_form[n] * Rational(Integer(1), Integer(Integer(1) << n))))
            return idx("z^", static_cast<long>(n + 1));
        }
        return std::nullopt;
      },
      false, "sum runs over mu'_n (z/2)^n; odd moments vanish"));
  rep.push_back(run_check(
      "jratio.jackson-displayed-sign", p,
      [&]() -> std::optional<std::string> {
        // With (-z^2/4)^n, or (iz/2)^n on even n, each z^{2n+1} coefficient picks up (-1)^n:
        // the displayed sums equal the ratio at iz divided by i.
        bool differs = false;
        for (std::size_t n = 0; 2 * n + 1 < zorder; ++n) {
          RatFun sign = n % 2 ? RatFun(-1) : RatFun(1);
          RatFun shown = jpre * a_form[n] * sign * Rational(Integer(1), Integer(Integer(1) << (2 * n)));
          RatFun shown_l = jpre * l_form[2 * n] * sign * Rational(Integer(1), Integer(Integer(1) << (2 * n)));
          if (!(shown == shown_l)) return idx("display mismatch n", static_cast<long>(n));
          if (!(shown == sign * jack[2 * n + 1])) return idx("z^", static_cast<long>(2 * n + 1));
          if (!(shown == jack[2 * n + 1])) differs = true;
        }
        if (!differs && zorder > 3) return std::string("displayed sign unexpectedly matches");
        return std::nullopt;
      },
      false, "displayed forms use the argument -z^2/4; they agree with the ratio after z -> iz"));
  return rep;
}

}  // namespace qlab::cfrac
