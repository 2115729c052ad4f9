#include "qlab/lommel/lommel.hpp"

#include <algorithm>
#include <string>

#include "qlab/qseries/qseries.hpp"

namespace qlab::lommel {

namespace {

RatFun Q() { return RatFun::var(Var::q); }
RatFun T() { return RatFun::var(Var::t); }
RatFun qpow(int k) { return Q().pow(k); }

std::string idx(const char* what, long n) { return std::string(what) + "=" + std::to_string(n); }

// Largest multiplicity of the atom v in r's denominator.
unsigned monomial_mult(const RatFun& r, Var v) {
  const MultiPoly x = MultiPoly::var(v);
  for (const auto& f : r.factors())
    if (f.poly == x) return f.mult;
  return 0;
}

// c_k = 1 - q^{nu+s+k} in the chosen base.
RatFun lommel_coeff(unsigned s, unsigned k, Base base) {
  if (base == Base::q) return RatFun(1) - T() * qpow(static_cast<int>(s + k));
  return RatFun(1) - T().inv() * qpow(-static_cast<int>(s + k));
}

Series<RatFun> window(const LaurentPoly<RatFun>& p, long low, std::size_t order) {
  Series<RatFun> s(Var::z, order);
  for (std::size_t k = 0; k < order; ++k) s[k] = p.coeff(low + static_cast<long>(k));
  return s;
}

}  // namespace

LaurentPoly<RatFun> lommel_classical(unsigned m, const RatFun& nu) {
  LaurentPoly<RatFun> prev, cur(RatFun(1));
  for (unsigned n = 0; n < m; ++n) {
    RatFun c = RatFun(2) * (RatFun(static_cast<long>(n)) + nu);
    LaurentPoly<RatFun> next = (cur * c).shift(-1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Series<RatFun> classical_ratio_series(unsigned m, std::size_t order) {
  const RatFun nu = RatFun::var(Var::nu);
  auto num = lommel_classical(m, nu + RatFun(2));
  auto den = lommel_classical(m + 1, nu + RatFun(1));
  // x^{m+1} R(x) with x = 2y.
  auto in_y = [&](const LaurentPoly<RatFun>& r) {
    Series<RatFun> s(Var::z, order);
    for (long k = r.min_exp(); k <= r.max_exp(); ++k) {
      long e = k + static_cast<long>(m) + 1;
      if (e < 0 || static_cast<std::size_t>(e) >= order) continue;
      s[static_cast<std::size_t>(e)] = r.coeff(k) * RatFun(2).pow(static_cast<int>(e));
    }
    return s;
  };
  return in_y(num) / in_y(den);
}

QLommel lommel_q(unsigned m, unsigned shift, Base base) {
  LaurentPoly<RatFun> prev, cur(RatFun(1));
  const LaurentPoly<RatFun> z = LaurentPoly<RatFun>::monomial(RatFun(1), 1);
  for (unsigned k = 0; k < m; ++k) {
    LaurentPoly<RatFun> step = z + LaurentPoly<RatFun>::monomial(lommel_coeff(shift, k, base), -1);
    LaurentPoly<RatFun> next = step * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  QLommel out;
  if (base == Base::q) {
    out.poly = cur;
    return out;
  }
  unsigned aq = 0, at = 0;
  for (const auto& c : cur.coeffs()) {
    aq = std::max(aq, monomial_mult(c, Var::q));
    at = std::max(at, monomial_mult(c, Var::t));
  }
  out.clearing = RatFun(MultiPoly::var(Var::q, aq) * MultiPoly::var(Var::t, at));
  out.poly = cur * out.clearing;
  return out;
}

std::vector<RatFun> modified_lommel(unsigned m, unsigned shift) {
  std::vector<RatFun> prev, cur{RatFun(1)};
  const RatFun t = T();
  for (unsigned k = 0; k < m; ++k) {
    RatFun tq = t * qpow(static_cast<int>(shift + k));
    RatFun b = tq / (RatFun(1) - tq);
    std::vector<RatFun> next(cur.size() + 1, RatFun(0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] = next[i + 1] + cur[i];
      next[i] = next[i] - b * cur[i];
    }
    if (k > 0) {
      RatFun tq1 = t * qpow(static_cast<int>(shift + k) - 1);
      RatFun a = t * t * qpow(2 * static_cast<int>(shift + k) - 1) / ((RatFun(1) - tq1) * (RatFun(1) - tq));
      for (std::size_t i = 0; i < prev.size(); ++i) next[i + 1] = next[i + 1] - a * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RISpec<RatFun> hahn_exton_spec() {
  RISpec<RatFun> s;
  s.b = [](unsigned n) {
    RatFun tq = T() * qpow(static_cast<int>(n) + 1);
    return tq / (RatFun(1) - tq);
  };
  s.a = [](unsigned n) {
    RatFun t = T();
    return t * t * qpow(2 * static_cast<int>(n) + 1) /
           ((RatFun(1) - t * qpow(static_cast<int>(n))) * (RatFun(1) - t * qpow(static_cast<int>(n) + 1)));
  };
  s.lambda = [](unsigned) { return RatFun(0); };
  return s;
}

Series<RatFun> lommel_ratio_series(unsigned m, std::size_t order) {
  QLommel num = lommel_q(m, 2, Base::q_inverse);
  QLommel den = lommel_q(m + 1, 1, Base::q_inverse);
  long low = -static_cast<long>(m) - 1;
  Series<RatFun> r = window(num.poly, low, order) / window(den.poly, low, order);
  return r * (den.clearing / num.clearing);
}

Series<RatFun> lommel_shape_series(unsigned m, std::size_t order) {
  return lommel_ratio_series(m, order).shift(1) * (-T());
}

Report check_lommel(unsigned m_max, std::size_t order) {
  Report rep;
  const RatFun nu = RatFun::var(Var::nu), t = T(), q = Q(), one(1);
  using LP = LaurentPoly<RatFun>;
  rep.push_back(run_check("lommel.classical-anchors", {}, [&]() -> std::optional<std::string> {
    if (lommel_classical(0, nu) != LP(one)) return std::string("R_0");
    if (lommel_classical(1, nu) != LP::monomial(RatFun(2) * nu, -1)) return std::string("R_1");
    LP r2 = LP::monomial(RatFun(4) * nu * (nu + one), -2) - LP(one);
    if (lommel_classical(2, nu) != r2) return std::string("R_2");
    return std::nullopt;
  }));
  rep.push_back(run_check("lommel.q-anchors", {}, [&]() -> std::optional<std::string> {
    LP z = LP::monomial(one, 1);
    if (lommel_q(0, 0, Base::q).poly != LP(one)) return std::string("R_0");
    LP r1 = z + LP::monomial(one - t, -1);
    if (lommel_q(1, 0, Base::q).poly != r1) return std::string("R_1");
    LP r2 = LP::monomial(one, 2) + LP(one - t - t * q) + LP::monomial((one - t) * (one - t * q), -2);
    if (lommel_q(2, 0, Base::q).poly != r2) return std::string("R_2");
    return std::nullopt;
  }));
  Params pm{{"m_max", std::to_string(m_max)}};
  rep.push_back(run_check("lommel.support-and-recurrence", pm, [&]() -> std::optional<std::string> {
    for (Base base : {Base::q, Base::q_inverse})
      for (unsigned s = 0; s <= 2; ++s) {
        std::vector<LP> vals;
        for (unsigned m = 0; m <= m_max + 1; ++m) {
          QLommel r = lommel_q(m, s, base);
          if (!r.clearing.as_polynomial() || !r.clearing.numerator().is_monomial())
            return idx("clearing not a monomial, m", m);
          for (long k = r.poly.min_exp(); k <= r.poly.max_exp(); ++k) {
            const RatFun c = r.poly.coeff(k);
            if (c.is_zero()) continue;
            if ((k + static_cast<long>(m)) % 2 != 0 || k < -static_cast<long>(m) || k > static_cast<long>(m))
              return idx("support, m", m);
            auto p = c.as_polynomial();
            if (!p || !c.only_uses({Var::q, Var::t})) return idx("coefficient not in Z[q,t], m", m);
          }
          vals.push_back(r.value());
        }
        LP z = LP::monomial(one, 1);
        for (unsigned m = 1; m <= m_max; ++m) {
          LP step = z + LP::monomial(lommel_coeff(s, m, base), -1);
          if (vals[m + 1] != step * vals[m] - vals[m - 1]) return idx("recurrence, m", m);
        }
      }
    return std::nullopt;
  }));
  rep.push_back(run_check("lommel.modified", pm, [&]() -> std::optional<std::string> {
    auto m1 = modified_lommel(1, 1);
    if (m1.size() != 2 || !(m1[1] == one) || !(m1[0] == -(t * q / (one - t * q))))
      return std::string("m=1 anchor");
    for (unsigned s = 1; s <= 2; ++s)
      for (unsigned m = 0; m <= m_max; ++m) {
        // R~_m(x;1/q) = x^{m/2} R_m(x^{-1/2};1/q) / (q^{-nu-s};q^{-1})_m.
        LP r = lommel_q(m, s, Base::q_inverse).value();
        RatFun poch = qseries::qpoch_value(t.inv() * qpow(-static_cast<int>(s)), q.inv(), m);
        auto mod = modified_lommel(m, s);
        for (unsigned j = 0; j <= m; ++j)
          if (!(mod[j] * poch == r.coeff(static_cast<long>(m) - 2 * static_cast<long>(j))))
            return "s=" + std::to_string(s) + " " + idx("m", m);
      }
    return std::nullopt;
  }));
  rep.push_back(run_check("lommel.type-ri", pm, [&]() -> std::optional<std::string> {
    auto spec = hahn_exton_spec();
    auto seq = ri_poly_seq(spec, m_max + 1);
    for (unsigned m = 0; m <= m_max + 1; ++m) {
      if (seq[m] != modified_lommel(m, 1)) return idx("p_n, n", m);
      // p*_m = x^{m/2} R_{m,nu+1}(x^{1/2};1/q) / (q^{-nu-1};q^{-1})_m.
      auto star = ri_star(seq[m]);
      LP r = lommel_q(m, 1, Base::q_inverse).value();
      RatFun poch = qseries::qpoch_value(t.inv() * q.inv(), q.inv(), m);
      for (unsigned j = 0; j <= m; ++j)
        if (!(star[j] * poch == r.coeff(2 * static_cast<long>(j) - static_cast<long>(m))))
          return idx("p*_m, m", m);
    }
    return std::nullopt;
  }));
  Params po{{"m_max", std::to_string(m_max)}, {"order", std::to_string(order)}};
  rep.push_back(run_check(
      "lommel.stabilization", po,
      [&]() -> std::optional<std::string> {
        auto hahn = qseries::hahn_exton_ratio(order);
        for (unsigned m = 0; m <= m_max; ++m) {
          auto r = lommel_ratio_series(m, order);
          if (!r.is_odd()) return idx("even coefficient, m", m);
          for (unsigned n = 0; n <= m && 2 * n + 1 < order; ++n)
            if (!(r[2 * n + 1] == hahn[2 * n + 1])) return "m=" + std::to_string(m) + " " + idx("z^", 2 * n + 1);
        }
        return std::nullopt;
      },
      false, "coefficient of z^{2n+1} agrees with the J ratio for m >= n"));
  return rep;
}

}  // namespace qlab::lommel
