#include "qlab/kishore/kishore.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "qlab/lommel/lommel.hpp"

namespace qlab::kishore {

using qseries::PhiSpec;
using qseries::phi_series;
using ring::Integer;

namespace {

RatFun Q() { return RatFun::var(Var::q); }
RatFun T() { return RatFun::var(Var::t); }
RatFun qpow(unsigned k) { return RatFun(MultiPoly::var(Var::q, k)); }

std::string idx(const char* what, std::size_t n) { return std::string(what) + "=" + std::to_string(n); }

Params order_param(std::size_t order) { return {{"order", std::to_string(order)}}; }

// First k with a[k] != b[k].
template <class V>
std::optional<std::string> first_mismatch(const std::vector<V>& a, const std::vector<V>& b,
                                          const char* what) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k)
    if (!(a[k] == b[k])) return idx(what, k);
  if (a.size() != b.size()) return std::string("length mismatch");
  return std::nullopt;
}

const MultiPoly& bracket_positive(unsigned k) {
  static std::map<unsigned, MultiPoly> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, qseries::qint_shifted(k).positive).first;
  return it->second;
}

const MultiPoly& bracket_positive_pow(unsigned k, unsigned e) {
  static std::map<std::pair<unsigned, unsigned>, MultiPoly> cache;
  auto key = std::make_pair(k, e);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, bracket_positive(k).pow(e)).first;
  return it->second;
}

std::vector<int> sub(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

std::vector<int> unit(unsigned k) {
  std::vector<int> e(k, 0);
  e[k - 1] = 1;
  return e;
}

RatFun d_value(unsigned n) { return qseries::kishore_denominator(n + 1).value; }

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::hahn_exton: return "hahn_exton";
    case Family::hahn_exton_inverse: return "hahn_exton_inverse";
    case Family::jackson: return "jackson";
    case Family::jackson_inverse: return "jackson_inverse";
  }
  return "";
}

RatFun bracket(unsigned j) { return qseries::qint_shifted(j).value; }

MuSequence mu_hahn(std::size_t order) {
  MuSequence s{Family::hahn_exton, {}};
  auto& mu = s.values;
  if (order > 0) mu.push_back(RatFun(1));
  if (order > 1) mu.push_back(T() / (bracket(1) * bracket(2)));
  for (std::size_t n = 2; n < order; ++n) {
    std::vector<RatFun> parts;
    for (std::size_t k = 2; k + 1 <= n; ++k) parts.push_back(T() * qpow(k) * mu[k - 1] * mu[n - k]);
    parts.push_back((RatFun(1) + T() * qpow(n)) * mu[n - 1]);
    mu.push_back(T() * RatFun::sum(parts) / bracket(1) / bracket(n + 1));
  }
  return s;
}

MuSequence mu_hahn_inverse(std::size_t order) {
  MuSequence s{Family::hahn_exton_inverse, {}};
  auto& mu = s.values;
  if (order > 0) mu.push_back(RatFun(1));
  if (order > 1) mu.push_back(T() * Q() / (bracket(1) * bracket(2)));
  for (std::size_t n = 2; n < order; ++n) {
    std::vector<RatFun> parts;
    for (std::size_t k = 2; k + 1 <= n; ++k) parts.push_back(qpow(n - k) * mu[k - 1] * mu[n - k]);
    parts.push_back((RatFun(1) + T() * qpow(n)) * mu[n - 1]);
    mu.push_back(RatFun::sum(parts) / bracket(1) / bracket(n + 1));
  }
  return s;
}

MuSequence mu_jackson(std::size_t order) {
  MuSequence s{Family::jackson, {}};
  auto& mu = s.values;
  if (order > 0) mu.push_back(RatFun(1));
  for (std::size_t n = 1; n < order; ++n) {
    std::vector<RatFun> parts;
    for (std::size_t k = 0; k < n; ++k) parts.push_back(qpow(k) * mu[k] * mu[n - 1 - k]);
    mu.push_back(T() * Q() * RatFun::sum(parts) / bracket(1) / bracket(n + 1));
  }
  return s;
}

MuSequence mu_jackson_inverse(std::size_t order) {
  MuSequence s{Family::jackson_inverse, {}};
  auto& mu = s.values;
  if (order > 0) mu.push_back(RatFun(1));
  for (std::size_t n = 1; n < order; ++n) {
    std::vector<RatFun> parts;
    for (std::size_t k = 0; k < n; ++k) parts.push_back(qpow(n - 1 - k) * mu[k] * mu[n - 1 - k]);
    mu.push_back(T() * RatFun::sum(parts) / bracket(1) / bracket(n + 1));
  }
  return s;
}

Series<RatFun> theta_ratio_hahn(std::size_t order) {
  RatFun q = Q(), t = T();
  RatFun w = (RatFun(1) - q) * (RatFun(1) - q) * t;
  PhiSpec<RatFun> up{{RatFun(0)}, {t * q * q}, q, w * q, 1, Var::x, order};
  PhiSpec<RatFun> dn{{RatFun(0)}, {t * q}, q, w, 1, Var::x, order};
  return phi_series(up) / phi_series(dn);
}

Series<RatFun> theta_ratio_jackson(std::size_t order) {
  RatFun q = Q(), t = T();
  RatFun w = -((RatFun(1) - q) * (RatFun(1) - q));
  PhiSpec<RatFun> up{{RatFun(0), RatFun(0)}, {t * q * q}, q, w, 1, Var::x, order};
  PhiSpec<RatFun> dn{{RatFun(0), RatFun(0)}, {t * q}, q, w, 1, Var::x, order};
  return phi_series(up) / phi_series(dn);
}

std::vector<int> d_exponents(unsigned n) {
  std::vector<int> e(n + 1);
  for (unsigned k = 1; k <= n + 1; ++k) e[k - 1] = static_cast<int>((n + 1) / k);
  return e;
}

MultiPoly bracket_product(const std::vector<int>& e) {
  MultiPoly p(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0)
      throw std::domain_error("cofactor is not a polynomial: [nu+" + std::to_string(i + 1) +
                              "] has exponent " + std::to_string(e[i]));
    if (e[i] > 0) p = p * bracket_positive_pow(static_cast<unsigned>(i + 1), static_cast<unsigned>(e[i]));
  }
  return p;
}

std::vector<BetaCertificate> beta_hahn(std::size_t order) {
  std::vector<MultiPoly> b;
  const MultiPoly t = MultiPoly::var(Var::t);
  for (std::size_t n = 0; n < order; ++n) {
    if (n < 2) {
      b.push_back(MultiPoly(1));
      continue;
    }
    unsigned un = static_cast<unsigned>(n);
    std::vector<int> dn = d_exponents(un);
    MultiPoly acc;
    for (unsigned k = 2; k + 1 <= un; ++k) {
      auto e = sub(sub(sub(dn, d_exponents(k - 1)), d_exponents(un - k)), unit(un + 1));
      acc += t * MultiPoly::var(Var::q, k) * bracket_product(e) * (b[k - 1] * b[n - k]);
    }
    auto e = sub(sub(sub(dn, d_exponents(un - 1)), unit(1)), unit(un + 1));
    acc += (MultiPoly(1) + t * MultiPoly::var(Var::q, un)) * bracket_product(e) * b[n - 1];
    b.push_back(std::move(acc));
  }
  std::vector<BetaCertificate> out;
  for (std::size_t n = 0; n < b.size(); ++n)
    out.push_back({static_cast<unsigned>(n), b[n], b[n].all_coefficients_nonnegative()});
  return out;
}

std::vector<BetaCertificate> beta_jackson(std::size_t order) {
  std::vector<MultiPoly> b;
  for (std::size_t n = 0; n < order; ++n) {
    if (n == 0) {
      b.push_back(MultiPoly(1));
      continue;
    }
    unsigned un = static_cast<unsigned>(n);
    std::vector<int> dn = d_exponents(un);
    MultiPoly acc;
    for (unsigned k = 0; k < un; ++k) {
      auto e = sub(sub(sub(dn, d_exponents(k)), d_exponents(un - 1 - k)), unit(un + 1));
      acc += MultiPoly::var(Var::q, k) * bracket_product(e) * (b[k] * b[n - 1 - k]);
    }
    b.push_back(std::move(acc));
  }
  std::vector<BetaCertificate> out;
  for (std::size_t n = 0; n < b.size(); ++n)
    out.push_back({static_cast<unsigned>(n), b[n], b[n].all_coefficients_nonnegative()});
  return out;
}

RatFun epsilon(const MultiPoly& p) {
  auto cs = p.coefficients_in(Var::u);
  if (cs.empty()) return RatFun(0);
  const unsigned top = static_cast<unsigned>(cs.size() - 1);
  const MultiPoly one_t = MultiPoly(1) - MultiPoly::var(Var::t);
  const MultiPoly one_q = MultiPoly(1) - MultiPoly::var(Var::q);
  MultiPoly num, tp(1);
  std::vector<MultiPoly> qp{MultiPoly(1)};
  for (unsigned j = 1; j <= top; ++j) qp.push_back(qp.back() * one_q);
  for (unsigned j = 0; j <= top; ++j) {
    if (!cs[j].is_zero()) num += cs[j] * tp * qp[top - j];
    tp = tp * one_t;
  }
  if (top == 0) return RatFun(num);
  return RatFun::normalize(num, {{one_q, top}});
}

MultiPoly classical_limit(const MultiPoly& p) {
  return p.evaluate<MultiPoly>([](Var v) -> MultiPoly {
    switch (v) {
      case Var::q:
      case Var::t: return MultiPoly(1);
      case Var::u: return MultiPoly::var(Var::nu);
      default: return MultiPoly::var(v);
    }
  });
}

RatFun mu_from_beta(const MultiPoly& beta, unsigned n, const RatFun& scale) {
  return epsilon(beta) * scale.pow(static_cast<int>(n)) * bracket(1) / d_value(n);
}

Report check_thm_df(std::size_t order) {
  Report rep;
  auto p = order_param(order);
  std::vector<BetaCertificate> beta;
  rep.push_back(run_check("thm-df.beta-anchors", p, [&]() -> std::optional<std::string> {
    beta = beta_hahn(order);
    const MultiPoly one(1);
    const MultiPoly b2 = one + MultiPoly::var(Var::q, 2) * MultiPoly::var(Var::t);
    if (order > 0 && beta[0].poly != one) return "beta_0 = " + beta[0].poly.to_string();
    if (order > 1 && beta[1].poly != one) return "beta_1 = " + beta[1].poly.to_string();
    if (order > 2 && beta[2].poly != b2) return "beta_2 = " + beta[2].poly.to_string();
    return std::nullopt;
  }));
  if (beta.empty()) return rep;
  rep.push_back(run_check("thm-df.beta-nonneg", p, [&]() -> std::optional<std::string> {
    for (const auto& b : beta)
      if (!b.nonneg) return idx("n", b.n);
    return std::nullopt;
  }));
  rep.push_back(run_check(
      "thm-df.beta-literal-cofactor", p,
      [&]() -> std::optional<std::string> {
        // With d_n/(d_{n-1}[nu+n+1]) as the second cofactor, n = 2 gives
        // (1+q^2 t)[nu+1], not 1+q^2 t.
        if (order < 3) return std::nullopt;
        auto e = sub(sub(d_exponents(2), d_exponents(1)), unit(3));
        MultiPoly lit = (MultiPoly(1) + MultiPoly::var(Var::t) * MultiPoly::var(Var::q, 2)) * bracket_product(e);
        if (lit == beta[2].poly) return "literal cofactor reproduces beta_2";
        return std::nullopt;
      },
      false, "second cofactor needs an extra [nu+1] in the denominator"));
  MuSequence mu;
  rep.push_back(run_check("thm-df.beta-vs-recurrence", p, [&]() -> std::optional<std::string> {
    mu = mu_hahn(order);
    for (std::size_t n = 0; n < order; ++n)
      if (!(mu_from_beta(beta[n].poly, static_cast<unsigned>(n), T()) == mu.values[n])) return idx("n", n);
    return std::nullopt;
  }));
  rep.push_back(run_check("thm-df.recurrence-vs-oracle", p, [&]() -> std::optional<std::string> {
    auto f = theta_ratio_hahn(order);
    return first_mismatch(mu.values, f.coeffs(), "n");
  }));
  rep.push_back(run_check("thm-df.j-ratio", p, [&]() -> std::optional<std::string> {
    // J_{nu+1}((1-q)z;1/q)/J_nu((1-q)z;1/q) from the inverse-base series.
    auto lhs = qseries::hahn_exton_ratio_inverse_base(Q(), T(), 2 * order).compose_scale(RatFun(1) - Q());
    for (std::size_t n = 1; n <= order; ++n) {
      RatFun want = -(epsilon(beta[n - 1].poly) * (T() * Q()).pow(static_cast<int>(n)) / d_value(n - 1));
      if (!(lhs[2 * n - 1] == want)) return idx("z^", 2 * n - 1);
      if (2 * n - 2 > 0 && !lhs[2 * n - 2].is_zero()) return idx("z^", 2 * n - 2);
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_hahn_mirrors(std::size_t order) {
  Report rep;
  auto p = order_param(order);
  MuSequence mu, inv;
  rep.push_back(run_check("hahn.recurrence-vs-oracle", p, [&]() -> std::optional<std::string> {
    mu = mu_hahn(order);
    auto f = theta_ratio_hahn(order);
    return first_mismatch(mu.values, f.coeffs(), "n");
  }));
  rep.push_back(run_check("hahn.inverse-recurrence", p, [&]() -> std::optional<std::string> {
    inv = mu_hahn_inverse(order);
    for (std::size_t n = 0; n < order; ++n)
      if (!(mu.values[n].invert_vars({Var::q, Var::t}) == inv.values[n])) return idx("n", n);
    return std::nullopt;
  }));
  rep.push_back(run_check("hahn.mirror", p, [&]() -> std::optional<std::string> {
    for (std::size_t n = 1; n < order; ++n)
      if (!(T().pow(static_cast<int>(n) - 1) * inv.values[n] == Q() * mu.values[n])) return idx("n", n);
    return std::nullopt;
  }));
  return rep;
}

Report check_hahn_qbase(std::size_t order) {
  Report rep;
  auto p = order_param(order);
  const RatFun q = Q(), t = T(), one(1);
  std::vector<BetaCertificate> beta = beta_hahn(order);
  auto nd = [&](std::size_t n) { return epsilon(beta[n - 1].poly) / d_value(n - 1); };  // N_n / D_n
  Series<RatFun> qbase = qseries::hahn_exton_ratio_qbase(q, t, 2 * order).compose_scale(one - q);
  Series<RatFun> inverse = qseries::hahn_exton_ratio_inverse_base(q, t, 2 * order).compose_scale(one - q);

  rep.push_back(run_check("hahn.qbase-coefficients", p, [&]() -> std::optional<std::string> {
    for (std::size_t n = 1; n <= order; ++n) {
      RatFun want = nd(n) * q.pow(static_cast<int>(n)) * t;
      if (n == 1) want = want + (one - q);
      if (!(qbase[2 * n - 1] == want)) return idx("z^", 2 * n - 1);
    }
    return std::nullopt;
  }));
  rep.push_back(run_check(
      "hahn.qbase-vs-inverse", p,
      [&]() -> std::optional<std::string> {
        for (std::size_t n = 1; n <= order; ++n) {
          RatFun b = qbase[2 * n - 1];
          if (n == 1) b = b - (one - q);
          if (!(-inverse[2 * n - 1] == t.pow(static_cast<int>(n) - 1) * b)) return idx("z^", 2 * n - 1);
        }
        return std::nullopt;
      },
      false, "compared as -A_n = t^{n-1}(B_n - (1-q)[n=1]) on z^{2n-1}"));
  rep.push_back(run_check("hahn.inverse-as-qbase", p, [&]() -> std::optional<std::string> {
    PhiSpec<RatFun> up{{RatFun(0)}, {t * q * q}, q, t * q * q * (one - q) * (one - q), 2, Var::z, 2 * order};
    PhiSpec<RatFun> dn{{RatFun(0)}, {t * q}, q, t * q * (one - q) * (one - q), 2, Var::z, 2 * order};
    auto rhs = (phi_series(up) / phi_series(dn)).shift(1) * (-(q * t * (one - q)) / (one - t * q));
    long k = first_difference(inverse, rhs);
    if (k >= 0) return idx("z^", static_cast<std::size_t>(k));
    return std::nullopt;
  }));
  rep.push_back(run_check(
      "hahn.shifted-argument", p,
      [&]() -> std::optional<std::string> {
        PhiSpec<RatFun> up{{RatFun(0)}, {t * q * q}, q, q * q * (one - q) * (one - q), 2, Var::z, 2 * order};
        PhiSpec<RatFun> dn{{RatFun(0)}, {t * q}, q, q * (one - q) * (one - q), 2, Var::z, 2 * order};
        auto lhs = (phi_series(up) / phi_series(dn)).shift(1) * (q * (one - q) / (one - t * q));
        for (std::size_t n = 1; n <= order; ++n)
          if (!(lhs[2 * n - 1] == nd(n) * q.pow(static_cast<int>(n)))) return idx("z^", 2 * n - 1);
        return std::nullopt;
      },
      false, "both sides divided by q^{(nu-1)/2}, principal branch for q^{(nu+1)/2}"));
  rep.push_back(run_check(
      "hahn.tnu-ratio", p,
      [&]() -> std::optional<std::string> {
        // T_{nu+1}(x)/T_nu(x) from the basic hypergeometric form of T_nu.
        RatFun w = (one - q) * (one - q) * t;
        PhiSpec<RatFun> up{{RatFun(0)}, {t * q * q}, q, w * q, 1, Var::x, order + 1};
        PhiSpec<RatFun> dn{{RatFun(0)}, {t * q}, q, w, 1, Var::x, order + 1};
        auto ratio = (phi_series(up) / phi_series(dn)).shift(1) * (t * (one - q) / (one - t * q));
        for (std::size_t n = 1; n <= order; ++n)
          if (!(ratio[n] == t.pow(static_cast<int>(n)) * nd(n))) return idx("x^", n);
        return std::nullopt;
      },
      false, "coefficient of x^n is t^n N_n/D_n; the displayed form omits t^n"));
  return rep;
}

Report mu_mirrors(std::size_t order) {
  Report rep = check_hahn_mirrors(order);
  auto p = order_param(order);
  rep.push_back(run_check("jackson.mirror", p, [&]() -> std::optional<std::string> {
    auto mu = mu_jackson(order), inv = mu_jackson_inverse(order);
    for (std::size_t n = 0; n < order; ++n) {
      if (!(mu.values[n] == Q().pow(static_cast<int>(n)) * inv.values[n])) return idx("n", n);
      if (!(mu.values[n].invert_vars({Var::q, Var::t}) == inv.values[n])) return idx("substitution n", n);
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_jackson(std::size_t order) {
  Report rep;
  auto p = order_param(order);
  const RatFun q = Q(), t = T(), one(1);
  MuSequence mu;
  rep.push_back(run_check("jackson.recurrence-vs-oracle", p, [&]() -> std::optional<std::string> {
    mu = mu_jackson(order);
    return first_mismatch(mu.values, theta_ratio_jackson(order).coeffs(), "n");
  }));
  rep.push_back(run_check(
      "jackson.j1-vs-j2", {{"order", "21"}},
      [&]() -> std::optional<std::string> {
        for (unsigned shift = 1; shift <= 2; ++shift) {
          RatFun c = t * q.pow(static_cast<int>(shift));  // q^{nu'+1}
          PhiSpec<RatFun> j1{{RatFun(0), RatFun(0)}, {c}, q, RatFun(Rational(-1, 4)), 2, Var::z, 21};
          PhiSpec<RatFun> j2{{}, {c}, q, -(c * RatFun(Rational(1, 4))), 2, Var::z, 21};
          auto euler = qseries::euler_product(q, RatFun(Rational(-1, 4)), 2, Var::z, 21);
          long k = first_difference(euler * phi_series(j1), phi_series(j2));
          if (k >= 0) return "nu+" + std::to_string(shift - 1) + " " + idx("z^", static_cast<std::size_t>(k));
        }
        return std::nullopt;
      },
      false, "(-z^2/4;q)_inf expanded by Euler's 0phi0 formula"));
  std::vector<BetaCertificate> beta;
  rep.push_back(run_check("jackson.beta-nonneg", p, [&]() -> std::optional<std::string> {
    beta = beta_jackson(order);
    for (const auto& b : beta)
      if (!b.nonneg) return idx("n", b.n);
    return std::nullopt;
  }));
  if (beta.empty()) return rep;
  rep.push_back(run_check("jackson.beta-vs-recurrence", p, [&]() -> std::optional<std::string> {
    for (std::size_t n = 0; n < order; ++n)
      if (!(mu_from_beta(beta[n].poly, static_cast<unsigned>(n), q * t) == mu.values[n])) return idx("n", n);
    return std::nullopt;
  }));
  Series<RatFun> qratio = qseries::jackson_ratio(q, t, 2 * order).compose_scale(one - q);
  rep.push_back(run_check(
      "jackson.ratio-vs-mu", p,
      [&]() -> std::optional<std::string> {
        for (std::size_t n = 0; n < order; ++n) {
          RatFun want = mu.values[n] / bracket(1) * Rational(Integer(1), Integer(Integer(1) << (2 * n + 1)));
          if (!(qratio[2 * n + 1] == want)) return idx("z^", 2 * n + 1);
        }
        return std::nullopt;
      },
      false, "sum runs over mu_n (z/2)^{2n}"));
  rep.push_back(run_check("jackson.ratio-coefficients", p, [&]() -> std::optional<std::string> {
    for (std::size_t n = 1; n <= order; ++n) {
      RatFun want = epsilon(beta[n - 1].poly) / d_value(n - 1) * (q * t).pow(static_cast<int>(n) - 1) *
                    Rational(Integer(1), Integer(Integer(1) << (2 * n - 1)));
      if (!(qratio[2 * n - 1] == want)) return idx("z^", 2 * n - 1);
    }
    return std::nullopt;
  }));
  rep.push_back(run_check("jackson.mirror", p, [&]() -> std::optional<std::string> {
    auto inv = mu_jackson_inverse(order);
    for (std::size_t n = 0; n < order; ++n) {
      if (!(mu.values[n] == q.pow(static_cast<int>(n)) * inv.values[n])) return idx("n", n);
      if (!(mu.values[n].invert_vars({Var::q, Var::t}) == inv.values[n])) return idx("substitution n", n);
    }
    return std::nullopt;
  }));
  Series<RatFun> iratio = qseries::jackson_ratio(one / q, one / t, 2 * order).compose_scale(one - q);
  rep.push_back(run_check(
      "jackson.inverse-vs-q", p,
      [&]() -> std::optional<std::string> {
        for (std::size_t n = 0; n < order; ++n)
          if (!(iratio[2 * n + 1] == -(t * q.pow(static_cast<int>(n) + 1)) * qratio[2 * n + 1]))
            return idx("z^", 2 * n + 1);
        return std::nullopt;
      },
      false, "z^{2n+1} coefficients, q^{nu+1/2} (q^{1/2})^{2n+1} = t q^{n+1}"));
  rep.push_back(run_check(
      "jackson.inverse-coefficients", p,
      [&]() -> std::optional<std::string> {
        for (std::size_t n = 1; n <= order; ++n) {
          RatFun want = -(epsilon(beta[n - 1].poly) / d_value(n - 1) * t.pow(static_cast<int>(n)) *
                          q.pow(2 * static_cast<int>(n) - 1) *
                          Rational(Integer(1), Integer(Integer(1) << (2 * n - 1))));
          if (!(iratio[2 * n - 1] == want)) return idx("z^", 2 * n - 1);
        }
        return std::nullopt;
      },
      false, "power is q^{(nu+2)n-1}; the displayed q^{nu n-1} already differs at n=1"));
  return rep;
}

Report classical_kishore(std::size_t order) {
  Report rep;
  auto p = order_param(order);
  const RatFun nu = RatFun::var(Var::nu);
  std::vector<BetaCertificate> beta;
  rep.push_back(run_check("classical.numerators", p, [&]() -> std::optional<std::string> {
    beta = beta_hahn(order);
    auto r = classical_ratio(nu, 2 * order);
    for (std::size_t n = 1; n <= order; ++n) {
      MultiPoly dn(1);
      for (unsigned k = 1; k <= n; ++k)
        dn = dn * (MultiPoly::var(Var::nu) + MultiPoly(static_cast<long>(k))).pow(static_cast<unsigned>(n / k));
      auto num = (r[2 * n - 1] * RatFun(dn)).as_polynomial();
      if (!num) return idx("not a polynomial, n", n);
      if (!num->all_coefficients_nonnegative()) return idx("negative coefficient, n", n);
      if (*num != classical_limit(beta[n - 1].poly)) return idx("differs from beta at q=t=1, n", n);
      if (!r[2 * n - 2].is_zero()) return idx("even coefficient, w^", 2 * n - 2);
    }
    return std::nullopt;
  }));
  rep.push_back(run_check("classical.tan", {{"nu", "-1/2"}}, [&]() -> std::optional<std::string> {
    // J_{1/2}(z)/J_{-1/2}(z) in z = 2w, against sin/cos by series division.
    const std::size_t n = 12;
    auto r = classical_ratio(Rational(-1, 2), n).compose_scale(Rational(1, 2));
    Series<Rational> sn(Var::z, n), cs(Var::z, n);
    Rational f(1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) f = f / Rational(static_cast<long>(k));
      long sign = (k / 2) % 2 == 0 ? 1 : -1;
      (k % 2 ? sn : cs)[k] = f * Rational(sign);
    }
    auto tan = sn / cs;
    if (first_difference(r, tan) >= 0) return idx("tan z^", static_cast<std::size_t>(first_difference(r, tan)));
    if (!(r[1] == Rational(1)) || !(r[3] == Rational(1, 3)) || !(r[5] == Rational(2, 15)))
      return std::string("anchor z + z^3/3 + 2z^5/15");
    return std::nullopt;
  }));
  return rep;
}

unsigned finite_kishore_exponent(unsigned m, unsigned n, unsigned k) {
  if (2 * k == m) return 1;
  unsigned a = (n + 1) / (k + 1);
  unsigned b = (n + m + 1 >= 2 * k) ? (n + m - 2 * k + 1) / (m - k + 1) : 0;
  return std::max(a, b);
}

Report conjecture_finite_kishore(unsigned m_max, unsigned n_max) {
  Report rep;
  const RatFun nu = RatFun::var(Var::nu);
  rep.push_back(run_check(
      "finite-kishore.hurwitz-limit", {{"m_max", std::to_string(m_max)}, {"n_max", std::to_string(n_max)}},
      [&]() -> std::optional<std::string> {
        auto limit = classical_ratio(nu, 2 * n_max + 2);
        for (unsigned m = 0; m <= m_max; ++m) {
          auto r = lommel::classical_ratio_series(m, 2 * n_max + 2);
          for (unsigned n = 0; n <= std::min(m, n_max); ++n)
            if (!(r[2 * n + 1] == limit[2 * n + 1])) return "m=" + std::to_string(m) + " " + idx("n", n);
        }
        return std::nullopt;
      },
      false, "coefficient n already equals the Bessel ratio's once m >= n"));
  for (unsigned m = 0; m <= m_max; ++m) {
    // R_{m,nu+2}(x)/R_{m+1,nu+1}(x) as a series in y = x/2, odd part only.
    auto ratio = lommel::classical_ratio_series(m, 2 * n_max + 2);
    for (unsigned n = 0; n <= n_max; ++n) {
      Params ps{{"m", std::to_string(m)}, {"n", std::to_string(n)}};
      rep.push_back(run_check(
          "finite-kishore", ps,
          [&]() -> std::optional<std::string> {
            MultiPoly d(1);
            for (unsigned k = 0; k <= m; ++k)
              d = d * (MultiPoly::var(Var::nu) + MultiPoly(static_cast<long>(k + 1)))
                          .pow(finite_kishore_exponent(m, n, k));
            auto num = (ratio[2 * n + 1] * RatFun(d)).as_polynomial();
            if (!num) return std::string("not a polynomial");
            if (!num->all_coefficients_nonnegative()) return "negative coefficient in " + num->to_string();
            return std::nullopt;
          },
          true));
    }
  }
  return rep;
}

Report conjecture_gauss(unsigned n_max, bool primed) {
  Report rep;
  const RatFun a = RatFun::var(Var::a), b = RatFun::var(Var::b), c = RatFun::var(Var::c), q = Q();
  const std::size_t order = n_max + 1;
  PhiSpec<RatFun> up{{a * q, primed ? b : b * q}, {c * q}, q, RatFun(1), 1, Var::z, order};
  PhiSpec<RatFun> dn{{a, b}, {c}, q, RatFun(1), 1, Var::z, order};
  Series<RatFun> gamma;
  std::string setup_error;
  try {
    gamma = phi_series(up) / phi_series(dn);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  const char* id = primed ? "gauss-prime" : "gauss";
  for (unsigned n = 0; n <= n_max; ++n) {
    Params ps{{"n", std::to_string(n)}};
    rep.push_back(run_check(
        id, ps,
        [&]() -> std::optional<std::string> {
          if (!setup_error.empty()) return setup_error;
          const MultiPoly cc = MultiPoly::var(Var::c);
          MultiPoly d(1);
          for (unsigned k = 0; k <= n; ++k)
            d = d * (MultiPoly(1) - cc * MultiPoly::var(Var::q, k)).pow((n + 1) / (k + 1));
          RatFun v = gamma[n] / RatFun(MultiPoly(1) - cc) * RatFun(d);
          if (!v.as_polynomial()) return std::string("not a polynomial: ") + v.to_string();
          return std::nullopt;
        },
        true));
  }
  return rep;
}

}  // namespace qlab::kishore
