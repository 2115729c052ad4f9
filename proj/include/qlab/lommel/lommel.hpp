#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qlab/check.hpp"
#include "qlab/ring/laurent.hpp"
#include "qlab/ring/ratfun.hpp"
#include "qlab/ring/series.hpp"

namespace qlab::lommel {

using ring::LaurentPoly;
using ring::MultiPoly;
using ring::Rational;
using ring::RatFun;
using ring::Series;
using ring::Var;

// Classical R_{m,nu}(z) as a Laurent polynomial in z (exponents -m..0), with
// `nu` any element of Q(nu).
LaurentPoly<RatFun> lommel_classical(unsigned m, const RatFun& nu);

// R_{m,nu+2}(x)/R_{m+1,nu+1}(x) as a power series in y = x/2.
Series<RatFun> classical_ratio_series(unsigned m, std::size_t order);

enum class Base { q, q_inverse };

// R_{m,nu+s}(z;q) or R_{m,nu+s}(z;1/q).  `poly` = clearing * R has
// coefficients in Z[q,t]; clearing is a monomial (1 in base q).
struct QLommel {
  LaurentPoly<RatFun> poly;
  RatFun clearing{1};
  LaurentPoly<RatFun> value() const { return poly * clearing.inv(); }
};
QLommel lommel_q(unsigned m, unsigned shift, Base base);

// Modified R~_{m,nu+s}(x;1/q), coefficients of x^0..x^m.
std::vector<RatFun> modified_lommel(unsigned m, unsigned shift);

// Type R_I recurrence p_{n+1} = (x - b_n) p_n - (a_n x + lambda_n) p_{n-1}.
template <class F>
struct RISpec {
  std::function<F(unsigned)> b;
  std::function<F(unsigned)> a;
  std::function<F(unsigned)> lambda;
};

// Polynomials in x, coefficients lowest degree first.
template <class F>
using Poly = std::vector<F>;

template <class F>
std::vector<Poly<F>> ri_poly_seq(const RISpec<F>& spec, unsigned M) {
  std::vector<Poly<F>> p;
  p.push_back(Poly<F>{F(1)});
  for (unsigned n = 0; n < M; ++n) {
    const Poly<F>& cur = p.back();
    Poly<F> next(cur.size() + 1, F(0));
    F bn = spec.b(n);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] = next[i + 1] + cur[i];
      next[i] = next[i] - bn * cur[i];
    }
    if (n > 0) {
      F an = spec.a(n), ln = spec.lambda(n);
      const Poly<F>& pm = p[p.size() - 2];
      for (std::size_t i = 0; i < pm.size(); ++i) {
        next[i + 1] = next[i + 1] - an * pm[i];
        next[i] = next[i] - ln * pm[i];
      }
    }
    p.push_back(std::move(next));
  }
  return p;
}

// p*_n(x) = x^n p_n(1/x) for p of degree n.
template <class F>
Poly<F> ri_star(const Poly<F>& p) {
  return Poly<F>(p.rbegin(), p.rend());
}

template <class F>
std::vector<Poly<F>> ri_star(const std::vector<Poly<F>>& seq) {
  std::vector<Poly<F>> out;
  for (const auto& p : seq) out.push_back(ri_star(p));
  return out;
}

// delta: index shift by one in every sequence.
template <class F>
RISpec<F> ri_shift(const RISpec<F>& s) {
  return {[b = s.b](unsigned n) { return b(n + 1); }, [a = s.a](unsigned n) { return a(n + 1); },
          [l = s.lambda](unsigned n) { return l(n + 1); }};
}

// delta p*_m / p*_{m+1} as a series in x.
template <class F>
Series<F> ri_ratio_series(const RISpec<F>& spec, unsigned m, std::size_t order) {
  auto num = ri_star(ri_poly_seq(ri_shift(spec), m).back());
  auto den = ri_star(ri_poly_seq(spec, m + 1).back());
  Series<F> a(Var::x, order), b(Var::x, order);
  for (std::size_t i = 0; i < num.size() && i < order; ++i) a[i] = num[i];
  for (std::size_t i = 0; i < den.size() && i < order; ++i) b[i] = den[i];
  return a / b;
}

// b_n = tq^{n+1}/(1-tq^{n+1}), a_n = t^2 q^{2n+1}/((1-tq^n)(1-tq^{n+1})), lambda = 0.
RISpec<RatFun> hahn_exton_spec();

// R_{m,nu+2}(z;1/q)/R_{m+1,nu+1}(z;1/q) as a series in z.
Series<RatFun> lommel_ratio_series(unsigned m, std::size_t order);
// -q^nu z times the same ratio.
Series<RatFun> lommel_shape_series(unsigned m, std::size_t order);

Report check_lommel(unsigned m_max, std::size_t order);

}  // namespace qlab::lommel
