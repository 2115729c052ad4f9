#pragma once

#include <cstddef>
#include <vector>

#include "qlab/ring/ratfun.hpp"
#include "qlab/ring/series.hpp"

namespace qlab::qseries {

using ring::Integer;
using ring::MultiPoly;
using ring::Rational;
using ring::RatFun;
using ring::Series;
using ring::Var;

// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}) for a monomial a, as a polynomial.
MultiPoly qpoch(const MultiPoly& a, unsigned n);

// The same product over any field, with explicit base.
template <class F>
F qpoch_value(const F& a, const F& q, unsigned n) {
  F acc(1), aq = a;
  for (unsigned k = 0; k < n; ++k) {
    acc = acc * (F(1) - aq);
    aq = aq * q;
  }
  return acc;
}

// [j]_q = 1 + q + ... + q^{j-1}.
MultiPoly qint(unsigned j);

// [nu+j]_q in its two guises.
struct ShiftedQInt {
  RatFun value;        // (1 - t q^j)/(1 - q) in Q(q,t)
  MultiPoly positive;  // u + t [j]_q in Z[q,t,u]
};
ShiftedQInt qint_shifted(unsigned j);

// Basic hypergeometric series r phi s (a_1..a_r; b_1..b_s; q, arg * v^power),
// including the (q;q)_n denominator, truncated at `order` in v.
template <class F>
struct PhiSpec {
  std::vector<F> upper;
  std::vector<F> lower;
  F q;
  F arg;
  std::size_t power = 1;
  Var var = Var::z;
  std::size_t order = 1;
};

template <class F>
Series<F> phi_series(const PhiSpec<F>& s) {
  Series<F> out(s.var, s.order);
  const long r = static_cast<long>(s.upper.size());
  const long sl = static_cast<long>(s.lower.size());
  const long exp = sl + 1 - r;
  std::vector<F> up_pow(s.upper), low_pow(s.lower);  // a_i q^n, b_j q^n
  F term(1);       // n-th coefficient before the v-power is applied
  F qn(1);         // q^n
  for (std::size_t n = 0; n * s.power < s.order; ++n) {
    if (n > 0) {
      // term_n = term_{n-1} * prod(1 - a q^{n-1}) / prod(1 - b q^{n-1}) / (1 - q^n)
      //          * ((-1) q^{n-1})^{exp} * arg
      // Each factor is divided separately so RatFun keeps them as distinct atoms.
      F num(1);
      std::vector<F> dens;
      for (auto& a : up_pow) {
        num = num * (F(1) - a);
        a = a * s.q;
      }
      for (auto& b : low_pow) {
        dens.push_back(F(1) - b);
        b = b * s.q;
      }
      F qprev = qn;  // q^{n-1}
      qn = qn * s.q;
      dens.push_back(F(1) - qn);
      F sign_q = -qprev;
      if (exp >= 0) {
        for (long e = 0; e < exp; ++e) num = num * sign_q;
      } else {
        for (long e = 0; e < -exp; ++e) dens.push_back(sign_q);
      }
      term = term * num * s.arg;
      for (const auto& d : dens) {
        if (ring::is_zero(d)) throw ring::PoleError("vanishing lower q-Pochhammer in phi_series");
        term = term / d;
      }
    }
    out[n * s.power] = term;
  }
  return out;
}

// J_{nu+1}(z;1/q)/J_nu(z;1/q) with t = q^nu, via the q-base form
//   -qt z/(1-qt) * 1phi1(0;tq^2;q,tq^2 z^2) / 1phi1(0;tq;q,tq z^2).
template <class F>
Series<F> hahn_exton_ratio(const F& q, const F& t, std::size_t order) {
  PhiSpec<F> up{{F(0)}, {t * q * q}, q, t * q * q, 2, Var::z, order};
  PhiSpec<F> dn{{F(0)}, {t * q}, q, t * q, 2, Var::z, order};
  Series<F> r = phi_series(up) / phi_series(dn);
  F pre = -(q * t) / (F(1) - q * t);
  return r.shift(1) * pre;
}

// The same ratio through the inverse-base form
//   z/(1 - q^{-nu-1}) * 1phi1(0;q^{-nu-2};1/q,z^2/q) / 1phi1(0;q^{-nu-1};1/q,z^2/q).
template <class F>
Series<F> hahn_exton_ratio_inverse_base(const F& q, const F& t, std::size_t order) {
  F qi = F(1) / q, ti = F(1) / t;
  PhiSpec<F> up{{F(0)}, {ti * qi * qi}, qi, qi, 2, Var::z, order};
  PhiSpec<F> dn{{F(0)}, {ti * qi}, qi, qi, 2, Var::z, order};
  Series<F> r = phi_series(up) / phi_series(dn);
  F pre = F(1) / (F(1) - ti * qi);
  return r.shift(1) * pre;
}

// J_{nu+1}(z;q)/J_nu(z;q) in the usual base:
//   z/(1-qt) * 1phi1(0;tq^2;q,q z^2) / 1phi1(0;tq;q,q z^2).
template <class F>
Series<F> hahn_exton_ratio_qbase(const F& q, const F& t, std::size_t order) {
  PhiSpec<F> up{{F(0)}, {t * q * q}, q, q, 2, Var::z, order};
  PhiSpec<F> dn{{F(0)}, {t * q}, q, q, 2, Var::z, order};
  Series<F> r = phi_series(up) / phi_series(dn);
  return r.shift(1) * (F(1) / (F(1) - q * t));
}

// J^{(1)}_{nu+1}(z;q)/J^{(1)}_nu(z;q) =
//   (z/2)/(1-qt) * 2phi1(0,0;tq^2;q,-z^2/4) / 2phi1(0,0;tq;q,-z^2/4).
template <class F>
Series<F> jackson_ratio(const F& q, const F& t, std::size_t order) {
  F w = F(Rational(-1, 4));
  PhiSpec<F> up{{F(0), F(0)}, {t * q * q}, q, w, 2, Var::z, order};
  PhiSpec<F> dn{{F(0), F(0)}, {t * q}, q, w, 2, Var::z, order};
  Series<F> r = phi_series(up) / phi_series(dn);
  F pre = F(Rational(1, 2)) / (F(1) - q * t);
  return r.shift(1) * pre;
}

Series<RatFun> hahn_exton_ratio(std::size_t order);
Series<RatFun> jackson_ratio(std::size_t order);

// D_{n,nu}(q) = prod_{k=1}^n [k+nu]_q^{floor(n/k)}.
struct KishoreDenominator {
  unsigned n = 0;
  std::vector<unsigned> exponents;  // exponents[k-1] = floor(n/k)
  RatFun value;                     // in Q(q,t)
  MultiPoly positive;               // in Z[q,t,u]
};
KishoreDenominator kishore_denominator(unsigned n);

// Exponent vector of D_{n,nu}, index k-1 for [nu+k].
std::vector<unsigned> kishore_exponents(unsigned n);

// (x;q)_infinity = 0phi0(-;-;q,x), with x = coeff * v^power.
template <class F>
Series<F> euler_product(const F& q, const F& coeff, std::size_t power, Var v, std::size_t order) {
  PhiSpec<F> s{{}, {}, q, coeff, power, v, order};
  return phi_series(s);
}

RatFun q_var();
RatFun t_var();

}  // namespace qlab::qseries
