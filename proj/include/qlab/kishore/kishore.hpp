#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qlab/check.hpp"
#include "qlab/qseries/qseries.hpp"

namespace qlab::kishore {

using ring::MultiPoly;
using ring::Rational;
using ring::RatFun;
using ring::Series;
using ring::Var;

enum class Family { hahn_exton, hahn_exton_inverse, jackson, jackson_inverse };

std::string_view family_name(Family f);

struct MuSequence {
  Family family = Family::hahn_exton;
  std::vector<RatFun> values;  // mu_0 .. mu_{order-1}
};

struct BetaCertificate {
  unsigned n = 0;
  MultiPoly poly;  // in Z[q,t,u], u = [nu]_q
  bool nonneg = false;
};

// [nu+j]_q = (1 - t q^j)/(1 - q).
RatFun bracket(unsigned j);

// Coefficient recurrences, n = 0 .. order-1.
MuSequence mu_hahn(std::size_t order);
MuSequence mu_hahn_inverse(std::size_t order);    // mu_n(1/q)
MuSequence mu_jackson(std::size_t order);
MuSequence mu_jackson_inverse(std::size_t order);  // mu^{(1)}_n(1/q)

// Independent oracles: theta_{nu+1}(x)/theta_nu(x) by series division in x.
Series<RatFun> theta_ratio_hahn(std::size_t order);
Series<RatFun> theta_ratio_jackson(std::size_t order);

// Positivity certificates computed inside Z[q,t,u].  Throws std::domain_error
// if a cofactor is not a polynomial.
std::vector<BetaCertificate> beta_hahn(std::size_t order);
std::vector<BetaCertificate> beta_jackson(std::size_t order);

// Exponents of d_n = D_{n+1,nu}; entry k-1 belongs to [nu+k].
std::vector<int> d_exponents(unsigned n);
// prod_k [nu+k]^{e[k-1]} with [nu+k] = u + t[k]_q; throws on a negative exponent.
MultiPoly bracket_product(const std::vector<int>& e);

// u -> (1-t)/(1-q).
RatFun epsilon(const MultiPoly& p);
// q = 1, t = 1, u = nu.
MultiPoly classical_limit(const MultiPoly& p);

// mu_n recovered from a certificate: eps(beta_n) * scale^n [nu+1] / d_n.
RatFun mu_from_beta(const MultiPoly& beta, unsigned n, const RatFun& scale);

// J_{nu+1}(z)/J_nu(z) written as (w/(nu+1)) S_{nu+1}(w)/S_nu(w) in w = z/2, with
// S_nu(w) = sum (-w^2)^n / (n! (nu+1)_n).  Series in w truncated at `order`.
template <class F>
Series<F> classical_ratio(const F& nu, std::size_t order) {
  auto s = [&](const F& base) {
    Series<F> out(Var::z, order);
    F term(1);
    for (std::size_t n = 0; 2 * n < order; ++n) {
      if (n > 0) term = term * F(-1) / (F(static_cast<long>(n)) * (base + F(static_cast<long>(n))));
      out[2 * n] = term;
    }
    return out;
  };
  Series<F> r = s(nu + F(1)) / s(nu);
  return r.shift(1) * (F(1) / (nu + F(1)));
}

// Suites.  `order` counts mu's / beta's (n = 0 .. order-1).
Report check_thm_df(std::size_t order);
Report check_hahn_mirrors(std::size_t order);
Report check_hahn_qbase(std::size_t order);
Report check_jackson(std::size_t order);
Report classical_kishore(std::size_t order);
Report mu_mirrors(std::size_t order);

// f(m,n,k) of the finite Kishore conjecture.
unsigned finite_kishore_exponent(unsigned m, unsigned n, unsigned k);
Report conjecture_finite_kishore(unsigned m_max, unsigned n_max);
Report conjecture_gauss(unsigned n_max, bool primed);

}  // namespace qlab::kishore
