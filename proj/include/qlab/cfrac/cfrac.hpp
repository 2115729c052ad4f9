#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "qlab/check.hpp"
#include "qlab/lommel/lommel.hpp"
#include "qlab/ring/ratfun.hpp"
#include "qlab/ring/series.hpp"

namespace qlab::cfrac {

using lommel::RISpec;
using ring::PoleError;
using ring::Rational;
using ring::RatFun;
using ring::Series;
using ring::Var;

namespace detail {

template <class F>
struct is_series : std::false_type {};
template <class F>
struct is_series<Series<F>> : std::true_type {};

template <class V>
bool invertible(const V& v) {
  return !::qlab::ring::is_zero(v);
}
template <class F>
bool invertible(const Series<F>& s) {
  return s.order() == 0 || !::qlab::ring::is_zero(s[0]);
}

template <class V>
V one() {
  if constexpr (is_series<V>::value) {
    return V();
  } else {
    return V(1);
  }
}
// An order-0 series prefactor stands for 1.
template <class V>
V apply(const V& pre, const V& v) {
  if constexpr (is_series<V>::value) {
    if (pre.order() == 0) return v;
  }
  return pre * v;
}

}  // namespace detail

// prefactor * K_{i=0}^{depth} (a_i / b_i).  V is a field element or a Series.
template <class V>
struct CFSpec {
  std::function<V(unsigned)> a;
  std::function<V(unsigned)> b;
  unsigned depth = 0;
  V prefactor = detail::one<V>();  // an empty series prefactor stands for 1
};

template <class V>
V k_finite(const CFSpec<V>& s) {
  V tail = s.b(s.depth);
  for (unsigned i = s.depth;; --i) {
    if (!detail::invertible(tail)) throw PoleError("continued fraction: zero denominator at level " + std::to_string(i));
    V cur = s.a(i) / tail;
    if (i == 0) return detail::apply(s.prefactor, cur);
    tail = s.b(i - 1) + cur;
  }
}

// Convergents A_n/B_n of the three-term recurrence, read top-down.
template <class V>
V k_topdown(const CFSpec<V>& s) {
  V a_prev2 = V(1), a_prev = V(0);  // A_{-2}, A_{-1}
  V b_prev2 = V(0), b_prev = V(1);  // B_{-2}, B_{-1}
  for (unsigned i = 0; i <= s.depth; ++i) {
    V ai = s.a(i), bi = s.b(i);
    V an = bi * a_prev + ai * a_prev2;
    V bn = bi * b_prev + ai * b_prev2;
    a_prev2 = a_prev;
    a_prev = an;
    b_prev2 = b_prev;
    b_prev = bn;
  }
  if (!detail::invertible(b_prev)) throw PoleError("continued fraction: zero final denominator");
  return detail::apply(s.prefactor, a_prev / b_prev);
}

// a_i -> a_i c_{i-1} c_i, b_i -> b_i c_i, prefactor -> prefactor / c_{-1}.
template <class V>
CFSpec<V> equivalence_transform(const CFSpec<V>& s, std::function<V(int)> c) {
  for (int i = -1; i <= static_cast<int>(s.depth); ++i)
    if (!detail::invertible(c(i))) throw PoleError("equivalence transform: zero scale c_" + std::to_string(i));
  CFSpec<V> r;
  r.a = [a = s.a, c](unsigned i) { return a(i) * c(static_cast<int>(i) - 1) * c(static_cast<int>(i)); };
  r.b = [b = s.b, c](unsigned i) { return b(i) * c(static_cast<int>(i)); };
  r.depth = s.depth;
  r.prefactor = s.prefactor / c(-1);
  return r;
}

// sum_n mu_n^{<=m} v^n = 1/(1 - b_0 v - (a_1 v + l_1 v^2)/(1 - b_1 v - ...)), levels 0..bound.
// Level k only reaches v^k and beyond, so the tail at level k is kept to order - k.
template <class F>
Series<F> moments(const RISpec<F>& spec, unsigned bound, std::size_t order, Var v = Var::z) {
  if (order == 0) return Series<F>(v, 0);
  unsigned depth = static_cast<unsigned>(std::min<std::size_t>(bound, order));
  Series<F> tail(v, 0);
  for (unsigned k = depth + 1; k-- > 0;) {
    std::size_t n = order - std::min<std::size_t>(k, order - 1);
    Series<F> den(v, n);
    den[0] = F(1);
    if (n > 1) den[1] = -spec.b(k);
    if (k < depth) {
      F ak = spec.a(k + 1), lk = spec.lambda(k + 1);
      for (std::size_t i = 0; i < tail.order(); ++i) {
        if (::qlab::ring::is_zero(tail[i])) continue;
        if (i + 1 < n && !::qlab::ring::is_zero(ak)) den[i + 1] = den[i + 1] - ak * tail[i];
        if (i + 2 < n && !::qlab::ring::is_zero(lk)) den[i + 2] = den[i + 2] - lk * tail[i];
      }
    }
    tail = den.recip();
  }
  return tail;
}

// Unbounded moments: depth = order + 1.
template <class F>
Series<F> moments(const RISpec<F>& spec, std::size_t order, Var v = Var::z) {
  return moments(spec, static_cast<unsigned>(order + 1), order, v);
}

// Series in q of the bounded skew-shape fraction
//   qxy/(1 - q(x+y) - q^3 xy/(1 - q^2(x+y) - ... - q^{2m+1}xy/(1 - q^{m+1}(x+y)))).
Series<RatFun> shape_cf_series(unsigned m, std::size_t order);

// Truncation at `depth` of the fraction
//   t^2 q z^2/(1 - q(t + t z^2) - t^2 q^3 z^2/(1 - q^2(t + t z^2) - ...)) as a series in z.
Series<RatFun> bessel_shape_cf(unsigned depth, std::size_t order);

// Type R_I form of the q-Norlund fraction.
template <class F>
RISpec<F> norlund_spec(const F& a, const F& b, const F& c, const F& q) {
  auto qp = [q](unsigned k) {
    F r(1);
    for (unsigned i = 0; i < k; ++i) r = r * q;
    return r;
  };
  return {[=](unsigned m) { return (a + b - a * b * qp(m) - a * b * qp(m + 1)) * qp(m) / (F(1) - c * qp(m)); },
          [=](unsigned m) {
            if (m == 0) return F(0);
            return -((F(1) - a * qp(m)) * (F(1) - b * qp(m)) * c * qp(m - 1)) /
                   ((F(1) - c * qp(m - 1)) * (F(1) - c * qp(m)));
          },
          [=](unsigned m) {
            if (m == 0) return F(0);
            return (F(1) - a * qp(m)) * (F(1) - b * qp(m)) * a * b * qp(2 * m - 1) /
                   ((F(1) - c * qp(m - 1)) * (F(1) - c * qp(m)));
          }};
}

// beta_k of Heine's fraction, k >= 1.
template <class F>
F heine_beta(unsigned k, const F& a, const F& b, const F& c, const F& q) {
  auto qp = [&](unsigned e) {
    F r(1);
    for (unsigned i = 0; i < e; ++i) r = r * q;
    return r;
  };
  unsigned n = k / 2;
  if (k % 2 == 1)
    return (F(1) - b * qp(n)) * (a - c * qp(n)) * qp(n) / ((F(1) - c * qp(2 * n)) * (F(1) - c * qp(2 * n + 1)));
  return (F(1) - a * qp(n)) * (b - c * qp(n)) * qp(n - 1) / ((F(1) - c * qp(2 * n - 1)) * (F(1) - c * qp(2 * n)));
}

// A fraction 1/(1 - l_1 v/(1 - l_2 v/...)) as an R_I spec with b = lambda = 0.
template <class F>
RISpec<F> stieltjes_spec(std::function<F(unsigned)> l) {
  return {[](unsigned) { return F(0); }, [l](unsigned n) { return n == 0 ? F(0) : l(n); },
          [](unsigned) { return F(0); }};
}

struct RandomConfig {
  std::uint64_t seed = 20240601;
  unsigned points = 30;
  std::size_t order = 13;
};

// Suites.  The four-variable suites expand symbolically through z^4 (two_cont through z^8)
// and check the full order at random rational points.
Report check_cf_engine(std::size_t order, std::uint64_t seed);
Report check_prop_dp_p(std::size_t order, std::uint64_t seed);
Report check_lemma_equivalence(std::uint64_t seed);
Report check_eq4(std::size_t order);
Report norlund_cf(std::size_t order, const RandomConfig& rnd);
Report heine_cf(std::size_t order, const RandomConfig& rnd);
Report two_cont(std::size_t order, const RandomConfig& rnd);
Report jratio_moment_identities(std::size_t order);

}  // namespace qlab::cfrac
