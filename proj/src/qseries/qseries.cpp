#include "qlab/qseries/qseries.hpp"

namespace qlab::qseries {

RatFun q_var() { return RatFun::var(Var::q); }
RatFun t_var() { return RatFun::var(Var::t); }

MultiPoly qpoch(const MultiPoly& a, unsigned n) {
  MultiPoly acc(1), aq = a;
  const MultiPoly q = MultiPoly::var(Var::q);
  for (unsigned k = 0; k < n; ++k) {
    acc = acc * (MultiPoly(1) - aq);
    aq = aq * q;
  }
  return acc;
}

MultiPoly qint(unsigned j) {
  MultiPoly s;
  for (unsigned k = 0; k < j; ++k) s += MultiPoly::var(Var::q, k);
  return s;
}

ShiftedQInt qint_shifted(unsigned j) {
  ShiftedQInt r;
  MultiPoly tqj = MultiPoly::var(Var::t) * MultiPoly::var(Var::q, j);
  r.value = RatFun::normalize(MultiPoly(1) - tqj, {{MultiPoly(1) - MultiPoly::var(Var::q), 1}});
  r.positive = MultiPoly::var(Var::u) + MultiPoly::var(Var::t) * qint(j);
  return r;
}

Series<RatFun> hahn_exton_ratio(std::size_t order) {
  return hahn_exton_ratio<RatFun>(q_var(), t_var(), order);
}

Series<RatFun> jackson_ratio(std::size_t order) {
  return jackson_ratio<RatFun>(q_var(), t_var(), order);
}

std::vector<unsigned> kishore_exponents(unsigned n) {
  std::vector<unsigned> e(n);
  for (unsigned k = 1; k <= n; ++k) e[k - 1] = n / k;
  return e;
}

KishoreDenominator kishore_denominator(unsigned n) {
  KishoreDenominator d;
  d.n = n;
  d.exponents = kishore_exponents(n);
  std::vector<std::pair<MultiPoly, unsigned>> factors;
  MultiPoly num(1);
  d.positive = MultiPoly(1);
  unsigned total = 0;
  for (unsigned k = 1; k <= n; ++k) {
    unsigned e = d.exponents[k - 1];
    MultiPoly f = MultiPoly(1) - MultiPoly::var(Var::t) * MultiPoly::var(Var::q, k);
    num = num * f.pow(e);
    d.positive = d.positive * qint_shifted(k).positive.pow(e);
    total += e;
  }
  factors.push_back({MultiPoly(1) - MultiPoly::var(Var::q), total});
  d.value = RatFun::normalize(num, factors);
  return d;
}

}  // namespace qlab::qseries
