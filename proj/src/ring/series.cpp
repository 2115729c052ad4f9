#include "qlab/ring/series.hpp"

namespace qlab::ring {

namespace {

Series<RatFun> poly_series(const MultiPoly& p, Var v, std::size_t order) {
  Series<RatFun> s(v, order);
  auto cs = p.coefficients_in(v);
  for (std::size_t k = 0; k < cs.size() && k < order; ++k) s[k] = RatFun(cs[k]);
  return s;
}

}  // namespace

Series<RatFun> to_series_in(const RatFun& r, Var v, std::size_t order) {
  Series<RatFun> num = poly_series(r.numerator(), v, order);
  num = num * RatFun(Rational(Integer(1), r.den_content()));
  for (const auto& f : r.factors()) {
    Series<RatFun> d = poly_series(f.poly, v, order);
    if (d[0].is_zero())
      throw PoleError("factor " + f.poly.to_string() + " is not invertible at " +
                      std::string(name(v)) + " = 0");
    Series<RatFun> inv = d.recip();
    for (unsigned k = 0; k < f.mult; ++k) num = num * inv;
  }
  return num;
}

}  // namespace qlab::ring
