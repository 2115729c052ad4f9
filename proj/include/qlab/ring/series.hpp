#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "qlab/ring/ratfun.hpp"
#include "qlab/ring/var.hpp"

namespace qlab::ring {

// Sum of a batch of field elements. RatFun sums share one common denominator.
template <class F>
F sum_of(const std::vector<F>& xs) {
  if constexpr (std::is_same_v<F, RatFun>) {
    return RatFun::sum(xs);
  } else {
    F acc(0);
    for (const auto& x : xs) acc = acc + x;
    return acc;
  }
}

// Truncated power series c_0 + c_1 v + ... + c_{N-1} v^{N-1} + O(v^N).
template <class F>
class Series {
 public:
  Series() = default;
  Series(Var v, std::size_t order) : var_(v), c_(order, F(0)) {}
  Series(Var v, std::vector<F> coeffs) : var_(v), c_(std::move(coeffs)) {}

  static Series constant(Var v, std::size_t order, const F& c) {
    Series s(v, order);
    if (order > 0) s.c_[0] = c;
    return s;
  }
  // c * v^k truncated at `order`.
  static Series monomial(Var v, std::size_t order, const F& c, std::size_t k) {
    Series s(v, order);
    if (k < order) s.c_[k] = c;
    return s;
  }

  Var var() const { return var_; }
  std::size_t order() const { return c_.size(); }
  const F& operator[](std::size_t k) const { return c_.at(k); }
  F& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<F>& coeffs() const { return c_; }

  Series truncated(std::size_t n) const {
    Series r = *this;
    r.c_.resize(std::min(n, c_.size()), F(0));
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    check_var(a, b);
    std::size_t n = std::min(a.order(), b.order());
    Series r(a.var_, n);
    for (std::size_t k = 0; k < n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    check_var(a, b);
    std::size_t n = std::min(a.order(), b.order());
    Series r(a.var_, n);
    for (std::size_t k = 0; k < n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend Series operator-(const Series& a) {
    Series r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    check_var(a, b);
    std::size_t n = std::min(a.order(), b.order());
    Series r(a.var_, n);
    std::vector<F> parts;
    for (std::size_t k = 0; k < n; ++k) {
      parts.clear();
      for (std::size_t i = 0; i <= k; ++i) {
        if (is_zero(a.c_[i]) || is_zero(b.c_[k - i])) continue;
        parts.push_back(a.c_[i] * b.c_[k - i]);
      }
      r.c_[k] = sum_of(parts);
    }
    return r;
  }
  friend Series operator*(const Series& a, const F& s) {
    Series r = a;
    for (auto& x : r.c_)
      if (!is_zero(x)) x = x * s;
    return r;
  }
  friend Series operator*(const F& s, const Series& a) { return a * s; }

  // f / g by coefficient long division; g's constant term must be invertible.
  friend Series operator/(const Series& f, const Series& g) {
    check_var(f, g);
    std::size_t n = std::min(f.order(), g.order());
    if (n == 0) return Series(f.var_, 0);
    if (is_zero(g.c_[0])) throw PoleError("series division by a non-invertible constant term");
    F g0inv = F(1) / g.c_[0];
    Series r(f.var_, n);
    std::vector<F> parts;
    for (std::size_t k = 0; k < n; ++k) {
      parts.clear();
      if (!is_zero(f.c_[k])) parts.push_back(f.c_[k]);
      for (std::size_t i = 0; i < k; ++i) {
        if (is_zero(r.c_[i]) || is_zero(g.c_[k - i])) continue;
        parts.push_back(-(r.c_[i] * g.c_[k - i]));
      }
      F num = sum_of(parts);
      r.c_[k] = is_zero(num) ? F(0) : num * g0inv;
    }
    return r;
  }

  Series recip() const { return Series::constant(var_, order(), F(1)) / *this; }

  // v -> m v.
  Series compose_scale(const F& m) const {
    Series r = *this;
    F p(1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!is_zero(r.c_[k])) r.c_[k] = r.c_[k] * p;
      if (k + 1 < c_.size()) p = p * m;
    }
    return r;
  }
  // Multiplies by v^k, keeping the order.
  Series shift(std::size_t k) const {
    Series r(var_, order());
    for (std::size_t i = 0; i + k < order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }
  // Divides by v^k; the first k coefficients must vanish. Order drops by k.
  Series unshift(std::size_t k) const {
    if (k > order()) throw std::invalid_argument("unshift beyond order");
    for (std::size_t i = 0; i < k; ++i)
      if (!is_zero(c_[i])) throw std::domain_error("unshift of a series with low-order terms");
    return Series(var_, std::vector<F>(c_.begin() + static_cast<long>(k), c_.end()));
  }
  // v -> v^k; the order becomes k*(order-1)+1.
  Series stretch(std::size_t k) const {
    if (c_.empty()) return *this;
    Series r(var_, k * (order() - 1) + 1);
    for (std::size_t i = 0; i < order(); ++i) r.c_[i * k] = c_[i];
    return r;
  }
  // Keeps the coefficients of v^{k*i + offset}, re-indexed by i.
  Series extract(std::size_t k, std::size_t offset) const {
    std::vector<F> out;
    for (std::size_t i = offset; i < order(); i += k) out.push_back(c_[i]);
    return Series(var_, std::move(out));
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(c_[0]))>;
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(fn(x));
    return Series<G>(var_, std::move(out));
  }

  bool is_odd() const {
    for (std::size_t k = 0; k < order(); k += 2)
      if (!is_zero(c_[k])) return false;
    return true;
  }
  bool is_even() const {
    for (std::size_t k = 1; k < order(); k += 2)
      if (!is_zero(c_[k])) return false;
    return true;
  }

  // First index where the two series differ within the common order, or -1.
  friend long first_difference(const Series& a, const Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k < n; ++k)
      if (!(a.c_[k] == b.c_[k])) return static_cast<long>(k);
    return -1;
  }
  friend bool operator==(const Series& a, const Series& b) {
    return a.var_ == b.var_ && a.order() == b.order() && first_difference(a, b) < 0;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < order(); ++k) {
      if (is_zero(c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[k].to_string() + ")";
      if (k > 0) s += "*" + std::string(name(var_)) + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (!s.empty()) s += " + ";
    return s + "O(" + std::string(name(var_)) + "^" + std::to_string(order()) + ")";
  }

 private:
  static void check_var(const Series& a, const Series& b) {
    if (a.var_ != b.var_) throw std::invalid_argument("series in different variables");
  }

  Var var_ = Var::z;
  std::vector<F> c_;
};

// Expansion of a rational function as a power series in v, truncated at
// `order`.  Every denominator atom must have an invertible v-free part.
Series<RatFun> to_series_in(const RatFun& r, Var v, std::size_t order);

}  // namespace qlab::ring
