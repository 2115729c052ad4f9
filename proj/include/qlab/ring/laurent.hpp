#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qlab/ring/series.hpp"

namespace qlab::ring {

// Finitely supported sum_k c_k z^k, k in Z.  Stored trimmed: the first and
// last coefficients are nonzero unless the polynomial is zero.
template <class F>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const F& c) : low_(0), c_{c} { trim(); }
  LaurentPoly(long low, std::vector<F> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

  static LaurentPoly monomial(const F& c, long k) { return LaurentPoly(k, {c}); }

  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return low_; }
  long max_exp() const { return low_ + static_cast<long>(c_.size()) - 1; }
  F coeff(long k) const {
    if (k < low_ || k > max_exp()) return F(0);
    return c_[static_cast<std::size_t>(k - low_)];
  }
  const std::vector<F>& coeffs() const { return c_; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return combine(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return combine(a, b, true);
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const F& s) {
    if (::qlab::ring::is_zero(s)) return {};
    LaurentPoly r = a;
    for (auto& x : r.c_)
      if (!::qlab::ring::is_zero(x)) x = x * s;
    r.trim();
    return r;
  }
  friend LaurentPoly operator*(const F& s, const LaurentPoly& a) { return a * s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::size_t n = a.c_.size() + b.c_.size() - 1;
    std::vector<F> out;
    out.reserve(n);
    std::vector<F> parts;
    for (std::size_t k = 0; k < n; ++k) {
      parts.clear();
      std::size_t lo = k >= b.c_.size() ? k - b.c_.size() + 1 : 0;
      for (std::size_t i = lo; i <= k && i < a.c_.size(); ++i) {
        if (::qlab::ring::is_zero(a.c_[i]) || ::qlab::ring::is_zero(b.c_[k - i])) continue;
        parts.push_back(a.c_[i] * b.c_[k - i]);
      }
      out.push_back(sum_of(parts));
    }
    return LaurentPoly(a.low_ + b.low_, std::move(out));
  }
  // Multiplies by z^k.
  LaurentPoly shift(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.low_ != b.low_ || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(fn(x));
    return LaurentPoly<G>(low_, std::move(out));
  }

  // z^{-min_exp} * this as a power series in v truncated at `order`.
  Series<F> to_series(Var v, std::size_t order) const {
    Series<F> s(v, order);
    for (std::size_t i = 0; i < c_.size() && i < order; ++i) s[i] = c_[i];
    return s;
  }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (::qlab::ring::is_zero(c_[i])) continue;
      long k = low_ + static_cast<long>(i);
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].to_string() + ")";
      if (k != 0) s += "*" + var + "^" + std::to_string(k);
    }
    return s;
  }

 private:
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    long lo = std::min(a.low_, b.low_);
    long hi = std::max(a.max_exp(), b.max_exp());
    std::vector<F> out(static_cast<std::size_t>(hi - lo + 1), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      out[static_cast<std::size_t>(a.low_ - lo) + i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      F& slot = out[static_cast<std::size_t>(b.low_ - lo) + i];
      slot = subtract ? slot - b.c_[i] : slot + b.c_[i];
    }
    return LaurentPoly(lo, std::move(out));
  }

  void trim() {
    std::size_t first = 0;
    while (first < c_.size() && ::qlab::ring::is_zero(c_[first])) ++first;
    if (first == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = c_.size();
    while (::qlab::ring::is_zero(c_[last - 1])) --last;
    c_ = std::vector<F>(c_.begin() + static_cast<long>(first), c_.begin() + static_cast<long>(last));
    low_ += static_cast<long>(first);
  }

  long low_ = 0;
  std::vector<F> c_;
};

}  // namespace qlab::ring
