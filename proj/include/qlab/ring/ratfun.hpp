#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/ring/multipoly.hpp"
#include "qlab/ring/rational.hpp"

namespace qlab::ring {

// One factor of a denominator.  `prime` marks atoms known to be irreducible
// (single variables, linear forms, and cyclotomic values at a primitive
// monomial); the reduction logic may skip trial divisions for those.
struct Factor {
  MultiPoly poly;
  unsigned mult = 1;
  bool prime = false;
};

// Rational function num / (content * prod poly_i^mult_i).
//
// Every denominator atom is primitive with positive leading coefficient, the
// atoms are sorted and pairwise distinct, the numerator is not exactly
// divisible by any atom, and gcd(content(num), content) = 1.  Zero is stored
// as 0/1.  Equality is decided by subtraction, so it does not depend on how
// the denominator happens to be split into atoms.
class RatFun {
 public:
  RatFun() = default;
  RatFun(long c);              // NOLINT(google-explicit-constructor)
  RatFun(const Integer& c);    // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c);   // NOLINT(google-explicit-constructor)
  RatFun(const MultiPoly& p);  // NOLINT(google-explicit-constructor)

  static RatFun var(Var v);
  // num / prod(d_i^k_i) with the multiset given explicitly.
  static RatFun normalize(const MultiPoly& num,
                          const std::vector<std::pair<MultiPoly, unsigned>>& den);
  // Sum of many terms over one common denominator.
  static RatFun sum(const std::vector<RatFun>& terms);

  const MultiPoly& numerator() const { return num_; }
  const Integer& den_content() const { return den_content_; }
  const std::vector<Factor>& factors() const { return den_; }
  MultiPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty() && den_content_ == 1; }
  std::optional<MultiPoly> as_polynomial() const;
  std::optional<Rational> as_constant() const;
  // True if every variable of the numerator and denominator is among `vars`.
  bool only_uses(std::initializer_list<Var> vars) const;

  RatFun inv() const;
  RatFun pow(int k) const;

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Evaluation into any field F; `value(v)` supplies each variable present.
  // Throws PoleError if a denominator atom vanishes.
  template <class F, class Lookup>
  F evaluate(Lookup&& value) const;

  Rational eval(const std::map<Var, Rational>& point) const;
  RatFun substitute(const std::map<Var, RatFun>& images) const;
  // v -> 1/v for each listed variable, by exponent reflection.
  RatFun invert_vars(std::initializer_list<Var> vars) const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  Integer den_content_ = 1;
  std::vector<Factor> den_;

  void reduce(const std::vector<bool>& test);
  void reduce_all();
  void reduce_content();
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }

RatFun ratfun_normalize(const MultiPoly& num,
                        const std::vector<std::pair<MultiPoly, unsigned>>& den);

// Content-and-atom split P = unit * prod atoms^mult.
struct Atomized {
  Integer unit;
  std::vector<Factor> atoms;
};
Atomized atomize(const MultiPoly& p);

// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic(unsigned d);

template <class F, class Lookup>
F RatFun::evaluate(Lookup&& value) const {
  F n = num_.template evaluate<F>(value);
  F d = F(den_content_);
  for (const auto& f : den_) {
    F v = f.poly.template evaluate<F>(value);
    if (::qlab::ring::is_zero(v)) throw PoleError("denominator factor " + f.poly.to_string() + " vanishes");
    for (unsigned k = 0; k < f.mult; ++k) d = d * v;
  }
  return n / d;
}

}  // namespace qlab::ring
