#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/ring/rational.hpp"
#include "qlab/ring/var.hpp"

namespace qlab::ring {

// Exponent vector over the fixed alphabet.
//
// Ordering is graded lexicographic: total degree first, then the exponent
// vectors compared lexicographically with q most significant.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(Var v, unsigned power = 1);

  unsigned operator[](Var v) const { return exp_[index(v)]; }
  unsigned at(std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(Var v, unsigned power);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial pow(unsigned k) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exp_ <=> b.exp_;
  }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<std::uint16_t, kNumVars> exp_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Integer coeff;
};

// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
// Terms are kept sorted by descending monomial order with no zero coefficient,
// so two polynomials are equal iff their term lists are equal.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const Integer& c);

  static MultiPoly var(Var v, unsigned power = 1);
  static MultiPoly monomial(const Monomial& m, const Integer& c = 1);
  // Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Integer constant_term() const;

  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  unsigned total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }

  // Non-negative GCD of the coefficients (0 for the zero polynomial).
  Integer content() const;
  // GCD of all monomials.
  Monomial monomial_content() const;
  bool all_coefficients_nonnegative() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  // Total order used to sort denominator factors deterministically.
  friend std::strong_ordering compare(const MultiPoly& a, const MultiPoly& b);

  MultiPoly mul_monomial(const Monomial& m, const Integer& c = 1) const;
  MultiPoly pow(unsigned k) const;
  // Divides every coefficient by c; precondition: c divides the content.
  MultiPoly divide_content(const Integer& c) const;

  // Exact division. Returns the quotient iff the remainder is zero.
  std::optional<MultiPoly> exact_div(const MultiPoly& d) const;

  // Coefficients of v^k as polynomials in the remaining variables.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  // Evaluates with every variable that occurs replaced by a value of F.
  // `value(v)` must return the value for each variable present.
  template <class F, class Lookup>
  F evaluate(Lookup&& value) const;

  // Exponent reflection e_v -> deg_v - e_v in each listed variable, so that
  // P(1/v) = v^{-deg_v} * reflect(P).
  MultiPoly reflect(std::initializer_list<Var> vars) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize_sorted();
  std::vector<Term> terms_;
};

enum class PolyOp { add, mul, exact_div };

// Single entry point over the ring operations; exact_div yields nullopt when
// the division leaves a nonzero remainder.
std::optional<MultiPoly> poly_arith(const MultiPoly& p, const MultiPoly& r, PolyOp op);

template <class F, class Lookup>
F MultiPoly::evaluate(Lookup&& value) const {
  // Power caches per variable, grown on demand.
  std::array<std::vector<F>, kNumVars> powers;
  std::array<bool, kNumVars> used{};
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (t.mono.at(i) > 0) used[i] = true;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (!used[i]) continue;
    powers[i].push_back(F(1));
    powers[i].push_back(value(static_cast<Var>(i)));
  }
  auto power = [&](std::size_t i, unsigned k) -> const F& {
    auto& p = powers[i];
    while (p.size() <= k) p.push_back(p.back() * p[1]);
    return p[k];
  };
  std::vector<F> parts;
  parts.reserve(terms_.size());
  for (const auto& t : terms_) {
    F term{F(t.coeff)};
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (t.mono.at(i) > 0) term = term * power(i, t.mono.at(i));
    parts.push_back(std::move(term));
  }
  if constexpr (requires { F::sum(parts); }) {
    return F::sum(parts);
  } else {
    F acc(0);
    for (const auto& x : parts) acc = acc + x;
    return acc;
  }
}

}  // namespace qlab::ring
