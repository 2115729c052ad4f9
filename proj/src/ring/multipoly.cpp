#include "qlab/ring/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qlab::ring {

Monomial Monomial::var(Var v, unsigned power) {
  Monomial m;
  m.set(v, power);
  return m;
}

void Monomial::set(Var v, unsigned power) {
  if (power > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
  degree_ = degree_ - exp_[index(v)] + power;
  exp_[index(v)] = static_cast<std::uint16_t>(power);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i)
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    unsigned e = unsigned(exp_[i]) * k;
    if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ * k;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[i];
    if (exp_[i] > 1) s += '^' + std::to_string(exp_[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::var(Var v, unsigned power) {
  return monomial(Monomial::var(v, power));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Integer& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  p.normalize_sorted();
  return p;
}

void MultiPoly::normalize_sorted() {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Integer c = terms_[i].coeff;
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) c += terms_[j++].coeff;
    if (c != 0) {
      terms_[out].mono = terms_[i].mono;
      terms_[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Integer MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

unsigned MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& t : terms_) d = std::min(d, t.mono[v]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

Integer MultiPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

bool MultiPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return sgn(t.coeff) >= 0; });
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, subtract ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() < b.size()) return b * a;
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 16);
  for (const auto& tb : b.terms_) {
    for (const auto& ta : a.terms_) {
      Integer& slot = acc[ta.mono * tb.mono];
      mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly r;
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::strong_ordering compare(const MultiPoly& a, const MultiPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].mono <=> b.terms_[i].mono; c != 0) return c;
    int cc = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Integer& c) const {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::divide_content(const Integer& c) const {
  if (c == 1) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& d) const {
  if (d.is_zero()) throw PoleError("exact_div by the zero polynomial");
  if (is_zero()) return MultiPoly{};
  if (d.size() == 1) {
    const auto& [dm, dc] = d.terms_[0];
    MultiPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!dm.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), dc.get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), dc.get_mpz_t());
      r.terms_.push_back({t.mono.quotient(dm), std::move(c)});
    }
    return r;
  }
  // Cheap necessary conditions: leading and trailing terms must divide, and
  // every variable's degree span must fit.
  const Term& lt = d.terms_.front();
  const Term& tt = d.terms_.back();
  if (!lt.mono.divides(terms_.front().mono) || !tt.mono.divides(terms_.back().mono))
    return std::nullopt;
  if (!mpz_divisible_p(terms_.front().coeff.get_mpz_t(), lt.coeff.get_mpz_t()) ||
      !mpz_divisible_p(terms_.back().coeff.get_mpz_t(), tt.coeff.get_mpz_t()))
    return std::nullopt;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (degree(v) < d.degree(v) || min_degree(v) < d.min_degree(v)) return std::nullopt;
  }

  std::map<Monomial, Integer, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<Term> quotient;
  Integer qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lt.mono.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lt.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lt.coeff.get_mpz_t());
    Monomial qm = it->first.quotient(lt.mono);
    rem.erase(it);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      const auto& dt = d.terms_[k];
      auto [slot, inserted] = rem.try_emplace(qm * dt.mono, 0);
      mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), dt.coeff.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.push_back({qm, qc});
  }
  MultiPoly r;
  r.terms_ = std::move(quotient);
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned k = m[v];
    m.set(v, 0);
    buckets[k].push_back({m, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MultiPoly MultiPoly::reflect(std::initializer_list<Var> vars) const {
  std::vector<Term> out = terms_;
  for (Var v : vars) {
    unsigned d = degree(v);
    for (auto& t : out) t.mono.set(v, d - t.mono[v]);
  }
  return from_terms(std::move(out));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << t.mono.to_string();
    }
  }
  return os.str();
}

std::size_t MultiPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ t.mono.hash();
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(t.coeff.get_mpz_t()));
  }
  return h;
}

std::optional<MultiPoly> poly_arith(const MultiPoly& p, const MultiPoly& r, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return p + r;
    case PolyOp::mul:
      return p * r;
    case PolyOp::exact_div:
      return p.exact_div(r);
  }
  return std::nullopt;
}

}  // namespace qlab::ring
