#include "qlab/ring/ratfun.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qlab::ring {

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and atom splitting

const std::vector<long>& cyclotomic(unsigned d) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (d == 0) throw std::invalid_argument("cyclotomic(0)");
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  // x^d - 1 divided by Phi_e for every proper divisor e of d.  Computed
  // without recursion into the locked function.
  std::vector<unsigned> divisors;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) divisors.push_back(e);
  for (unsigned e : divisors) {
    if (cache.count(e)) continue;
    std::vector<long> p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (unsigned f : divisors) {
      if (f >= e || e % f != 0) continue;
      const auto& phi = cache.at(f);  // f < e, so already present
      // Divide p by the monic phi, highest degree first.
      std::size_t dp = p.size() - 1, df = phi.size() - 1;
      std::vector<long> quot(dp - df + 1, 0);
      for (std::size_t k = dp + 1; k-- > df;) {
        long c = p[k];
        quot[k - df] = c;
        for (std::size_t j = 0; j <= df; ++j) p[k - df + j] -= c * phi[j];
      }
      p = std::move(quot);
    }
    cache.emplace(e, std::move(p));
  }
  return cache.at(d);
}

namespace {

unsigned exponent_gcd(const Monomial& m) {
  unsigned g = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) g = std::gcd(g, m.at(i));
  return g;
}

Monomial monomial_root(const Monomial& m, unsigned g) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.set(static_cast<Var>(i), m.at(i) / g);
  return r;
}

MultiPoly cyclotomic_at(unsigned d, const Monomial& n) {
  const auto& phi = cyclotomic(d);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < phi.size(); ++k)
    if (phi[k] != 0) terms.push_back({n.pow(static_cast<unsigned>(k)), Integer(phi[k])});
  return MultiPoly::from_terms(std::move(terms));
}

std::strong_ordering factor_order(const Factor& a, const Factor& b) {
  return compare(a.poly, b.poly);
}

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(),
            [](const Factor& a, const Factor& b) { return factor_order(a, b) < 0; });
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().poly == f.poly) {
      out.back().mult += f.mult;
    } else {
      out.push_back(std::move(f));
    }
  }
  fs = std::move(out);
}

// ---------------------------------------------------------------------------
// Fast non-divisibility filter over F_p, p = 2^61 - 1.

constexpr std::uint64_t kP = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kP ? s - kP : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const Integer& c) {
  std::uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), kP);
  return r;
}

// Univariate image of p in F_p[v], other variables fixed to `vals`.
std::vector<std::uint64_t> univariate_image(const MultiPoly& p, Var v,
                                            const std::array<std::uint64_t, kNumVars>& vals) {
  std::vector<std::uint64_t> out(p.degree(v) + 1, 0);
  std::array<std::vector<std::uint64_t>, kNumVars> pw;
  for (const auto& t : p.terms()) {
    std::uint64_t c = reduce_mod(t.coeff);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono.at(i);
      if (e == 0 || i == index(v)) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(1);
      while (cache.size() <= e) cache.push_back(mulmod(cache.back(), vals[i]));
      c = mulmod(c, cache[e]);
    }
    unsigned k = t.mono[v];
    out[k] = addmod(out[k], c);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Returns false only when divisor certainly does not divide p.
bool maybe_divisible(const MultiPoly& p, const MultiPoly& divisor) {
  // Pick a variable of the divisor with the smallest positive degree.
  std::optional<Var> best;
  unsigned best_deg = ~0u;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    unsigned d = divisor.degree(v);
    if (d > 0 && d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  if (!best) return true;
  std::mt19937_64 rng(0x51ed2705u ^ divisor.size());
  std::array<std::uint64_t, kNumVars> vals{};
  for (auto& x : vals) x = rng() % (kP - 2) + 2;
  auto a = univariate_image(divisor, *best, vals);
  if (a.empty()) return true;
  auto n = univariate_image(p, *best, vals);
  if (n.size() < a.size()) return n.empty();
  std::uint64_t lead_inv = powmod(a.back(), kP - 2);
  std::size_t da = a.size() - 1;
  for (std::size_t k = n.size(); k-- > da;) {
    std::uint64_t c = mulmod(n[k], lead_inv);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= da; ++j) n[k - da + j] = submod(n[k - da + j], mulmod(c, a[j]));
  }
  for (std::size_t k = 0; k < da; ++k)
    if (n[k] != 0) return false;
  return true;
}

bool try_divide(MultiPoly& p, const MultiPoly& divisor) {
  if (p.is_zero()) return false;
  if (!maybe_divisible(p, divisor)) return false;
  auto qt = p.exact_div(divisor);
  if (!qt) return false;
  p = std::move(*qt);
  return true;
}

// Cancels factors of `fs` against p as far as possible.
void cancel_against(MultiPoly& p, std::vector<Factor>& fs) {
  for (auto& f : fs)
    while (f.mult > 0 && try_divide(p, f.poly)) --f.mult;
  fs.erase(std::remove_if(fs.begin(), fs.end(), [](const Factor& f) { return f.mult == 0; }),
           fs.end());
}

}  // namespace

Atomized atomize(const MultiPoly& p) {
  if (p.is_zero()) throw PoleError("atomize of the zero polynomial");
  Atomized out;
  out.unit = p.content();
  if (sgn(p.leading().coeff) < 0) out.unit = -out.unit;
  MultiPoly rest = p.divide_content(out.unit);
  Monomial m = rest.monomial_content();
  if (!m.is_one()) {
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (m.at(i) > 0) out.atoms.push_back({MultiPoly::var(static_cast<Var>(i)), m.at(i), true});
    std::vector<Term> ts;
    for (const auto& t : rest.terms()) ts.push_back({t.mono.quotient(m), t.coeff});
    rest = MultiPoly::from_terms(std::move(ts));
  }
  if (rest.is_constant()) {
    sort_factors(out.atoms);
    return out;
  }
  const auto& ts = rest.terms();
  bool binomial = ts.size() == 2 && ts[1].mono.is_one() && ts[0].coeff == 1 &&
                  (ts[1].coeff == 1 || ts[1].coeff == -1);
  if (binomial) {
    unsigned g = exponent_gcd(ts[0].mono);
    Monomial n = monomial_root(ts[0].mono, g);
    bool minus = ts[1].coeff == -1;
    unsigned range = minus ? g : 2 * g;
    for (unsigned d = 1; d <= range; ++d) {
      if (range % d != 0) continue;
      if (!minus && g % d == 0) continue;
      out.atoms.push_back({cyclotomic_at(d, n), 1, true});
    }
  } else {
    out.atoms.push_back({rest, 1, rest.total_degree() == 1});
  }
  sort_factors(out.atoms);
  return out;
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(long c) : num_(c) {}
RatFun::RatFun(const Integer& c) : num_(c) {}
RatFun::RatFun(const Rational& c) : num_(c.num()), den_content_(c.den()) {}
RatFun::RatFun(const MultiPoly& p) : num_(p) {}

RatFun RatFun::var(Var v) { return RatFun(MultiPoly::var(v)); }

MultiPoly RatFun::denominator() const {
  MultiPoly d(den_content_);
  for (const auto& f : den_) d = d * f.poly.pow(f.mult);
  return d;
}

std::optional<MultiPoly> RatFun::as_polynomial() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

std::optional<Rational> RatFun::as_constant() const {
  if (!den_.empty() || !num_.is_constant()) return std::nullopt;
  return Rational(num_.constant_term(), den_content_);
}

bool RatFun::only_uses(std::initializer_list<Var> vars) const {
  auto ok = [&](const MultiPoly& p) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) continue;
      if (p.uses(v)) return false;
    }
    return true;
  };
  if (!ok(num_)) return false;
  for (const auto& f : den_)
    if (!ok(f.poly)) return false;
  return true;
}

void RatFun::reduce_content() {
  if (num_.is_zero()) {
    den_.clear();
    den_content_ = 1;
    return;
  }
  Integer g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_content_.get_mpz_t());
  if (g != 1) {
    num_ = num_.divide_content(g);
    den_content_ /= g;
  }
}

void RatFun::reduce(const std::vector<bool>& test) {
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (!test[i]) continue;
    auto& f = den_[i];
    while (f.mult > 0 && try_divide(num_, f.poly)) --f.mult;
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.mult == 0; }),
             den_.end());
  reduce_content();
}

void RatFun::reduce_all() { reduce(std::vector<bool>(den_.size(), true)); }

RatFun RatFun::normalize(const MultiPoly& num,
                         const std::vector<std::pair<MultiPoly, unsigned>>& den) {
  RatFun r;
  r.num_ = num;
  if (num.is_zero()) {
    for (const auto& [p, k] : den)
      if (p.is_zero()) throw PoleError("zero denominator factor");
    return r;
  }
  Integer content = 1;
  std::vector<Factor> fs;
  for (const auto& [p, k] : den) {
    if (p.is_zero()) throw PoleError("zero denominator factor");
    if (k == 0) continue;
    Atomized a = atomize(p);
    for (unsigned j = 0; j < k; ++j) content *= a.unit;
    for (auto f : a.atoms) {
      f.mult *= k;
      fs.push_back(std::move(f));
    }
  }
  if (sgn(content) < 0) {
    content = -content;
    r.num_ = -r.num_;
  }
  sort_factors(fs);
  r.den_content_ = content;
  r.den_ = std::move(fs);
  r.reduce_all();
  return r;
}

RatFun ratfun_normalize(const MultiPoly& num,
                        const std::vector<std::pair<MultiPoly, unsigned>>& den) {
  return RatFun::normalize(num, den);
}

RatFun RatFun::sum(const std::vector<RatFun>& terms) {
  std::vector<const RatFun*> live;
  for (const auto& t : terms)
    if (!t.is_zero()) live.push_back(&t);
  if (live.empty()) return RatFun{};
  if (live.size() == 1) return *live[0];

  bool all_poly = std::all_of(live.begin(), live.end(),
                              [](const RatFun* r) { return r->is_polynomial(); });
  if (all_poly) {
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    for (const auto* r : live)
      for (const auto& t : r->num_.terms()) acc[t.mono] += t.coeff;
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) ts.push_back({m, std::move(c)});
    return RatFun(MultiPoly::from_terms(std::move(ts)));
  }

  // Common denominator: maximal multiplicity of every atom, lcm of contents.
  std::vector<Factor> all;
  for (const auto* r : live)
    for (const auto& f : r->den_) all.push_back(f);
  std::sort(all.begin(), all.end(),
            [](const Factor& a, const Factor& b) { return factor_order(a, b) < 0; });
  std::vector<Factor> common;
  for (const auto& f : all) {
    if (!common.empty() && common.back().poly == f.poly) {
      common.back().mult = std::max(common.back().mult, f.mult);
    } else {
      common.push_back(f);
    }
  }
  std::vector<unsigned> attained(common.size(), 0);
  Integer lc = 1;
  for (const auto* r : live) mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), r->den_content_.get_mpz_t());

  std::map<std::pair<std::size_t, unsigned>, MultiPoly> powers;
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto key = std::make_pair(i, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, common[i].poly.pow(k)).first;
    return it->second;
  };

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  for (const auto* r : live) {
    MultiPoly mult(Integer(lc / r->den_content_));
    std::size_t j = 0;
    for (std::size_t i = 0; i < common.size(); ++i) {
      unsigned e = 0;
      if (j < r->den_.size() && r->den_[j].poly == common[i].poly) e = r->den_[j++].mult;
      if (e == common[i].mult) ++attained[i];
      if (common[i].mult > e) mult = mult * power(i, common[i].mult - e);
    }
    MultiPoly contrib = r->num_ * mult;
    for (const auto& t : contrib.terms()) acc[t.mono] += t.coeff;
  }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) ts.push_back({m, std::move(c)});

  RatFun out;
  out.num_ = MultiPoly::from_terms(std::move(ts));
  if (out.num_.is_zero()) return RatFun{};
  out.den_content_ = lc;
  out.den_ = std::move(common);
  std::vector<bool> test(out.den_.size());
  for (std::size_t i = 0; i < test.size(); ++i) test[i] = !out.den_[i].prime || attained[i] >= 2;
  out.reduce(test);
  return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ + b.num_);
  return RatFun::sum({a, b});
}

RatFun operator-(const RatFun& a) {
  RatFun r = a;
  r.num_ = -r.num_;
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun{};
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
  MultiPoly na = a.num_, nb = b.num_;
  std::vector<Factor> da = a.den_, db = b.den_;
  cancel_against(na, db);
  cancel_against(nb, da);
  RatFun r;
  r.num_ = na * nb;
  r.den_content_ = a.den_content_ * b.den_content_;
  for (auto& f : db) da.push_back(std::move(f));
  sort_factors(da);
  r.den_ = std::move(da);
  std::vector<bool> test(r.den_.size());
  for (std::size_t i = 0; i < test.size(); ++i) test[i] = !r.den_[i].prime;
  r.reduce(test);
  return r;
}

RatFun RatFun::inv() const {
  if (is_zero()) throw PoleError("inverse of zero");
  Atomized a = atomize(num_);
  RatFun r;
  r.num_ = MultiPoly(den_content_);
  for (const auto& f : den_) r.num_ = r.num_ * f.poly.pow(f.mult);
  if (sgn(a.unit) < 0) {
    r.num_ = -r.num_;
    a.unit = -a.unit;
  }
  r.den_content_ = a.unit;
  r.den_ = std::move(a.atoms);
  std::vector<bool> test(r.den_.size());
  for (std::size_t i = 0; i < test.size(); ++i) test[i] = !r.den_[i].prime;
  r.reduce(test);
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw PoleError("division by the zero rational function");
  if (a.is_zero()) return RatFun{};
  return a * b.inv();
}

RatFun RatFun::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  RatFun result(1), base = *this;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.den_content_ == b.den_content_ && a.den_.size() == b.den_.size()) {
    bool same = true;
    for (std::size_t i = 0; i < a.den_.size() && same; ++i)
      same = a.den_[i].mult == b.den_[i].mult && a.den_[i].poly == b.den_[i].poly;
    if (same) return a.num_ == b.num_;
  }
  return (a - b).is_zero();
}

Rational RatFun::eval(const std::map<Var, Rational>& point) const {
  return evaluate<Rational>([&](Var v) -> Rational {
    auto it = point.find(v);
    if (it == point.end())
      throw std::invalid_argument("no value for variable " + std::string(name(v)));
    return it->second;
  });
}

RatFun RatFun::substitute(const std::map<Var, RatFun>& images) const {
  return evaluate<RatFun>([&](Var v) -> RatFun {
    auto it = images.find(v);
    return it == images.end() ? RatFun::var(v) : it->second;
  });
}

RatFun RatFun::invert_vars(std::initializer_list<Var> vars) const {
  std::vector<long> shift(kNumVars, 0);
  for (Var v : vars) shift[index(v)] -= num_.degree(v);
  std::vector<std::pair<MultiPoly, unsigned>> den;
  for (const auto& f : den_) {
    for (Var v : vars) shift[index(v)] += static_cast<long>(f.mult) * f.poly.degree(v);
    den.push_back({f.poly.reflect(vars), f.mult});
  }
  den.push_back({MultiPoly(den_content_), 1});
  RatFun r = normalize(num_.reflect(vars), den);
  for (Var v : vars)
    if (shift[index(v)] != 0) r = r * var(v).pow(static_cast<int>(shift[index(v)]));
  return r;
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::ostringstream os;
  if (num_.size() == 1 && num_.leading().mono.is_one()) {
    os << num_.to_string();
  } else {
    os << '(' << num_.to_string() << ')';
  }
  os << '/';
  std::vector<std::string> parts;
  if (den_content_ != 1) parts.push_back(den_content_.get_str());
  for (const auto& f : den_) {
    std::string s = f.poly.size() == 1 ? f.poly.to_string() : "(" + f.poly.to_string() + ")";
    if (f.mult > 1) s += "^" + std::to_string(f.mult);
    parts.push_back(s);
  }
  if (parts.size() == 1) {
    os << parts[0];
  } else {
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    os << ')';
  }
  return os.str();
}

}  // namespace qlab::ring
