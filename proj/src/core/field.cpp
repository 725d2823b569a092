/* Copyright 2026 The albertkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace albertkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotEtale: return "NotEtale";
    case ErrorCode::kNotAField: return "NotAField";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDependentBasis: return "DependentBasis";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kNotIsotropic: return "NotIsotropic";
    case ErrorCode::kOracleIncomplete: return "OracleIncomplete";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
    case ErrorCode::kSplitK: return "SplitK";
    case ErrorCode::kZeroParameter: return "ZeroParameter";
    case ErrorCode::kValueNotInF: return "ValueNotInF";
    case ErrorCode::kIdentityFails: return "IdentityFails";
    case ErrorCode::kRelationViolation: return "RelationViolation";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kDimensionCap: return "DimensionCap";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kMalformedCertificate: return "MalformedCertificate";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kNoSolutionProven: return "NoSolutionProven";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

bool same_field(const FieldImpl& a, const FieldImpl& b) {
  return &a == &b || a.spec() == b.spec();
}

// ---------------------------------------------------------------------------
// Elem

bool Elem::is_zero() const { return field_->is_zero(*this); }
bool Elem::is_one() const { return field_->equal(*this, field_->one()); }
Elem Elem::inv() const { return field_->inv(*this); }
Elem Elem::operator-() const { return field_->neg(*this); }
std::string Elem::str() const { return field_ ? field_->format(*this) : "<null>"; }

Elem Elem::pow(std::uint64_t e) const {
  Elem result = field_->one();
  Elem base = *this;
  while (e) {
    if (e & 1) result = field_->mul(result, base);
    e >>= 1;
    if (e) base = field_->mul(base, base);
  }
  return result;
}

static inline void check_pair(const Elem& a, const Elem& b) {
  AK_CHECK(a.valid() && b.valid());
  AK_CHECK(same_field(a.field(), b.field()));
}

Elem operator+(const Elem& a, const Elem& b) { check_pair(a, b); return a.field()->add(a, b); }
Elem operator-(const Elem& a, const Elem& b) { check_pair(a, b); return a.field()->sub(a, b); }
Elem operator*(const Elem& a, const Elem& b) { check_pair(a, b); return a.field()->mul(a, b); }
Elem operator/(const Elem& a, const Elem& b) {
  check_pair(a, b);
  return a.field()->mul(a, b.field()->inv(b));
}
bool operator==(const Elem& a, const Elem& b) { check_pair(a, b); return a.field()->equal(a, b); }
Elem& Elem::operator+=(const Elem& o) { return *this = *this + o; }
Elem& Elem::operator-=(const Elem& o) { return *this = *this - o; }
Elem& Elem::operator*=(const Elem& o) { return *this = *this * o; }
Elem& Elem::operator/=(const Elem& o) { return *this = *this / o; }

// ---------------------------------------------------------------------------
// FieldImpl defaults

Elem FieldImpl::from_int(long long v) const {
  // Double-and-add from one(); used only by fields without a direct map.
  Elem r = zero();
  Elem acc = one();
  bool negative = v < 0;
  unsigned long long u = negative ? 0ULL - static_cast<unsigned long long>(v) : v;
  while (u) {
    if (u & 1) r = add(r, acc);
    u >>= 1;
    if (u) acc = add(acc, acc);
  }
  return negative ? neg(r) : r;
}

Elem FieldImpl::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

std::optional<Elem> FieldImpl::symbol(std::string_view) const { return std::nullopt; }

std::optional<Elem> FieldImpl::artin_schreier(const Elem&) const {
  throw Error(ErrorCode::kUnsupported, "Artin-Schreier equation not supported over " + spec());
}

std::optional<Elem> FieldImpl::quadratic_root(const Elem& alpha, const Elem& beta) const {
  if (characteristic() != 2) {
    Elem d = alpha * alpha + from_int(4) * beta;
    auto r = sqrt(d);
    if (!r) return std::nullopt;
    return (alpha + *r) / from_int(2);
  }
  if (alpha.is_zero()) return sqrt(beta);
  auto y = artin_schreier(beta / (alpha * alpha));
  if (!y) return std::nullopt;
  return alpha * *y;
}

std::vector<Elem> FieldImpl::elements() const {
  throw Error(ErrorCode::kUnsupported, "field " + spec() + " is not enumerable");
}

// ---------------------------------------------------------------------------
// Polynomials over a coefficient field (internal to rational functions).

namespace {

void trim(Vec& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const Vec& p) { return static_cast<int>(p.size()) - 1; }

Vec padd(const Vec& a, const Vec& b) {
  Vec r = a.size() >= b.size() ? a : b;
  const Vec& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r);
  return r;
}

Vec pneg(const Vec& a) {
  Vec r = a;
  for (auto& c : r) c = -c;
  return r;
}

Vec pmul(const Field& c, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, c->zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

Vec pscale(const Vec& a, const Elem& s) {
  Vec r;
  r.reserve(a.size());
  for (auto& c : a) r.push_back(c * s);
  trim(r);
  return r;
}

void pdivmod(const Field& c, const Vec& a, const Vec& b, Vec& q, Vec& r) {
  AK_CHECK(!b.empty());
  r = a;
  q.clear();
  if (deg(a) < deg(b)) return;
  q.assign(a.size() - b.size() + 1, c->zero());
  Elem lead_inv = b.back().inv();
  for (int i = deg(r); i >= deg(b); --i) {
    if (static_cast<int>(r.size()) <= i || r[i].is_zero()) continue;
    Elem f = r[i] * lead_inv;
    q[i - deg(b)] = f;
    for (int j = 0; j <= deg(b); ++j) r[i - deg(b) + j] = r[i - deg(b) + j] - f * b[j];
  }
  trim(r);
  trim(q);
}

Vec pmonic(const Vec& a) {
  if (a.empty()) return a;
  return pscale(a, a.back().inv());
}

Vec pgcd(const Field& c, Vec a, Vec b) {
  while (!b.empty()) {
    Vec q, r;
    pdivmod(c, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a);
}

bool peq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool needs_parens(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '+' || ch == '/' || ch == '*' || ch == ' ') return true;
    if (ch == '-' && i > 0) return true;
  }
  return false;
}

// Renders sum c_i * sym^i, highest power first.
std::string format_poly(const std::vector<std::string>& coeffs, const std::vector<bool>& zero,
                        const std::vector<bool>& one, const std::string& sym) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (zero[i]) continue;
    std::string mono;
    if (i == 0) {
      mono = coeffs[i];
    } else {
      std::string pw = i == 1 ? sym : sym + "^" + std::to_string(i);
      if (one[i]) {
        mono = pw;
      } else if (coeffs[i] == "-1") {
        mono = "-" + pw;
      } else {
        mono = (needs_parens(coeffs[i]) ? "(" + coeffs[i] + ")" : coeffs[i]) + "*" + pw;
      }
    }
    if (out.empty()) {
      out = mono;
    } else if (!mono.empty() && mono[0] == '-') {
      out += mono;
    } else {
      out += "+" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_elem_poly(const Vec& p, const std::string& sym) {
  std::vector<std::string> cs;
  std::vector<bool> z, o;
  for (auto& c : p) {
    cs.push_back(c.str());
    z.push_back(c.is_zero());
    o.push_back(c.is_one());
  }
  return format_poly(cs, z, o, sym);
}

// Square root of a polynomial, if it is a square.
std::optional<Vec> poly_sqrt(const Field& c, const Vec& p) {
  if (p.empty()) return Vec{};
  if (deg(p) % 2) return std::nullopt;
  if (c->characteristic() == 2) {
    Vec r;
    for (int i = 0; i <= deg(p); ++i) {
      if (i % 2) {
        if (!p[i].is_zero()) return std::nullopt;
        continue;
      }
      auto s = c->sqrt(p[i]);
      if (!s) return std::nullopt;
      r.push_back(*s);
    }
    trim(r);
    return r;
  }
  auto lead = c->sqrt(p.back());
  if (!lead) return std::nullopt;
  int m = deg(p) / 2;
  Vec r(m + 1, c->zero());
  r[m] = *lead;
  Elem two_lead = c->from_int(2) * *lead;
  for (int i = m - 1; i >= 0; --i) {
    Elem acc = p[m + i];
    for (int j = i + 1; j <= m; ++j) {
      int k = m + i - j;
      if (k > i && k <= m) acc = acc - r[j] * r[k];
    }
    r[i] = acc / two_lead;
  }
  if (!peq(pmul(c, r, r), p)) return std::nullopt;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rationals

Elem RationalField::zero() const { return Elem(self(), mpq_class(0)); }
Elem RationalField::one() const { return Elem(self(), mpq_class(1)); }
Elem RationalField::from_int(long long v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return Elem(self(), mpq_class(z));
}
Elem RationalField::from_mpq(const mpq_class& v) const { return Elem(self(), v); }
Elem RationalField::add(const Elem& a, const Elem& b) const { return Elem(self(), mpq_class(a.q() + b.q())); }
Elem RationalField::sub(const Elem& a, const Elem& b) const { return Elem(self(), mpq_class(a.q() - b.q())); }
Elem RationalField::neg(const Elem& a) const { return Elem(self(), mpq_class(-a.q())); }
Elem RationalField::mul(const Elem& a, const Elem& b) const { return Elem(self(), mpq_class(a.q() * b.q())); }
Elem RationalField::inv(const Elem& a) const {
  if (sgn(a.q()) == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 in Q");
  return Elem(self(), mpq_class(1 / a.q()));
}
bool RationalField::equal(const Elem& a, const Elem& b) const { return a.q() == b.q(); }
bool RationalField::is_zero(const Elem& a) const { return sgn(a.q()) == 0; }
std::string RationalField::format(const Elem& a) const { return a.q().get_str(); }

std::optional<Elem> RationalField::sqrt(const Elem& a) const {
  const mpq_class& v = a.q();
  if (sgn(v) < 0) return std::nullopt;
  if (sgn(v) == 0) return zero();
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  return Elem(self(), mpq_class(n, d));
}

std::vector<Elem> RationalField::small_elements(int h) const {
  std::vector<Elem> out{zero(), one(), from_int(-1)};
  for (int v = 2; v <= h; ++v) {
    out.push_back(from_int(v));
    out.push_back(from_int(-v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite fields

namespace {

using IPoly = std::vector<int>;

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly imod(IPoly a, const IPoly& m, int p) {
  itrim(a);
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int f = a.back();  // m is monic
    for (int j = 0; j <= dm; ++j) a[shift + j] = ((a[shift + j] - f * m[j]) % p + p) % p;
    itrim(a);
  }
  return a;
}

bool idivides(const IPoly& d, const IPoly& a, int p) { return imod(a, d, p).empty(); }

IPoly from_digits(std::uint32_t idx, int p, int k) {
  IPoly d(k, 0);
  for (int i = 0; i < k; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

bool irreducible(const IPoly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      IPoly g = from_digits(idx, p, d);
      g.push_back(1);
      if (idivides(g, f, p)) return false;
    }
  }
  return true;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k, std::vector<int> modulus, std::string symbol)
    : p_(p), k_(k), symbol_(std::move(symbol)) {
  if (!is_prime(p) || k == 0) throw Error(ErrorCode::kParse, "invalid finite field parameters");
  q_ = 1;
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  if (q_ > 256) throw Error(ErrorCode::kUnsupported, "finite fields are limited to 256 elements");
  if (k == 1) {
    modulus_ = {0, 1};
  } else if (modulus.empty()) {
    for (std::uint32_t idx = 0; idx < q_; ++idx) {
      IPoly f = from_digits(idx, p, k);
      f.push_back(1);
      if (irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  } else {
    for (auto& c : modulus) c = ((c % static_cast<int>(p)) + p) % p;
    if (modulus.size() != k + 1 || modulus.back() != 1 || !irreducible(modulus, p))
      throw Error(ErrorCode::kNotAField, "modulus is not a monic irreducible polynomial of degree " +
                                             std::to_string(k));
    modulus_ = modulus;
  }
  auto to_index = [&](const IPoly& d) {
    std::int32_t idx = 0, base = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (i < d.size()) idx += d[i] * base;
      base *= p_;
    }
    return idx;
  };
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, -1);
  sqrt_.assign(q_, -1);
  as_.assign(q_, -1);
  for (std::uint32_t a = 0; a < q_; ++a) {
    IPoly da = from_digits(a, p, k);
    IPoly dn(k);
    for (std::uint32_t i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = to_index(dn);
    for (std::uint32_t b = 0; b < q_; ++b) {
      IPoly db = from_digits(b, p, k);
      IPoly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = to_index(s);
      IPoly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      mul_[a * q_ + b] = to_index(k == 1 ? IPoly{prod[0]} : imod(prod, modulus_, p));
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }
    std::int32_t sq = mul_[a * q_ + a];
    if (sqrt_[sq] < 0) sqrt_[sq] = a;
    std::int32_t v = add_[sq * q_ + a];
    if (p == 2 && as_[v] < 0) as_[v] = a;
  }
}

std::string FiniteField::spec() const {
  if (k_ == 1) return "F(" + std::to_string(p_) + ")";
  std::vector<std::string> cs;
  std::vector<bool> z, o;
  for (int c : modulus_) {
    cs.push_back(std::to_string(c));
    z.push_back(c == 0);
    o.push_back(c == 1);
  }
  return "F(" + std::to_string(q_) + "):" + format_poly(cs, z, o, symbol_);
}

Elem FiniteField::zero() const { return Elem(self(), std::int32_t{0}); }
Elem FiniteField::one() const { return Elem(self(), std::int32_t{1}); }
Elem FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem(self(), static_cast<std::int32_t>(r));
}
Elem FiniteField::from_index(std::int32_t i) const {
  AK_CHECK(i >= 0 && static_cast<std::uint32_t>(i) < q_);
  return Elem(self(), i);
}
Elem FiniteField::add(const Elem& a, const Elem& b) const { return Elem(self(), add_[a.fq() * q_ + b.fq()]); }
Elem FiniteField::neg(const Elem& a) const { return Elem(self(), neg_[a.fq()]); }
Elem FiniteField::mul(const Elem& a, const Elem& b) const { return Elem(self(), mul_[a.fq() * q_ + b.fq()]); }
Elem FiniteField::inv(const Elem& a) const {
  if (a.fq() == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 in " + spec());
  return Elem(self(), inv_[a.fq()]);
}
bool FiniteField::equal(const Elem& a, const Elem& b) const { return a.fq() == b.fq(); }
bool FiniteField::is_zero(const Elem& a) const { return a.fq() == 0; }

std::string FiniteField::format(const Elem& a) const {
  IPoly d = from_digits(a.fq(), p_, k_);
  if (k_ == 1) return std::to_string(d[0]);
  std::vector<std::string> cs;
  std::vector<bool> z, o;
  for (int c : d) {
    cs.push_back(std::to_string(c));
    z.push_back(c == 0);
    o.push_back(c == 1);
  }
  return format_poly(cs, z, o, symbol_);
}

std::optional<Elem> FiniteField::symbol(std::string_view name) const {
  if (k_ > 1 && name == symbol_) return from_index(static_cast<std::int32_t>(p_));
  return std::nullopt;
}
std::vector<std::string> FiniteField::symbols() const {
  if (k_ > 1) return {symbol_};
  return {};
}

std::optional<Elem> FiniteField::sqrt(const Elem& a) const {
  if (sqrt_[a.fq()] < 0) return std::nullopt;
  return Elem(self(), sqrt_[a.fq()]);
}

std::optional<Elem> FiniteField::artin_schreier(const Elem& c) const {
  if (p_ != 2) throw Error(ErrorCode::kUnsupported, "Artin-Schreier in odd characteristic");
  if (as_[c.fq()] < 0) return std::nullopt;
  return Elem(self(), as_[c.fq()]);
}

std::vector<Elem> FiniteField::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back(from_index(static_cast<std::int32_t>(i)));
  return out;
}

std::vector<Elem> FiniteField::small_elements(int) const { return elements(); }

Elem FiniteField::frobenius(const Elem& a) const { return a.pow(p_); }

// ---------------------------------------------------------------------------
// Rational function fields

RationalFunctionField::RationalFunctionField(Field coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  if (!coeffs_->is_field()) throw Error(ErrorCode::kNotAField, "coefficient ring must be a field");
}

std::string RationalFunctionField::spec() const { return coeffs_->spec() + "(" + var_ + ")"; }

Elem RationalFunctionField::from_polys(Vec num, Vec den) const {
  trim(num);
  trim(den);
  if (den.empty()) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  if (num.empty()) return Elem(self(), Elem::RatFn{{}, {coeffs_->one()}});
  Vec g = pgcd(coeffs_, num, den);
  if (deg(g) > 0) {
    Vec q, r;
    pdivmod(coeffs_, num, g, q, r);
    num = q;
    pdivmod(coeffs_, den, g, q, r);
    den = q;
  }
  Elem lc = den.back().inv();
  return Elem(self(), Elem::RatFn{pscale(num, lc), pscale(den, lc)});
}

Elem RationalFunctionField::zero() const { return Elem(self(), Elem::RatFn{{}, {coeffs_->one()}}); }
Elem RationalFunctionField::one() const {
  return Elem(self(), Elem::RatFn{{coeffs_->one()}, {coeffs_->one()}});
}
Elem RationalFunctionField::from_int(long long v) const { return constant(coeffs_->from_int(v)); }
Elem RationalFunctionField::constant(const Elem& c) const {
  AK_CHECK(same_field(c.field(), coeffs_));
  if (c.is_zero()) return zero();
  return Elem(self(), Elem::RatFn{{c}, {coeffs_->one()}});
}

Elem RationalFunctionField::add(const Elem& a, const Elem& b) const {
  const auto& x = a.ratfn();
  const auto& y = b.ratfn();
  if (x.num.empty()) return b;
  if (y.num.empty()) return a;
  if (peq(x.den, y.den)) return from_polys(padd(x.num, y.num), x.den);
  return from_polys(padd(pmul(coeffs_, x.num, y.den), pmul(coeffs_, y.num, x.den)),
                    pmul(coeffs_, x.den, y.den));
}
Elem RationalFunctionField::neg(const Elem& a) const {
  return Elem(self(), Elem::RatFn{pneg(a.ratfn().num), a.ratfn().den});
}
Elem RationalFunctionField::mul(const Elem& a, const Elem& b) const {
  const auto& x = a.ratfn();
  const auto& y = b.ratfn();
  if (x.num.empty() || y.num.empty()) return zero();
  return from_polys(pmul(coeffs_, x.num, y.num), pmul(coeffs_, x.den, y.den));
}
Elem RationalFunctionField::inv(const Elem& a) const {
  const auto& x = a.ratfn();
  if (x.num.empty()) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 in " + spec());
  return from_polys(x.den, x.num);
}
bool RationalFunctionField::equal(const Elem& a, const Elem& b) const {
  return peq(a.ratfn().num, b.ratfn().num) && peq(a.ratfn().den, b.ratfn().den);
}
bool RationalFunctionField::is_zero(const Elem& a) const { return a.ratfn().num.empty(); }

std::string RationalFunctionField::format(const Elem& a) const {
  const auto& x = a.ratfn();
  std::string n = format_elem_poly(x.num, var_);
  if (x.den.size() == 1) return n;
  return "(" + n + ")/(" + format_elem_poly(x.den, var_) + ")";
}

std::optional<Elem> RationalFunctionField::symbol(std::string_view name) const {
  if (name == var_) return from_polys({coeffs_->zero(), coeffs_->one()}, {coeffs_->one()});
  auto c = coeffs_->symbol(name);
  if (c) return constant(*c);
  return std::nullopt;
}
std::vector<std::string> RationalFunctionField::symbols() const {
  auto s = coeffs_->symbols();
  s.push_back(var_);
  return s;
}

std::optional<Elem> RationalFunctionField::sqrt(const Elem& a) const {
  const auto& x = a.ratfn();
  if (x.num.empty()) return zero();
  auto n = poly_sqrt(coeffs_, x.num);
  auto d = poly_sqrt(coeffs_, x.den);
  if (!n || !d) return std::nullopt;
  return from_polys(*n, *d);
}

std::optional<Elem> RationalFunctionField::artin_schreier(const Elem& c) const {
  if (characteristic() != 2) throw Error(ErrorCode::kUnsupported, "Artin-Schreier in odd characteristic");
  auto cf = as_finite(coeffs_);
  if (!cf || cf->order() != 2)
    throw Error(ErrorCode::kUnsupported, "Artin-Schreier over " + spec() + " (only F(2) coefficients)");
  const auto& x = c.ratfn();
  if (x.num.empty()) return zero();
  // y = A/B with B^2 = den and A^2 + A*B = num; A -> A^2 + A*B is F_2-linear.
  auto b = poly_sqrt(coeffs_, x.den);
  if (!b) return std::nullopt;
  int db = deg(*b);
  int dn = deg(x.num);
  int da = std::max({dn, db, 0}) + 1;
  int rows = std::max(2 * da, da + db) + 1;
  std::vector<std::vector<int>> m(rows, std::vector<int>(da + 2, 0));
  for (int j = 0; j <= da; ++j) {
    m[2 * j][j] ^= 1;
    for (int i = 0; i <= db; ++i)
      if (!(*b)[i].is_zero()) m[j + i][j] ^= 1;
  }
  for (int i = 0; i < rows; ++i) m[i][da + 1] = (i <= dn && !x.num[i].is_zero()) ? 1 : 0;
  int cols = da + 1;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][col]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = 0; i < rows; ++i)
      if (i != r && m[i][col])
        for (int j = 0; j <= cols; ++j) m[i][j] ^= m[r][j];
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (m[i][cols]) return std::nullopt;
  Vec a(da + 1, coeffs_->zero());
  for (int i = 0; i < r; ++i)
    if (m[i][cols]) a[pivot_col[i]] = coeffs_->one();
  Elem y = from_polys(a, *b);
  if (!(add(mul(y, y), y) == c)) throw Error(ErrorCode::kInternal, "Artin-Schreier check failed");
  return y;
}

std::vector<Elem> RationalFunctionField::small_elements(int h) const {
  auto cs = coeffs_->small_elements(0);
  std::vector<Elem> out;
  int d = std::max(h, 0);
  std::vector<std::size_t> idx(d + 1, 0);
  while (true) {
    Vec num;
    for (int i = 0; i <= d; ++i) num.push_back(cs[idx[i]]);
    out.push_back(from_polys(num, {coeffs_->one()}));
    int i = 0;
    while (i <= d && ++idx[i] == cs.size()) idx[i++] = 0;
    if (i > d) break;
  }
  return out;
}

int RationalFunctionField::valuation(const Elem& a) const {
  const auto& x = a.ratfn();
  AK_CHECK(!x.num.empty());
  int vn = 0, vd = 0;
  while (x.num[vn].is_zero()) ++vn;
  while (x.den[vd].is_zero()) ++vd;
  return vn - vd;
}

Elem RationalFunctionField::unit_residue(const Elem& a) const {
  const auto& x = a.ratfn();
  AK_CHECK(!x.num.empty());
  int vn = 0, vd = 0;
  while (x.num[vn].is_zero()) ++vn;
  while (x.den[vd].is_zero()) ++vd;
  return x.num[vn] / x.den[vd];
}

bool RationalFunctionField::is_monomial(const Elem& a) const {
  const auto& x = a.ratfn();
  if (x.num.empty()) return false;
  int nz = 0;
  for (auto& c : x.num) nz += !c.is_zero();
  int dz = 0;
  for (auto& c : x.den) dz += !c.is_zero();
  return nz == 1 && dz == 1;
}

Elem RationalFunctionField::t_power(int e) const {
  Vec p(std::abs(e) + 1, coeffs_->zero());
  p.back() = coeffs_->one();
  if (e >= 0) return from_polys(p, {coeffs_->one()});
  return from_polys({coeffs_->one()}, p);
}

// ---------------------------------------------------------------------------
// Quadratic etale algebras

Ext make_etale_quadratic(const Field& base, EtaleQuadratic::Presentation p, const Elem& alpha,
                         const Elem& beta) {
  auto k = std::shared_ptr<EtaleQuadratic>(new EtaleQuadratic());
  k->base_ = base;
  k->presentation_ = p;
  k->symbol_ = base->symbol("w") ? "u" : "w";
  if (p == EtaleQuadratic::Presentation::kSplit) {
    k->alpha_ = base->one();
    k->beta_ = base->zero();
    k->is_field_ = false;
    return k;
  }
  AK_CHECK(alpha.valid() && beta.valid());
  AK_CHECK(same_field(alpha.field(), base) && same_field(beta.field(), base));
  // Over a split base (a product of fields) the discriminant must be a unit.
  Elem disc = base->characteristic() == 2 ? alpha : alpha * alpha + base->from_int(4) * beta;
  bool separable = true;
  try {
    (void)disc.inv();
  } catch (const Error&) {
    separable = false;
  }
  if (!separable) throw Error(ErrorCode::kNotEtale, "X^2 - alpha X - beta is inseparable");
  k->alpha_ = alpha;
  k->beta_ = beta;
  k->is_field_ = base->is_field() && !base->quadratic_root(alpha, beta).has_value();
  return k;
}

std::string EtaleQuadratic::spec() const {
  if (is_split()) return base_->spec() + "/split";
  return base_->spec() + "/" + format_elem_poly({-beta_, -alpha_, base_->one()}, "x");
}

Elem EtaleQuadratic::make(const Elem& a, const Elem& b) const {
  AK_CHECK(same_field(a.field(), base_) && same_field(b.field(), base_));
  return Elem(self(), Elem::Pair{{a, b}});
}
Elem EtaleQuadratic::embed(const Elem& c) const {
  return is_split() ? make(c, c) : make(c, base_->zero());
}
std::pair<Elem, Elem> EtaleQuadratic::coords(const Elem& x) const {
  return {x.pair().c[0], x.pair().c[1]};
}
std::optional<Elem> EtaleQuadratic::in_base(const Elem& x) const {
  const auto& c = x.pair().c;
  if (is_split()) {
    if (c[0] == c[1]) return c[0];
    return std::nullopt;
  }
  if (c[1].is_zero()) return c[0];
  return std::nullopt;
}
Elem EtaleQuadratic::generator() const { return make(base_->zero(), base_->one()); }

Elem EtaleQuadratic::gamma(const Elem& x) const {
  const auto& c = x.pair().c;
  if (is_split()) return make(c[1], c[0]);
  return make(c[0] + c[1] * alpha_, -c[1]);
}
Elem EtaleQuadratic::trace(const Elem& x) const {
  const auto& c = x.pair().c;
  if (is_split()) return c[0] + c[1];
  return c[0] + c[0] + c[1] * alpha_;
}
Elem EtaleQuadratic::norm(const Elem& x) const {
  const auto& c = x.pair().c;
  if (is_split()) return c[0] * c[1];
  return c[0] * c[0] + c[0] * c[1] * alpha_ - c[1] * c[1] * beta_;
}
Elem EtaleQuadratic::s_functional(const Elem& x) const {
  const auto& c = x.pair().c;
  if (is_split()) return c[1] - c[0];
  return c[1];
}
Elem EtaleQuadratic::kappa() const {
  if (characteristic() == 2) return one();
  if (is_split()) return make(base_->one(), -base_->one());
  return make(-alpha_, base_->from_int(2));
}

Elem EtaleQuadratic::zero() const { return make(base_->zero(), base_->zero()); }
Elem EtaleQuadratic::one() const { return embed(base_->one()); }
Elem EtaleQuadratic::from_int(long long v) const { return embed(base_->from_int(v)); }

Elem EtaleQuadratic::add(const Elem& a, const Elem& b) const {
  const auto& x = a.pair().c;
  const auto& y = b.pair().c;
  return Elem(self(), Elem::Pair{{x[0] + y[0], x[1] + y[1]}});
}
Elem EtaleQuadratic::neg(const Elem& a) const {
  const auto& x = a.pair().c;
  return Elem(self(), Elem::Pair{{-x[0], -x[1]}});
}
Elem EtaleQuadratic::mul(const Elem& a, const Elem& b) const {
  const auto& x = a.pair().c;
  const auto& y = b.pair().c;
  if (is_split()) return Elem(self(), Elem::Pair{{x[0] * y[0], x[1] * y[1]}});
  Elem bd = x[1] * y[1];
  return Elem(self(), Elem::Pair{{x[0] * y[0] + bd * beta_, x[0] * y[1] + x[1] * y[0] + bd * alpha_}});
}
Elem EtaleQuadratic::inv(const Elem& a) const {
  const auto& x = a.pair().c;
  if (is_split()) {
    if (x[0].is_zero() || x[1].is_zero())
      throw Error(ErrorCode::kDivisionByZero, "non-unit in split algebra " + spec());
    return make(x[0].inv(), x[1].inv());
  }
  Elem n = norm(a);
  if (n.is_zero()) throw Error(ErrorCode::kDivisionByZero, "non-unit in " + spec());
  Elem ni = n.inv();
  Elem g = gamma(a);
  return make(g.pair().c[0] * ni, g.pair().c[1] * ni);
}
bool EtaleQuadratic::equal(const Elem& a, const Elem& b) const {
  return a.pair().c[0] == b.pair().c[0] && a.pair().c[1] == b.pair().c[1];
}
bool EtaleQuadratic::is_zero(const Elem& a) const {
  return a.pair().c[0].is_zero() && a.pair().c[1].is_zero();
}

std::string EtaleQuadratic::format(const Elem& a) const {
  const auto& x = a.pair().c;
  if (is_split()) return "[" + x[0].str() + "," + x[1].str() + "]";
  std::vector<std::string> cs{x[0].str(), x[1].str()};
  return format_poly(cs, {x[0].is_zero(), x[1].is_zero()}, {x[0].is_one(), x[1].is_one()}, symbol_);
}

std::optional<Elem> EtaleQuadratic::symbol(std::string_view name) const {
  if (name == symbol_) return generator();
  auto c = base_->symbol(name);
  if (c) return embed(*c);
  return std::nullopt;
}
std::vector<std::string> EtaleQuadratic::symbols() const {
  auto s = base_->symbols();
  s.push_back(symbol_);
  return s;
}

std::optional<Elem> EtaleQuadratic::sqrt(const Elem& a) const {
  const auto& x = a.pair().c;
  if (is_split()) {
    auto r0 = base_->sqrt(x[0]);
    auto r1 = base_->sqrt(x[1]);
    if (!r0 || !r1) return std::nullopt;
    return make(*r0, *r1);
  }
  if (is_zero(a)) return zero();
  if (characteristic() == 2) {
    auto b = base_->sqrt(x[1] / alpha_);
    if (!b) return std::nullopt;
    auto c = base_->sqrt(x[0] - *b * *b * beta_);
    if (!c) return std::nullopt;
    return make(*c, *b);
  }
  if (x[1].is_zero()) {
    if (auto r = base_->sqrt(x[0])) return embed(*r);
    Elem disc = alpha_ * alpha_ + base_->from_int(4) * beta_;
    if (auto r = base_->sqrt(x[0] / disc)) return mul(embed(*r), kappa());
    return std::nullopt;
  }
  auto n = base_->sqrt(norm(a));
  if (!n) return std::nullopt;
  for (const Elem& nn : {*n, -*n}) {
    auto t = base_->sqrt(trace(a) + base_->from_int(2) * nn);
    if (!t || t->is_zero()) continue;
    Elem y = mul(add(a, embed(nn)), embed(t->inv()));
    if (equal(mul(y, y), a)) return y;
  }
  return std::nullopt;
}

std::optional<Elem> EtaleQuadratic::artin_schreier(const Elem& c) const {
  if (characteristic() != 2) throw Error(ErrorCode::kUnsupported, "Artin-Schreier in odd characteristic");
  const auto& x = c.pair().c;
  if (is_split()) {
    auto r0 = base_->artin_schreier(x[0]);
    auto r1 = base_->artin_schreier(x[1]);
    if (!r0 || !r1) return std::nullopt;
    return make(*r0, *r1);
  }
  auto u = base_->artin_schreier(alpha_ * x[1]);
  if (!u) return std::nullopt;
  for (const Elem& uu : {*u, *u + base_->one()}) {
    Elem b = uu / alpha_;
    auto a = base_->artin_schreier(x[0] - b * b * beta_);
    if (a) return make(*a, b);
  }
  return std::nullopt;
}

std::vector<Elem> EtaleQuadratic::elements() const {
  auto be = base_->elements();
  std::vector<Elem> out;
  out.reserve(be.size() * be.size());
  for (auto& b : be)
    for (auto& a : be) out.push_back(make(a, b));
  return out;
}

std::vector<Elem> EtaleQuadratic::small_elements(int h) const {
  auto be = base_->small_elements(h);
  std::vector<Elem> out;
  for (auto& b : be)
    for (auto& a : be) out.push_back(make(a, b));
  return out;
}

// ---------------------------------------------------------------------------
// Factories and casts

Field rationals() {
  static const Field q = std::make_shared<RationalField>();
  return q;
}

Field finite_field(std::uint32_t q, std::vector<int> modulus, std::string symbol) {
  std::uint32_t p = 0, k = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) throw Error(ErrorCode::kParse, "invalid field order " + std::to_string(q));
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error(ErrorCode::kParse, "field order must be a prime power");
  return std::make_shared<FiniteField>(p, k, std::move(modulus), std::move(symbol));
}

Field rational_functions(Field coeffs, std::string var) {
  return std::make_shared<RationalFunctionField>(std::move(coeffs), std::move(var));
}

const EtaleQuadratic* as_ext(const Field& f) { return dynamic_cast<const EtaleQuadratic*>(f.get()); }
const RationalFunctionField* as_ratfn(const Field& f) {
  return dynamic_cast<const RationalFunctionField*>(f.get());
}
const FiniteField* as_finite(const Field& f) { return dynamic_cast<const FiniteField*>(f.get()); }
const RationalField* as_rationals(const Field& f) { return dynamic_cast<const RationalField*>(f.get()); }

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f->zero()); }
Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f->one();
  return v;
}
bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Elem& e) { return e.is_zero(); });
}

}  // namespace albertkit
