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

// Exact base fields (Q, F_{p^k}, rational function fields) and quadratic
// etale algebras over them. Every element carries its context; arithmetic
// between elements of different contexts is a hard fault.

#ifndef ALBERTKIT_CORE_FIELD_HPP_
#define ALBERTKIT_CORE_FIELD_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"

namespace albertkit {

class FieldImpl;
class EtaleQuadratic;
class FiniteField;
class RationalFunctionField;
using Field = std::shared_ptr<const FieldImpl>;

enum class FieldKind { kRationals, kFinite, kRationalFunctions, kQuadratic };

class Elem {
 public:
  struct RatFn {
    std::vector<Elem> num;  // coefficients low to high, over the coefficient field
    std::vector<Elem> den;  // monic, nonzero
  };
  struct Pair {
    std::vector<Elem> c;  // exactly two base elements
  };
  using Rep = std::variant<std::monostate, mpq_class, std::int32_t, RatFn, Pair>;

  Elem() = default;
  Elem(Field f, Rep r) : field_(std::move(f)), rep_(std::move(r)) {}

  const Field& field() const { return field_; }
  const Rep& rep() const { return rep_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  Elem inv() const;
  Elem pow(std::uint64_t e) const;
  Elem operator-() const;
  std::string str() const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);

  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  const mpq_class& q() const { return std::get<mpq_class>(rep_); }
  std::int32_t fq() const { return std::get<std::int32_t>(rep_); }
  const RatFn& ratfn() const { return std::get<RatFn>(rep_); }
  const Pair& pair() const { return std::get<Pair>(rep_); }

 private:
  Field field_;
  Rep rep_;
};

using Vec = std::vector<Elem>;

bool same_field(const FieldImpl& a, const FieldImpl& b);
inline bool same_field(const Field& a, const Field& b) {
  return a && b && same_field(*a, *b);
}

class FieldImpl : public std::enable_shared_from_this<FieldImpl> {
 public:
  virtual ~FieldImpl() = default;

  virtual FieldKind kind() const = 0;
  virtual std::uint64_t characteristic() const = 0;
  // Canonical descriptor, parseable by parse_field.
  virtual std::string spec() const = 0;
  virtual bool is_field() const { return true; }
  virtual bool is_finite() const { return false; }
  virtual std::uint64_t order() const { return 0; }

  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem from_int(long long v) const;

  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem sub(const Elem& a, const Elem& b) const;
  virtual Elem neg(const Elem& a) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  // Throws kDivisionByZero on zero / non-units.
  virtual Elem inv(const Elem& a) const = 0;
  virtual bool equal(const Elem& a, const Elem& b) const = 0;
  virtual bool is_zero(const Elem& a) const = 0;

  virtual std::string format(const Elem& a) const = 0;
  // Value of a generator symbol ("t", "g", "w", ...), searching base fields.
  virtual std::optional<Elem> symbol(std::string_view name) const;
  virtual std::vector<std::string> symbols() const { return {}; }

  virtual std::optional<Elem> sqrt(const Elem& a) const = 0;
  // y with y^2 + y = c (characteristic 2 only).
  virtual std::optional<Elem> artin_schreier(const Elem& c) const;
  // A root of X^2 - alpha X - beta, if one exists.
  std::optional<Elem> quadratic_root(const Elem& alpha, const Elem& beta) const;

  // All elements (finite fields only), in a fixed order starting 0, 1.
  virtual std::vector<Elem> elements() const;
  // Elements of height <= h used by bounded searches; h = 0 yields {0, 1}
  // (plus -1 where distinct).
  virtual std::vector<Elem> small_elements(int h) const = 0;

  Field self() const { return shared_from_this(); }
  Elem make(long long v) const { return from_int(v); }
};

class RationalField final : public FieldImpl {
 public:
  FieldKind kind() const override { return FieldKind::kRationals; }
  std::uint64_t characteristic() const override { return 0; }
  std::string spec() const override { return "Q"; }
  Elem zero() const override;
  Elem one() const override;
  Elem from_int(long long v) const override;
  Elem from_mpq(const mpq_class& v) const;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem sub(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  bool is_zero(const Elem& a) const override;
  std::string format(const Elem& a) const override;
  std::optional<Elem> sqrt(const Elem& a) const override;
  std::vector<Elem> small_elements(int h) const override;
};

class FiniteField final : public FieldImpl {
 public:
  // modulus: monic irreducible of degree k over F_p, coefficients low to
  // high; empty selects the first irreducible polynomial in enumeration
  // order.
  FiniteField(std::uint32_t p, std::uint32_t k, std::vector<int> modulus, std::string symbol);

  FieldKind kind() const override { return FieldKind::kFinite; }
  std::uint64_t characteristic() const override { return p_; }
  std::string spec() const override;
  bool is_finite() const override { return true; }
  std::uint64_t order() const override { return q_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t degree() const { return k_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const override;
  Elem one() const override;
  Elem from_int(long long v) const override;
  Elem from_index(std::int32_t i) const;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  bool is_zero(const Elem& a) const override;
  std::string format(const Elem& a) const override;
  std::optional<Elem> symbol(std::string_view name) const override;
  std::vector<std::string> symbols() const override;
  std::optional<Elem> sqrt(const Elem& a) const override;
  std::optional<Elem> artin_schreier(const Elem& c) const override;
  std::vector<Elem> elements() const override;
  std::vector<Elem> small_elements(int h) const override;
  // Frobenius x -> x^p.
  Elem frobenius(const Elem& a) const;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<int> modulus_;
  std::string symbol_;
  std::vector<std::int32_t> add_, mul_, neg_, inv_, sqrt_, as_;
};

class RationalFunctionField final : public FieldImpl {
 public:
  RationalFunctionField(Field coeffs, std::string var);

  FieldKind kind() const override { return FieldKind::kRationalFunctions; }
  std::uint64_t characteristic() const override { return coeffs_->characteristic(); }
  std::string spec() const override;
  const Field& coefficients() const { return coeffs_; }
  const std::string& variable() const { return var_; }

  Elem zero() const override;
  Elem one() const override;
  Elem from_int(long long v) const override;
  Elem constant(const Elem& c) const;
  Elem from_polys(Vec num, Vec den) const;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  bool is_zero(const Elem& a) const override;
  std::string format(const Elem& a) const override;
  std::optional<Elem> symbol(std::string_view name) const override;
  std::vector<std::string> symbols() const override;
  std::optional<Elem> sqrt(const Elem& a) const override;
  std::optional<Elem> artin_schreier(const Elem& c) const override;
  std::vector<Elem> small_elements(int h) const override;

  // t-adic valuation of a nonzero element.
  int valuation(const Elem& a) const;
  // Residue at t = 0 of a * t^{-valuation(a)}.
  Elem unit_residue(const Elem& a) const;
  // a == c * t^e for a constant c.
  bool is_monomial(const Elem& a) const;
  Elem t_power(int e) const;

 private:
  Field coeffs_;
  std::string var_;
};

// Quadratic etale algebra K over a base field F: either F[w]/(w^2 - alpha w - beta)
// or the split algebra F x F. Elements are pairs: (a, b) = a + b w in the
// generated case and componentwise in the split case.
class EtaleQuadratic final : public FieldImpl {
 public:
  enum class Presentation { kGenerated, kSplit };

  FieldKind kind() const override { return FieldKind::kQuadratic; }
  std::uint64_t characteristic() const override { return base_->characteristic(); }
  std::string spec() const override;
  bool is_field() const override { return is_field_; }
  bool is_finite() const override { return base_->is_finite(); }
  std::uint64_t order() const override { return base_->order() * base_->order(); }

  const Field& base() const { return base_; }
  Presentation presentation() const { return presentation_; }
  bool is_split() const { return presentation_ == Presentation::kSplit; }
  const Elem& alpha() const { return alpha_; }
  const Elem& beta() const { return beta_; }
  const std::string& generator_symbol() const { return symbol_; }

  Elem make(const Elem& a, const Elem& b) const;
  Elem embed(const Elem& c) const;
  std::pair<Elem, Elem> coords(const Elem& x) const;
  // x in F*1 ?
  std::optional<Elem> in_base(const Elem& x) const;
  Elem generator() const;

  Elem gamma(const Elem& x) const;
  Elem trace(const Elem& x) const;  // T_{K/F}, value in F
  Elem norm(const Elem& x) const;   // N_{K/F}, value in F
  Elem s_functional(const Elem& x) const;
  Elem kappa() const;
  // Fixed lambda with s(lambda) = 1.
  Elem lambda() const { return generator(); }

  Elem zero() const override;
  Elem one() const override;
  Elem from_int(long long v) const override;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  bool is_zero(const Elem& a) const override;
  std::string format(const Elem& a) const override;
  std::optional<Elem> symbol(std::string_view name) const override;
  std::vector<std::string> symbols() const override;
  std::optional<Elem> sqrt(const Elem& a) const override;
  std::optional<Elem> artin_schreier(const Elem& c) const override;
  std::vector<Elem> elements() const override;
  std::vector<Elem> small_elements(int h) const override;

 private:
  friend std::shared_ptr<const EtaleQuadratic> make_etale_quadratic(const Field&, Presentation,
                                                                    const Elem&, const Elem&);
  EtaleQuadratic() = default;
  Field base_;
  Presentation presentation_ = Presentation::kSplit;
  Elem alpha_, beta_;
  bool is_field_ = false;
  std::string symbol_ = "w";
};
using Ext = std::shared_ptr<const EtaleQuadratic>;

Field rationals();
Field finite_field(std::uint32_t q, std::vector<int> modulus = {}, std::string symbol = "g");
Field rational_functions(Field coeffs, std::string var = "t");

// K = F[X]/(X^2 - alpha X - beta) or F x F. Throws kNotEtale when the
// generated presentation is inseparable.
Ext make_etale_quadratic(const Field& base, EtaleQuadratic::Presentation p,
                         const Elem& alpha = {}, const Elem& beta = {});
inline Ext make_split(const Field& base) {
  return make_etale_quadratic(base, EtaleQuadratic::Presentation::kSplit);
}
inline Ext make_generated(const Field& base, const Elem& alpha, const Elem& beta) {
  return make_etale_quadratic(base, EtaleQuadratic::Presentation::kGenerated, alpha, beta);
}

const EtaleQuadratic* as_ext(const Field& f);
const RationalFunctionField* as_ratfn(const Field& f);
const FiniteField* as_finite(const Field& f);
const RationalField* as_rationals(const Field& f);

// Grammar: "Q" | "F(q)" | "F(q):<monic poly>" | <base>"("var")" and
// <field>"/"("x^2-a*x-b" | "split") for quadratic etale extensions.
Field parse_field(std::string_view spec);
// Arithmetic expression over the field's symbols; "[a,b]" builds a split pair.
Elem parse_elem(const Field& f, std::string_view text);
Vec parse_vec(const Field& f, const std::vector<std::string>& texts);
std::vector<std::string> format_vec(const Vec& v);

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_FIELD_HPP_
