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

// Quaternion algebras (E/K, a) = E + E z with z^2 = a and z l = iota(l) z,
// in every characteristic. Elements are coordinate vectors over K in the
// basis {1, e, z, ez}, e the generator of E.

#ifndef ALBERTKIT_CORE_QUATERNION_HPP_
#define ALBERTKIT_CORE_QUATERNION_HPP_

#include <memory>
#include <optional>
#include <string>

#include "isotropy.hpp"

namespace albertkit {

class QuaternionAlgebra;
using Quat = std::shared_ptr<const QuaternionAlgebra>;

class QuaternionAlgebra {
 public:
  // Throws kNotEtale, kZeroParameter.
  static Quat make(const Field& k, const Elem& e_alpha, const Elem& e_beta, const Elem& a);
  static Quat hamilton(const Field& k);

  const Field& base() const { return k_; }
  const Ext& E() const { return e_; }
  const Elem& a() const { return a_; }
  const Elem& e_alpha() const { return e_->alpha(); }
  const Elem& e_beta() const { return e_->beta(); }

  Vec zero() const;
  Vec one() const;
  Vec scalar(const Elem& c) const;
  Vec basis(std::size_t i) const;

  Vec add(const Vec& x, const Vec& y) const { return vec_add(x, y); }
  Vec sub(const Vec& x, const Vec& y) const { return vec_sub(x, y); }
  Vec scale(const Elem& c, const Vec& x) const { return vec_scale(c, x); }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec conjugate(const Vec& x) const;  // canonical involution sigma
  Elem trd(const Vec& x) const;
  Elem nrd(const Vec& x) const;
  // x in K*1 ?
  bool is_scalar(const Vec& x) const;
  // c with x = c*1, if any.
  std::optional<Elem> scalar_value(const Vec& x) const;

  QuadraticForm norm_form() const;
  // Checks associativity and the defining relations on the basis.
  bool check_axioms() const;
  std::string str() const;

 private:
  QuaternionAlgebra() = default;
  Elem to_e(const Elem& c0, const Elem& c1) const;
  std::pair<Elem, Elem> from_e(const Elem& l) const;
  Field k_;
  Ext e_;
  Elem a_;
};

struct SplitVerdict {
  Verdict verdict = Verdict::kUnknown;  // kIsotropic = split
  Vec zero_divisor;                     // nonzero x with Nrd(x) = 0 when split
  std::string method;
};
SplitVerdict is_split(const QuaternionAlgebra& q, const OracleOptions& opts = {});

struct QuadraticEmbedding {
  SearchOutcome outcome = SearchOutcome::kBudgetExhausted;
  Vec x;  // x^2 - p x + q = 0, x not in K*1
  std::string method;
};
// Element with reduced trace p and reduced norm q outside K*1.
QuadraticEmbedding embed_quadratic_algebra(const QuaternionAlgebra& q, const Elem& p, const Elem& n,
                                           const OracleOptions& opts = {});

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_QUATERNION_HPP_
