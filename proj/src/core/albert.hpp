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

#ifndef ALBERTKIT_CORE_ALBERT_HPP_
#define ALBERTKIT_CORE_ALBERT_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corestriction.hpp"

namespace albertkit {

// kappa with gamma(kappa) = -kappa: 1 in characteristic 2, the generator when its trace is 0,
// 2w - alpha otherwise, (1, -1) for split K.
Elem pick_kappa(const EtaleQuadratic& ext);

// The s-invariant space {^gamma y (x) 1 + 1 (x) y : T(Trd(y)) = 0} with its quadratic form
// xi(y) -> kappa (gamma(Nrd y) - Nrd y), in coordinates of a fixed 6-element basis.
struct AlbertData {
  std::shared_ptr<const TensorAlgebra> tensor;
  Elem kappa;
  std::vector<Vec> y_basis;   // quaternion elements over K
  std::vector<Vec> xi_basis;  // tensor elements
  Vec kernel_y;               // nonzero y with xi(y) = 0
  QuadraticForm form;         // over F, dim 6
  Mat xi_real_columns;

  const QuaternionAlgebra& quaternion() const { return *tensor->quaternion(); }
  const Field& F() const { return tensor->F(); }
  Elem trace_condition(const Vec& y) const;  // T(Trd(y))
  Vec xi_of(const Vec& y) const;
  // kappa (gamma(Nrd y) - Nrd y); throws kValueNotInF if not in F.
  Elem value(const Vec& y) const;
  Vec y_of(const Vec& c) const;
  Vec xi_from(const Vec& c) const;
  std::optional<Vec> xi_coords(const Vec& xi) const;
};

AlbertData albert_form(const Quat& q, std::optional<Elem> kappa = std::nullopt);

// 2x2 matrices over the tensor algebra.
struct M2 {
  Vec a, b, c, d;  // [[a, b], [c, d]]
};
M2 m2_mul(const TensorAlgebra& t, const M2& x, const M2& y);
bool m2_is_zero(const M2& x);
bool m2_is_scalar(const M2& x, const Elem& c);

// [[0, kappa (sigma (x) id)(xi)], [xi, 0]]
M2 f_map(const AlbertData& d, const Vec& xi);

struct FMapReport {
  bool identity_holds = true;       // f(xi)^2 = phi(xi) on every tested xi
  bool entries_fixed = true;        // both entries lie in the fixed algebra
  bool polarization_holds = true;   // f(x)f(y) + f(y)f(x) = b(x, y)
  std::size_t checked = 0;
  std::string interpretation = "first-factor conjugation";
};
// Throws kIdentityFails when the identity breaks.
FMapReport f_map_check(const AlbertData& d, std::size_t random_count = 100, std::uint64_t seed = 1);

struct DivisionVerdict {
  Verdict albert = Verdict::kUnknown;  // kIsotropic: Cor is not a division algebra
  std::string method;
  Vec coords;  // isotropic vector in Albert coordinates
  Vec y;
  Vec xi;
  M2 nilpotent;  // f(xi), nonzero with square 0
};
DivisionVerdict cor_is_division(const AlbertData& d, const OracleOptions& opts = {});

struct WitnessCheck {
  bool ok = false;
  std::string reason;
  Elem trd, nrd;  // in F when ok
};
// Condition (i) witness; with etale_required also separable.
WitnessCheck validate_witness(const QuaternionAlgebra& q, const Vec& x, bool etale_required);

struct SubalgebraSearch {
  SearchOutcome outcome = SearchOutcome::kBudgetExhausted;
  Vec x;
  std::string method;
  std::size_t tried = 0;
};
SubalgebraSearch find_disjoint_quadratic_subalgebra(const Quat& q, bool etale_required,
                                                    const OracleOptions& opts = {});

struct IsotropicVector {
  Vec y, xi, coords;
};
// x a condition (i) witness; throws kInvalidWitness otherwise.
IsotropicVector generator_to_isotropic(const AlbertData& d, const Vec& x);

// coords an isotropic Albert vector; returns a separable witness kappa * y.
SubalgebraSearch isotropic_to_generator(const AlbertData& d, const Vec& coords, const OracleOptions& opts = {});

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_ALBERT_HPP_
