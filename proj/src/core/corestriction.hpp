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

#ifndef ALBERTKIT_CORE_CORESTRICTION_HPP_
#define ALBERTKIT_CORE_CORESTRICTION_HPP_

#include <memory>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "quaternion.hpp"

namespace albertkit {

// The K-algebra ^gamma Q (x)_K Q for Q over a quadratic etale K/F.
// Elements are 16 K-coordinates; index 4i + j holds the coefficient of ^gamma b_i (x) b_j,
// where b = {1, e, z, ez} is the standard basis of Q.
class TensorAlgebra {
 public:
  explicit TensorAlgebra(Quat q);

  const Quat& quaternion() const { return q_; }
  const Field& K() const { return q_->base(); }
  const Field& F() const { return ext_->base(); }
  const EtaleQuadratic& ext() const { return *ext_; }

  Vec zero() const;
  Vec one() const;
  Vec scalar(const Elem& k) const;
  Vec pure(const Vec& x, const Vec& y) const;  // ^gamma x (x) y
  Vec mul(const Vec& x, const Vec& y) const;
  Vec switch_map(const Vec& xi) const;       // gamma-semilinear
  Vec conjugate_first(const Vec& xi) const;  // sigma (x) id
  Vec realify(const Vec& xi) const;          // 32 F-coordinates
  Vec unrealify(const Vec& c) const;

 private:
  Quat q_;
  const EtaleQuadratic* ext_;
  std::vector<std::vector<Vec>> qtab_;    // b_i b_k in K-coordinates
  std::vector<std::vector<Vec>> qtab_g_;  // gamma applied to qtab_
};

// Fixed points of the switch map, with structure constants over F.
struct CorestrictionAlgebra {
  std::shared_ptr<const TensorAlgebra> tensor;
  std::vector<Vec> basis;  // 16 s-fixed tensor elements
  StructAlgebra algebra;
  Mat real_columns;        // realified basis as a 32 x 16 system

  // F-coordinates of an element of the fixed algebra; throws kValueNotInF otherwise.
  Vec coords(const Vec& xi) const;
  Vec element(const Vec& c) const;
  bool contains(const Vec& xi) const;
};

CorestrictionAlgebra corestriction(const Quat& q);

// The 16 fixed basis elements stay K-independent in the tensor algebra.
bool scalar_extension_is_bijective(const CorestrictionAlgebra& cor);

// Components of a quaternion algebra over split K = F x F.
std::pair<Quat, Quat> split_components(const Quat& q);
StructAlgebra structure_of(const QuaternionAlgebra& q);

// Over split K: Q1 (x)_F Q2 built directly, and the projection from the fixed-point
// construction checked to be an algebra isomorphism onto it.
struct SplitComparison {
  StructAlgebra direct;
  std::vector<Vec> images;
  bool isomorphic = false;
};
SplitComparison compare_with_split_product(const CorestrictionAlgebra& cor);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_CORESTRICTION_HPP_
