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

#ifndef ALBERTKIT_CORE_ALGEBRA_HPP_
#define ALBERTKIT_CORE_ALGEBRA_HPP_

#include <cstddef>
#include <vector>

#include "linalg.hpp"

namespace albertkit {

// Finite-dimensional algebra given by structure constants: b_i b_j = table[i][j].
struct StructAlgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::vector<Vec>> table;
  Vec unit;

  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis(std::size_t i) const { return unit_vec(field, dim, i); }
  bool is_associative() const;
  bool is_unital() const;
};

// Tensor product with basis a_i (x) b_j at index i * B.dim + j.
StructAlgebra tensor_product(const StructAlgebra& a, const StructAlgebra& b);

// Checks that the linear map sending basis i of `from` to images[i] is a unital algebra isomorphism.
bool is_algebra_isomorphism(const StructAlgebra& from, const StructAlgebra& to, const std::vector<Vec>& images);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_ALGEBRA_HPP_
