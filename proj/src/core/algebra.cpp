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

#include "algebra.hpp"

namespace albertkit {

Vec StructAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Elem c = x[i] * y[j];
      const Vec& t = table[i][j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!t[k].is_zero()) out[k] += c * t[k];
    }
  }
  return out;
}

bool StructAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (mul(table[i][j], basis(k)) != mul(basis(i), table[j][k])) return false;
  return true;
}

bool StructAlgebra::is_unital() const {
  for (std::size_t i = 0; i < dim; ++i)
    if (mul(unit, basis(i)) != basis(i) || mul(basis(i), unit) != basis(i)) return false;
  return true;
}

StructAlgebra tensor_product(const StructAlgebra& a, const StructAlgebra& b) {
  AK_CHECK(same_field(a.field, b.field));
  StructAlgebra t;
  t.field = a.field;
  t.dim = a.dim * b.dim;
  t.table.assign(t.dim, std::vector<Vec>(t.dim));
  auto pure = [&](const Vec& x, const Vec& y) {
    Vec out = zero_vec(t.field, t.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.dim; ++j) out[i * b.dim + j] = x[i] * y[j];
    }
    return out;
  };
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l)
          t.table[i * b.dim + j][k * b.dim + l] = pure(a.table[i][k], b.table[j][l]);
  t.unit = pure(a.unit, b.unit);
  return t;
}

bool is_algebra_isomorphism(const StructAlgebra& from, const StructAlgebra& to, const std::vector<Vec>& images) {
  if (images.size() != from.dim || from.dim != to.dim) return false;
  if (rank(to.field, images, to.dim) != to.dim) return false;
  auto image = [&](const Vec& x) {
    Vec out = zero_vec(to.field, to.dim);
    for (std::size_t i = 0; i < from.dim; ++i)
      if (!x[i].is_zero()) out = vec_add(out, vec_scale(x[i], images[i]));
    return out;
  };
  if (image(from.unit) != to.unit) return false;
  for (std::size_t i = 0; i < from.dim; ++i)
    for (std::size_t j = 0; j < from.dim; ++j)
      if (image(from.table[i][j]) != to.mul(images[i], images[j])) return false;
  return true;
}

}  // namespace albertkit
