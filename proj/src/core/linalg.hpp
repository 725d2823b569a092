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

// Exact Gaussian elimination over any field context.

#ifndef ALBERTKIT_CORE_LINALG_HPP_
#define ALBERTKIT_CORE_LINALG_HPP_

#include <optional>
#include <vector>

#include "field.hpp"

namespace albertkit {

using Mat = std::vector<Vec>;  // row-major

struct Echelon {
  Mat rows;                 // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(const Field& f, Mat m, std::size_t ncols);
std::size_t rank(const Field& f, const Mat& m, std::size_t ncols);
// Basis of {x : m x = 0}; one vector per free column, with a 1 there and
// zeros in the other free columns.
std::vector<Vec> kernel(const Field& f, const Mat& m, std::size_t ncols);
// Some x with m x = rhs (free variables set to 0), or nullopt.
std::optional<Vec> try_solve(const Field& f, const Mat& m, const Vec& rhs, std::size_t ncols);
// As try_solve; throws kNoSolution when inconsistent.
Vec solve(const Field& f, const Mat& m, const Vec& rhs, std::size_t ncols);
// Throws kDependentBasis when singular.
Mat inverse(const Field& f, const Mat& m);

Mat transpose(const Mat& m, std::size_t ncols);
Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
Vec mat_vec(const Field& f, const Mat& a, const Vec& x);
Elem dot(const Field& f, const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Elem& c, const Vec& a);
Mat identity(const Field& f, std::size_t n);

// Image of a scalar of `from` in `to`: identity, base to quadratic
// extension, or coefficients to rational functions.
Elem lift(const Elem& x, const Field& to);
Vec lift(const Vec& v, const Field& to);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_LINALG_HPP_
