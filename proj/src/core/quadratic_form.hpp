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

// Quadratic forms phi(x) = sum_{i<=j} M_ij x_i x_j over any field context.

#ifndef ALBERTKIT_CORE_QUADRATIC_FORM_HPP_
#define ALBERTKIT_CORE_QUADRATIC_FORM_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace albertkit {

class QuadraticForm {
 public:
  QuadraticForm() = default;
  // Entries strictly below the diagonal must be zero.
  QuadraticForm(Field f, Mat upper);
  static QuadraticForm diagonal(const Field& f, const Vec& coeffs);
  // [a, b, c] = a x^2 + b xy + c y^2.
  static QuadraticForm binary(const Elem& a, const Elem& b, const Elem& c);
  static QuadraticForm hyperbolic_plane(const Field& f);
  // The form x -> x^T m x restricted to upper-triangular coefficients.
  static QuadraticForm from_square_matrix(const Field& f, const Mat& m);

  const Field& field() const { return f_; }
  std::size_t dim() const { return n_; }
  const Mat& upper() const { return m_; }
  const Elem& coeff(std::size_t i, std::size_t j) const { return m_[i][j]; }

  Elem eval(const Vec& x) const;
  Elem polar(const Vec& x, const Vec& y) const;
  Mat polar_matrix() const;

  // Gram data of phi restricted to span(basis); throws kDependentBasis.
  QuadraticForm restrict(const std::vector<Vec>& basis) const;
  // As restrict, without the independence check.
  QuadraticForm pullback(const std::vector<Vec>& images) const;
  QuadraticForm scale(const Elem& c) const;
  QuadraticForm base_change(const Field& to) const;

  bool operator==(const QuadraticForm& o) const;
  bool operator!=(const QuadraticForm& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Field f_;
  std::size_t n_ = 0;
  Mat m_;
};

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b);

struct FormClass {
  bool nonsingular = false;
  bool regular = false;
  bool nondegenerate = false;
  std::vector<Vec> rad_polar;  // basis of rad b_phi
  std::vector<Vec> rad;        // basis of rad phi
};

FormClass classify(const QuadraticForm& phi);

// Basis of {x in span(rad_polar) : phi(x) = 0}. In characteristic 2 over an
// imperfect field only radicals of dimension <= 2 are supported.
std::vector<Vec> quadratic_radical(const QuadraticForm& phi, const std::vector<Vec>& rad_polar);

// Orthogonal complement of span(vectors) with respect to the polar form.
std::vector<Vec> polar_complement(const QuadraticForm& phi, const std::vector<Vec>& vectors);

enum class SearchOutcome { kFound, kProvenNone, kBudgetExhausted };

struct Embedding {
  SearchOutcome outcome = SearchOutcome::kBudgetExhausted;
  std::vector<Vec> images;  // images of the basis of psi (if found)
};

// Injective linear U with phi(U x) = psi(x). Complete over finite fields
// when the ambient space has at most `enumeration_cap` vectors; otherwise
// searches coordinates of height <= `height`.
Embedding isometric_embedding(const QuadraticForm& psi, const QuadraticForm& phi, int height = 20,
                              std::size_t enumeration_cap = 200000);

// Visits, in a fixed order, the nonzero vectors whose coordinates come from
// f->small_elements(height) and not all from the previous height, keeping one
// of x and -x (projective = true additionally keeps one vector per line over
// finite fields). Over finite fields every vector has height 0. Stops early
// when visit returns true; returns whether it stopped.
bool for_each_vector(const Field& f, std::size_t n, int height, bool projective,
                     const std::function<bool(const Vec&)>& visit);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_QUADRATIC_FORM_HPP_
