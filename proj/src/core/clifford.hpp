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

#ifndef ALBERTKIT_CORE_CLIFFORD_HPP_
#define ALBERTKIT_CORE_CLIFFORD_HPP_

#include <cstdint>
#include <vector>

#include "albert.hpp"

namespace albertkit {

// C(V, phi) with basis e_S for S a subset of {0..n-1}, stored at index mask(S),
// products written in increasing index order.
class CliffordAlgebra {
 public:
  static constexpr std::size_t kMaxDim = 6;
  explicit CliffordAlgebra(QuadraticForm phi);  // throws kDimensionCap

  const QuadraticForm& form() const { return phi_; }
  const Field& field() const { return phi_.field(); }
  std::size_t rank_n() const { return phi_.dim(); }
  std::size_t dim() const { return std::size_t{1} << phi_.dim(); }
  const StructAlgebra& structure() const { return alg_; }

  Vec one() const { return monomial(0); }
  Vec monomial(std::uint32_t mask) const;
  Vec generator(std::size_t i) const { return monomial(std::uint32_t{1} << i); }
  Vec mul(const Vec& x, const Vec& y) const { return alg_.mul(x, y); }

 private:
  Vec mul_generator(std::uint32_t mask, std::size_t i) const;
  QuadraticForm phi_;
  StructAlgebra alg_;
};

// Masks of even size in increasing order.
std::vector<std::uint32_t> even_masks(std::size_t n);
// The even part with basis even_masks(n).
StructAlgebra even_part(const CliffordAlgebra& c);
// Basis of the center of `a` computed from commutators with `generators`.
std::vector<Vec> center(const StructAlgebra& a, const std::vector<Vec>& generators);

struct ArfReport {
  bool trivial = false;
  Vec z;          // generator of the center of C_0 over F (in C_0 coordinates)
  Elem a, b;      // z^2 = a z + b
  Vec idempotent; // nontrivial idempotent of the center when trivial
};
// phi nonsingular of even dimension <= 6.
ArfReport arf_trivial(const QuadraticForm& phi);

struct CliffordIsoReport {
  bool relations_hold = false;
  std::size_t image_rank = 0;  // 64 for an isomorphism onto M_2(Cor)
  bool even_diagonal = false;
  bool odd_off_diagonal = false;
  bool image_fixed = false;    // all entries lie in the fixed algebra
};
// Throws kRelationViolation or kRankDeficient.
CliffordIsoReport clifford_iso_check(const AlbertData& d);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_CLIFFORD_HPP_
