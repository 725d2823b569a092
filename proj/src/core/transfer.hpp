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

// Transfer of quadratic forms along a quadratic field extension K/F and the
// constructive descent of a form phi over K to a form psi over F with
// psi_K a subform of phi and dim psi equal to the Witt index of the transfer.

#ifndef ALBERTKIT_CORE_TRANSFER_HPP_
#define ALBERTKIT_CORE_TRANSFER_HPP_

#include <string>
#include <vector>

#include "isotropy.hpp"

namespace albertkit {

// F-coordinates (x_1, y_1, ..., x_n, y_n) <-> K-vector (x_i + y_i w).
Vec to_k_vector(const EtaleQuadratic& k, const Vec& f_coords);
Vec to_f_coords(const EtaleQuadratic& k, const Vec& k_vector);

// s_*phi(x) = s(phi(x)) in the F-basis {b, w b} of each K-basis vector b.
// Throws kSplitK for split K.
QuadraticForm transfer(const QuadraticForm& phi);

struct DescentStep {
  std::string kind;  // "hyperbolic", "line" or "plane"
  Vec u, v, w;       // K-vectors in the coordinates of phi (v, w empty when unused)
  Elem lambda;       // element with s(lambda) = 1 (plane steps)
  std::size_t witt_index_before = 0;
};

struct DescentResult {
  QuadraticForm psi;            // over F
  std::vector<Vec> embedding;   // K-vectors, images of the basis of psi
  std::vector<DescentStep> steps;
  std::size_t transfer_witt_index = 0;
};

// Throws kPrecondition unless phi is nonsingular over a quadratic field
// extension, kOracleIncomplete when an isotropy question stays open, and
// kInternalContradiction if a step of the construction fails its check.
DescentResult descend(const QuadraticForm& phi, const OracleOptions& opts = {});

// Exact re-check of a descent: phi(embed x) = psi_K(x) and K-independence.
bool verify_descent(const QuadraticForm& phi, const DescentResult& r);

// For phi with hyperbolic transfer: true iff phi is extended from F, with
// psi as the witness. Throws kPrecondition when the transfer is not hyperbolic.
bool extended_from_base(const QuadraticForm& phi, const OracleOptions& opts = {},
                        DescentResult* out = nullptr);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_TRANSFER_HPP_
