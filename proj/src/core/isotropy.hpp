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

// Isotropy decisions with witnesses, Witt decomposition and isotropic bases.

#ifndef ALBERTKIT_CORE_ISOTROPY_HPP_
#define ALBERTKIT_CORE_ISOTROPY_HPP_

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadratic_form.hpp"

namespace albertkit {

enum class Verdict { kIsotropic, kAnisotropic, kUnknown };
const char* verdict_name(Verdict v);

struct IsotropyVerdict {
  Verdict verdict = Verdict::kUnknown;
  Vec witness;         // nonzero zero of the form when isotropic
  std::string method;  // decision procedure that produced the verdict
  int height = -1;     // search height reached by bounded searches
};

struct OracleOptions {
  int max_height = 3;                      // bounded search over infinite fields
  std::size_t budget = 400000;             // vectors visited per bounded search
  std::size_t enumeration_cap = 1u << 21;  // projective points for finite enumeration
};

// Dispatches on the field: finite fields use the structured decision, Q uses
// Hasse-Minkowski, rational function fields in odd characteristic use
// Springer reduction, real quadratic fields use definiteness; all fall back
// to bounded search.
IsotropyVerdict isotropy(const QuadraticForm& phi, const OracleOptions& opts = {});

// Finite fields.
IsotropyVerdict finite_enumeration(const QuadraticForm& phi, std::size_t cap = 1u << 21);
IsotropyVerdict finite_structured(const QuadraticForm& phi);

// Local Hilbert symbol (a,b)_p for nonzero rationals; p = 0 is the real place.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p);
// Primes at which some (a,b)_p can be -1: 2 and the primes dividing a or b.
std::vector<mpz_class> relevant_primes(const std::vector<mpq_class>& values);
IsotropyVerdict hasse_minkowski(const QuadraticForm& phi);
// Witt index over Q from dimension, signature, discriminant and Hasse
// invariants; no witnesses. Counts the radical, like WittDecomposition.
std::size_t rational_witt_index(const QuadraticForm& phi);
// Nonzero integer solution of a x^2 + b y^2 + c z^2 = 0, or nullopt when
// none exists (complete decision).
std::optional<std::array<mpz_class, 3>> solve_ternary(const mpz_class& a, const mpz_class& b,
                                                      const mpz_class& c);

// Throws kNotApplicable outside Q(t) / F_q(t) with q odd.
IsotropyVerdict springer_reduce(const QuadraticForm& phi, const OracleOptions& opts = {});
IsotropyVerdict bounded_search(const QuadraticForm& phi, int height, std::size_t budget = 400000);

// Orthogonal basis for char != 2. Either returns an isotropic vector met on
// the way, or nonzero diagonal coefficients with the corresponding basis.
struct Diagonalization {
  std::optional<Vec> isotropic;
  Vec coeffs;
  std::vector<Vec> basis;
};
Diagonalization diagonalize(const QuadraticForm& phi);

struct WittDecomposition {
  std::vector<Vec> radical;                    // basis of rad phi
  std::vector<std::pair<Vec, Vec>> planes;     // hyperbolic pairs, phi(e)=phi(f)=0, polar(e,f)=1
  std::vector<Vec> kernel_basis;               // anisotropic part
  QuadraticForm kernel;
  std::vector<std::string> methods;            // oracle methods used
  std::size_t radical_dim() const { return radical.size(); }
  std::size_t hyperbolic_count() const { return planes.size(); }
  std::size_t witt_index() const { return planes.size() + radical.size(); }
  // Rows: radical, then e_1, f_1, ..., then the kernel basis.
  Mat change_of_basis() const;
};

// Throws kOracleIncomplete when a regular part cannot be decided.
WittDecomposition witt_decompose(const QuadraticForm& phi, const OracleOptions& opts = {});
std::size_t witt_index(const QuadraticForm& phi, const OracleOptions& opts = {});
// Exact check that phi in the decomposition's basis is 0 + H^m + kernel.
bool verify_witt_decomposition(const QuadraticForm& phi, const WittDecomposition& w);

// Basis of isotropic vectors of a regular isotropic form, built from one
// isotropic vector. Throws kNotIsotropic.
std::vector<Vec> isotropic_spanning_set(const QuadraticForm& phi, const OracleOptions& opts = {},
                                        const std::optional<Vec>& seed = std::nullopt);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_ISOTROPY_HPP_
