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

// Random inputs and shared fixtures for the tests.

#ifndef ALBERTKIT_TESTS_SUPPORT_HPP_
#define ALBERTKIT_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "field.hpp"
#include "quadratic_form.hpp"

namespace support {

using namespace albertkit;

inline Elem random_elem(const Field& f, std::mt19937_64& rng, int height = 3) {
  if (f->kind() == FieldKind::kQuadratic) {
    const auto* k = as_ext(f);
    return k->make(random_elem(k->base(), rng, height), random_elem(k->base(), rng, height));
  }
  std::vector<Elem> pool = f->is_finite() ? f->elements() : f->small_elements(height);
  return pool[rng() % pool.size()];
}

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng, int height = 3) {
  for (;;) {
    Elem e = random_elem(f, rng, height);
    if (f->kind() == FieldKind::kQuadratic) {
      // units only: a nonzero norm also excludes zero divisors of F x F
      if (!as_ext(f)->norm(e).is_zero()) return e;
    } else if (!e.is_zero()) {
      return e;
    }
  }
}

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng, int height = 3) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_elem(f, rng, height));
  return v;
}

inline QuadraticForm random_form(const Field& f, std::size_t n, std::mt19937_64& rng, int height = 2) {
  Mat m(n, Vec(n, f->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = random_elem(f, rng, height);
  return QuadraticForm(f, m);
}

inline QuadraticForm random_nonsingular(const Field& f, std::size_t n, std::mt19937_64& rng,
                                        int height = 2) {
  for (;;) {
    QuadraticForm phi = random_form(f, n, rng, height);
    if (classify(phi).nonsingular) return phi;
  }
}

// The standard test extensions of the base fields.
inline Ext q_sqrt(long d) { return make_generated(rationals(), rationals()->zero(), rationals()->from_int(d)); }
inline Ext f4_over_f2() {
  Field f2 = finite_field(2);
  return make_generated(f2, f2->one(), f2->one());
}
inline Ext f9_over_f3() {
  Field f3 = finite_field(3);
  return make_generated(f3, f3->zero(), f3->from_int(-1));
}

}  // namespace support

#endif  // ALBERTKIT_TESTS_SUPPORT_HPP_
