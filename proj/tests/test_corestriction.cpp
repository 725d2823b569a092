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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corestriction.hpp"
#include "support.hpp"

using namespace albertkit;

namespace {

std::vector<Quat> sample_algebras() {
  Ext k2 = support::q_sqrt(2), f4 = support::f4_over_f2(), f9 = support::f9_over_f3();
  Ext qq = make_split(rationals());
  return {QuaternionAlgebra::hamilton(k2),
          QuaternionAlgebra::make(k2, k2->one(), parse_elem(k2, "w"), parse_elem(k2, "3-w")),
          QuaternionAlgebra::make(f4, f4->one(), f4->generator(), f4->one()),
          QuaternionAlgebra::make(f9, f9->zero(), parse_elem(f9, "1+w"), parse_elem(f9, "w")),
          QuaternionAlgebra::hamilton(qq),
          QuaternionAlgebra::make(qq, qq->zero(), parse_elem(qq, "[2,-3]"), parse_elem(qq, "[5,7]"))};
}

Vec random_tensor(const TensorAlgebra& t, std::mt19937_64& rng) {
  return support::random_vec(t.K(), 16, rng, 2);
}

}  // namespace

TEST_CASE("fixed algebra is a 16-dimensional unital associative algebra") {
  for (const Quat& q : sample_algebras()) {
    CAPTURE(q->str());
    CorestrictionAlgebra cor = corestriction(q);
    CHECK(cor.basis.size() == 16);
    CHECK(cor.algebra.dim == 16);
    CHECK(cor.algebra.is_associative());
    CHECK(cor.algebra.is_unital());
    CHECK(scalar_extension_is_bijective(cor));
    for (const Vec& b : cor.basis) CHECK(cor.tensor->switch_map(b) == b);
    for (std::size_t i = 0; i < 16; i += 5)
      for (std::size_t j = 0; j < 16; j += 3) CHECK(cor.contains(cor.tensor->mul(cor.basis[i], cor.basis[j])));
    CHECK(cor.contains(cor.tensor->one()));
  }
}

TEST_CASE("switch map: involutive, semilinear, multiplicative") {
  std::mt19937_64 rng(6);
  for (const Quat& q : sample_algebras()) {
    CAPTURE(q->str());
    TensorAlgebra t(q);
    const EtaleQuadratic& k = t.ext();
    CHECK(t.switch_map(t.one()) == t.one());
    for (std::size_t i = 0; i < 16; ++i) {
      Vec e = unit_vec(t.K(), 16, i);
      CHECK(t.switch_map(t.switch_map(e)) == e);
    }
    for (int r = 0; r < 20; ++r) {
      Vec xi = random_tensor(t, rng), eta = random_tensor(t, rng);
      Elem l = support::random_elem(t.K(), rng);
      CHECK(t.switch_map(vec_scale(l, xi)) == vec_scale(k.gamma(l), t.switch_map(xi)));
      CHECK(t.switch_map(t.mul(xi, eta)) == t.mul(t.switch_map(xi), t.switch_map(eta)));
      CHECK(t.unrealify(t.realify(xi)) == xi);
      Vec x1 = support::random_vec(t.K(), 4, rng), y1 = support::random_vec(t.K(), 4, rng);
      Vec x2 = support::random_vec(t.K(), 4, rng), y2 = support::random_vec(t.K(), 4, rng);
      // ^g x1 (x) y1 . ^g x2 (x) y2 = ^g(x1 x2) (x) y1 y2
      CHECK(t.mul(t.pure(x1, y1), t.pure(x2, y2)) == t.pure(q->mul(x1, x2), q->mul(y1, y2)));
      CHECK(t.switch_map(t.pure(x1, y1)) == t.pure(y1, x1));
      CHECK(t.conjugate_first(t.pure(x1, y1)) == t.pure(q->conjugate(x1), y1));
    }
  }
}

TEST_CASE("coordinates of fixed elements round trip") {
  std::mt19937_64 rng(14);
  CorestrictionAlgebra cor = corestriction(QuaternionAlgebra::hamilton(support::q_sqrt(2)));
  for (int r = 0; r < 20; ++r) {
    Vec c = support::random_vec(cor.tensor->F(), 16, rng);
    Vec xi = cor.element(c);
    CHECK(cor.coords(xi) == c);
  }
  Vec w1 = cor.tensor->scalar(cor.tensor->ext().generator());
  CHECK_FALSE(cor.contains(w1));
  try {
    cor.coords(w1);
    FAIL("expected ValueNotInF");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kValueNotInF);
  }
}

TEST_CASE("split K agrees with the product of the components") {
  Ext qq = make_split(rationals());
  Quat q = QuaternionAlgebra::make(qq, qq->zero(), parse_elem(qq, "[2,-3]"), parse_elem(qq, "[5,7]"));
  auto [q1, q2] = split_components(q);
  Field f = rationals();
  CHECK(q1->e_beta() == f->from_int(2));
  CHECK(q2->e_beta() == f->from_int(-3));
  CHECK(q1->a() == f->from_int(5));
  CHECK(q2->a() == f->from_int(7));
  CorestrictionAlgebra cor = corestriction(q);
  SplitComparison c = compare_with_split_product(cor);
  CHECK(c.isomorphic);
  CHECK(is_algebra_isomorphism(cor.algebra, c.direct, c.images));
  CHECK(c.direct.dim == 16);
}

TEST_CASE("Hamilton pair over Q x Q gives H (x) H") {
  Ext qq = make_split(rationals());
  CorestrictionAlgebra cor = corestriction(QuaternionAlgebra::hamilton(qq));
  SplitComparison c = compare_with_split_product(cor);
  REQUIRE(c.isomorphic);
  StructAlgebra hh = tensor_product(structure_of(*QuaternionAlgebra::hamilton(rationals())),
                                    structure_of(*QuaternionAlgebra::hamilton(rationals())));
  CHECK(c.direct.table == hh.table);
}
