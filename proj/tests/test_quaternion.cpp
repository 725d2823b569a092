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

#include "albert.hpp"
#include "oracles.hpp"
#include "quaternion.hpp"
#include "support.hpp"

using namespace albertkit;

namespace {

// Hamilton product in the basis 1, i, j, k with i = e, j = z, k = ez.
Vec hamilton_product(const Vec& x, const Vec& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

std::vector<Quat> sample_algebras() {
  Field f5 = finite_field(5), f4 = finite_field(4), q = rationals();
  Ext k = support::q_sqrt(2);
  Field f2 = finite_field(2);
  return {QuaternionAlgebra::hamilton(q),
          QuaternionAlgebra::make(f5, f5->one(), f5->from_int(3), f5->from_int(2)),
          QuaternionAlgebra::make(f4, f4->one(), parse_elem(f4, "g"), parse_elem(f4, "g+1")),
          QuaternionAlgebra::make(f2, f2->one(), f2->one(), f2->one()),
          QuaternionAlgebra::make(q, q->from_int(1), q->from_int(3), q->from_int(-5)),
          QuaternionAlgebra::make(k, k->zero(), k->from_int(-1), parse_elem(k, "1+w")),
          QuaternionAlgebra::make(make_split(q), make_split(q)->zero(), parse_elem(make_split(q), "[2,3]"),
                                  parse_elem(make_split(q), "[-1,5]"))};
}

}  // namespace

TEST_CASE("Hamilton quaternions match the classical product") {
  Field q = rationals();
  Quat h = QuaternionAlgebra::hamilton(q);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    Vec x = support::random_vec(q, 4, rng), y = support::random_vec(q, 4, rng);
    CHECK(h->mul(x, y) == hamilton_product(x, y));
  }
  CHECK(h->norm_form() == QuadraticForm::diagonal(q, Vec(4, q->one())));
  Vec one_i = {q->one(), q->one(), q->zero(), q->zero()};
  CHECK(h->trd(one_i) == q->from_int(2));
  CHECK(h->nrd(one_i) == q->from_int(2));
  Vec one_z = h->add(h->one(), h->basis(2));
  Vec lhs = h->add(h->sub(h->mul(one_z, one_z), h->scale(q->from_int(2), one_z)), h->scalar(q->from_int(2)));
  CHECK(is_zero_vec(lhs));
}

TEST_CASE("split algebra over F4/F2") {
  Field f2 = finite_field(2);
  Quat q = QuaternionAlgebra::make(f2, f2->one(), f2->one(), f2->one());
  Vec x = q->add(q->one(), q->basis(2));
  CHECK(q->nrd(x).is_zero());
  CHECK(q->norm_form().eval({f2->one(), f2->zero(), f2->one(), f2->zero()}).is_zero());
  SplitVerdict s = is_split(*q);
  REQUIRE(s.verdict == Verdict::kIsotropic);
  CHECK(q->nrd(s.zero_divisor).is_zero());
}

TEST_CASE("zero parameter is rejected") {
  Field q = rationals();
  try {
    QuaternionAlgebra::make(q, q->zero(), q->from_int(-1), q->zero());
    FAIL("expected ZeroParameter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroParameter);
  }
}

TEST_CASE("algebra identities on random elements") {
  std::mt19937_64 rng(2);
  for (const Quat& q : sample_algebras()) {
    CAPTURE(q->str());
    CHECK(q->check_axioms());
    CHECK(classify(q->norm_form()).nonsingular);
    CHECK(q->norm_form().eval(q->one()).is_one());
    const Field& k = q->base();
    for (int t = 0; t < 100; ++t) {
      Vec x = support::random_vec(k, 4, rng), y = support::random_vec(k, 4, rng);
      Vec ch = q->add(q->sub(q->mul(x, x), q->scale(q->trd(x), x)), q->scalar(q->nrd(x)));
      CHECK(is_zero_vec(ch));
      CHECK(q->nrd(q->mul(x, y)) == q->nrd(x) * q->nrd(y));
      CHECK(q->trd(q->mul(x, y)) == q->trd(q->mul(y, x)));
      CHECK(q->conjugate(q->conjugate(x)) == x);
      CHECK(q->conjugate(q->mul(x, y)) == q->mul(q->conjugate(y), q->conjugate(x)));
      CHECK(q->mul(x, q->conjugate(x)) == q->scalar(q->nrd(x)));
      CHECK(q->norm_form().eval(x) == q->nrd(x));
    }
  }
}

TEST_CASE("split test agrees with an independent zero-divisor search") {
  for (int order : {3, 4, 5}) {
    Field f = finite_field(order);
    std::vector<Vec> all = oracle::all_vectors(f, 4);
    std::mt19937_64 rng(order);
    for (int t = 0; t < 5; ++t) {
      Elem alpha = support::random_elem(f, rng), beta = support::random_nonzero(f, rng), a = support::random_nonzero(f, rng);
      Quat q;
      try {
        q = QuaternionAlgebra::make(f, alpha, beta, a);
      } catch (const Error&) {
        continue;
      }
      bool zero_divisor = false;
      for (const Vec& x : all) {
        if (is_zero_vec(x)) continue;
        // x is a zero divisor iff left multiplication by x has a kernel
        for (const Vec& y : all) {
          if (!is_zero_vec(y) && is_zero_vec(q->mul(x, y))) { zero_divisor = true; break; }
        }
        if (zero_divisor) break;
      }
      CHECK(zero_divisor);
      CHECK(is_split(*q).verdict == Verdict::kIsotropic);
    }
  }
}

TEST_CASE("division examples") {
  CHECK(is_split(*QuaternionAlgebra::hamilton(rationals())).verdict == Verdict::kAnisotropic);
  CHECK(is_split(*QuaternionAlgebra::hamilton(support::q_sqrt(2))).verdict == Verdict::kAnisotropic);
  Field q = rationals();
  CHECK(is_split(*QuaternionAlgebra::make(q, q->zero(), q->one(), q->from_int(3))).verdict == Verdict::kIsotropic);
}

TEST_CASE("embedding quadratic algebras") {
  Field q = rationals();
  Quat h = QuaternionAlgebra::hamilton(q);
  QuadraticEmbedding i = embed_quadratic_algebra(*h, q->zero(), q->one());
  REQUIRE(i.outcome == SearchOutcome::kFound);
  CHECK(h->trd(i.x).is_zero());
  CHECK(h->nrd(i.x).is_one());
  CHECK_FALSE(h->is_scalar(i.x));
  CHECK(embed_quadratic_algebra(*h, q->zero(), q->from_int(-1)).outcome == SearchOutcome::kProvenNone);
  QuadraticEmbedding two = embed_quadratic_algebra(*h, q->zero(), q->from_int(2));
  REQUIRE(two.outcome == SearchOutcome::kFound);
  CHECK(h->nrd(two.x) == q->from_int(2));
  Quat split = QuaternionAlgebra::make(q, q->zero(), q->one(), q->one());
  QuadraticEmbedding idem = embed_quadratic_algebra(*split, q->one(), q->zero());
  REQUIRE(idem.outcome == SearchOutcome::kFound);
  CHECK(split->mul(idem.x, idem.x) == idem.x);
}

TEST_CASE("disjoint subalgebra witnesses") {
  Ext k = support::q_sqrt(2);
  Quat h = QuaternionAlgebra::hamilton(k);
  WitnessCheck i = validate_witness(*h, h->basis(1), true);
  CHECK(i.ok);
  CHECK(i.trd.is_zero());
  CHECK(i.nrd.is_one());
  CHECK_FALSE(validate_witness(*h, h->scalar(k->generator()), false).ok);
  CHECK(validate_witness(*h, h->scale(k->generator(), h->basis(1)), true).ok);
  // trace 2 sqrt(2) is not in F
  CHECK_FALSE(validate_witness(*h, h->add(h->scalar(k->generator()), h->basis(1)), false).ok);
  SubalgebraSearch s = find_disjoint_quadratic_subalgebra(h, true);
  REQUIRE(s.outcome == SearchOutcome::kFound);
  CHECK(validate_witness(*h, s.x, true).ok);

  Ext f4 = support::f4_over_f2();
  Quat c = QuaternionAlgebra::make(f4, f4->one(), f4->generator(), f4->one());
  // z: Trd 0, Nrd 1 -- a witness for (i) only in characteristic 2
  WitnessCheck z = validate_witness(*c, c->basis(2), false);
  CHECK(z.ok);
  CHECK_FALSE(validate_witness(*c, c->basis(2), true).ok);
  SubalgebraSearch e = find_disjoint_quadratic_subalgebra(c, true);
  REQUIRE(e.outcome == SearchOutcome::kFound);
  CHECK_FALSE(c->trd(e.x).is_zero());
}
