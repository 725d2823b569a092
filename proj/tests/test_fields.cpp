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

#include "field.hpp"
#include "linalg.hpp"
#include "support.hpp"

using namespace albertkit;
using support::random_elem;

namespace {

std::vector<Field> extension_fields() {
  return {support::q_sqrt(2), support::f4_over_f2(), support::f9_over_f3(), make_split(rationals()),
          make_generated(finite_field(5), finite_field(5)->one(), finite_field(5)->from_int(3)),
          make_split(rational_functions(rationals()))};
}

}  // namespace

TEST_CASE("gamma on Q(sqrt 2) negates the root") {
  Ext k = support::q_sqrt(2);
  Elem r = k->generator();
  CHECK(k->gamma(r) == -r);
  CHECK(r * r == k->from_int(2));
}

TEST_CASE("F4 over F2: gamma(w) = w + 1") {
  Ext k = support::f4_over_f2();
  Elem w = k->generator();
  CHECK(k->gamma(w) == w + k->one());
  CHECK(k->is_field());
}

TEST_CASE("inseparable presentation is rejected") {
  Field f2 = finite_field(2);
  try {
    make_generated(f2, f2->zero(), f2->one());
    FAIL("expected NotEtale");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotEtale);
  }
}

TEST_CASE("s functional examples") {
  Ext k = support::q_sqrt(2);
  Field q = rationals();
  CHECK(k->s_functional(k->make(q->from_int(3), q->from_int(5))) == q->from_int(5));
  Ext f4 = support::f4_over_f2();
  CHECK(f4->s_functional(f4->one()).is_zero());
  CHECK(f4->s_functional(f4->generator()).is_one());
  Ext qq = make_split(q);
  CHECK(qq->s_functional(qq->one()).is_zero());
  CHECK(qq->s_functional(qq->make(q->zero(), q->one())).is_one());
}

TEST_CASE("canonical kappa") {
  Ext k = support::q_sqrt(2);
  CHECK(k->kappa() == k->generator() + k->generator());
  CHECK(support::f4_over_f2()->kappa().is_one());
  Ext qq = make_split(rationals());
  CHECK(qq->kappa() == qq->make(rationals()->one(), rationals()->from_int(-1)));
  for (const Field& f : extension_fields()) {
    const auto* e = as_ext(f);
    CHECK(e->gamma(e->kappa()) == -e->kappa());
    if (f->characteristic() != 2) CHECK_FALSE(e->s_functional(e->kappa()).is_zero());
  }
}

TEST_CASE("random element identities in etale algebras") {
  std::mt19937_64 rng(7);
  for (const Field& f : extension_fields()) {
    const auto* k = as_ext(f);
    CAPTURE(f->spec());
    CHECK(k->s_functional(k->one()).is_zero());
    for (int i = 0; i < 200; ++i) {
      Elem x = random_elem(f, rng), y = random_elem(f, rng);
      CHECK(k->gamma(k->gamma(x)) == x);
      CHECK((k->gamma(x) == x) == k->in_base(x).has_value());
      CHECK(k->gamma(x * y) == k->gamma(x) * k->gamma(y));
      // x^2 - T(x) x + N(x) = 0
      CHECK((x * x - k->embed(k->trace(x)) * x + k->embed(k->norm(x))).is_zero());
      Elem l = random_elem(k->base(), rng), m = random_elem(k->base(), rng);
      CHECK(k->s_functional(k->embed(l) * x + k->embed(m) * y) ==
            l * k->s_functional(x) + m * k->s_functional(y));
      if (!k->norm(x).is_zero()) CHECK((x * x.inv()).is_one());
    }
  }
}

TEST_CASE("base field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (const Field& f : {rationals(), finite_field(5), finite_field(4), finite_field(9),
                         rational_functions(rationals()), rational_functions(finite_field(2))}) {
    CAPTURE(f->spec());
    for (int i = 0; i < 100; ++i) {
      Elem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == f->zero());
      if (!a.is_zero()) CHECK((a / a).is_one());
      if (auto r = f->sqrt(a * a)) CHECK(*r * *r == a * a);
    }
  }
}

TEST_CASE("finite field order and Frobenius") {
  Field f9 = finite_field(9);
  CHECK(f9->elements().size() == 9);
  CHECK(f9->characteristic() == 3);
  for (const Elem& x : f9->elements()) CHECK(x.pow(9) == x);
}

TEST_CASE("field spec grammar round trips") {
  for (std::string s : {"Q", "F(5)", "F(4)", "Q(t)", "F(2)(t)", "Q/x^2-2", "Q/split", "F(2)/x^2+x+1"}) {
    Field f = parse_field(s);
    CHECK(parse_field(f->spec())->spec() == f->spec());
  }
  Field k = parse_field("Q/x^2-2");
  CHECK(parse_elem(k, "w*w") == k->from_int(2));
}

TEST_CASE("linear algebra examples") {
  Field q = rationals();
  Mat id = {{q->one(), q->zero()}, {q->zero(), q->one()}};
  CHECK(kernel(q, id, 2).empty());
  Field f2 = finite_field(2);
  Mat z = {{f2->zero(), f2->zero()}, {f2->zero(), f2->zero()}};
  CHECK(kernel(f2, z, 2).size() == 2);
  Mat m = {{q->one(), q->one()}, {q->zero(), q->zero()}};
  Vec x = solve(q, m, {q->one(), q->zero()}, 2);
  CHECK(x[0] + x[1] == q->one());
  CHECK_FALSE(try_solve(q, m, {q->zero(), q->one()}, 2).has_value());
  try {
    solve(q, m, {q->zero(), q->one()}, 2);
    FAIL("expected NoSolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoSolution);
  }
}
