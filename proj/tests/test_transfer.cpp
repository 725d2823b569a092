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

#include "isotropy.hpp"
#include "support.hpp"
#include "transfer.hpp"

using namespace albertkit;

namespace {

// Gram data of x -> s(phi(x)) computed by evaluating phi on F-coordinate
// vectors, independently of the transfer routine.
QuadraticForm transfer_by_evaluation(const QuadraticForm& phi) {
  const auto* k = as_ext(phi.field());
  const Field& f = k->base();
  std::size_t n = 2 * phi.dim();
  auto k_vector = [&](const Vec& c) {
    Vec v;
    for (std::size_t i = 0; i < phi.dim(); ++i) v.push_back(k->make(c[2 * i], c[2 * i + 1]));
    return v;
  };
  auto value = [&](const Vec& c) { return k->s_functional(phi.eval(k_vector(c))); };
  Mat m(n, Vec(n, f->zero()));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = value(unit_vec(f, n, i));
    for (std::size_t j = i + 1; j < n; ++j)
      m[i][j] = value(vec_add(unit_vec(f, n, i), unit_vec(f, n, j))) - m[i][i] - value(unit_vec(f, n, j));
  }
  return QuadraticForm(f, m);
}

QuadraticForm diag_k(const Ext& k, std::initializer_list<const char*> c) {
  Vec v;
  for (const char* x : c) v.push_back(parse_elem(k, x));
  return QuadraticForm::diagonal(k, v);
}

}  // namespace

TEST_CASE("transfer examples") {
  Ext k = support::q_sqrt(2);
  Field q = rationals();
  QuadraticForm h = transfer(diag_k(k, {"1"}));
  CHECK(h == QuadraticForm(q, {{q->zero(), q->from_int(2)}, {q->zero(), q->zero()}}));
  CHECK(witt_index(h) == 1);
  QuadraticForm neg = transfer(diag_k(k, {"-w"}));
  CHECK(neg == QuadraticForm::diagonal(q, {q->from_int(-1), q->from_int(-2)}));
  Ext f4 = support::f4_over_f2();
  Field f2 = f4->base();
  CHECK(transfer(diag_k(f4, {"1"})) == QuadraticForm::diagonal(f2, {f2->zero(), f2->one()}));
}

TEST_CASE("transfer over split K is rejected") {
  Ext s = make_split(rationals());
  try {
    transfer(QuadraticForm::diagonal(s, {s->one()}));
    FAIL("expected SplitK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSplitK);
  }
}

TEST_CASE("transfer matches direct evaluation, is additive and keeps nonsingularity") {
  std::mt19937_64 rng(12);
  for (const Ext& k : {support::q_sqrt(2), support::q_sqrt(3), support::f4_over_f2(), support::f9_over_f3()}) {
    CAPTURE(k->spec());
    for (int t = 0; t < 30; ++t) {
      QuadraticForm a = support::random_nonsingular(k, 2, rng), b = support::random_nonsingular(k, 2, rng);
      CHECK(transfer(a) == transfer_by_evaluation(a));
      CHECK(transfer(orthogonal_sum(a, b)) == orthogonal_sum(transfer(a), transfer(b)));
      CHECK(classify(transfer(orthogonal_sum(a, b))).nonsingular);
    }
  }
}

TEST_CASE("descent of the Hamilton norm form over Q(sqrt 2)") {
  Ext k = support::q_sqrt(2);
  QuadraticForm n = diag_k(k, {"1", "1", "1", "1"});
  DescentResult r = descend(n);
  CHECK(r.transfer_witt_index == 4);
  CHECK(r.psi.dim() == 4);
  CHECK(verify_descent(n, r));
  CHECK(classify(r.psi).nondegenerate);
  CHECK(extended_from_base(n));
}

TEST_CASE("descent with Witt index one") {
  Ext k = support::q_sqrt(2);
  QuadraticForm phi = diag_k(k, {"1", "-w"});
  DescentResult r = descend(phi);
  CHECK(r.transfer_witt_index == 1);
  REQUIRE(r.psi.dim() == 1);
  CHECK(verify_descent(phi, r));
  CHECK(r.psi.coeff(0, 0) == rationals()->one());
  try {
    extended_from_base(phi);
    FAIL("expected Precondition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
}

TEST_CASE("descent of an anisotropic transfer is empty") {
  Ext k = support::q_sqrt(2);
  // <1+w>: s_* is <1> x <2+2... > definite-free check via the oracle
  for (const char* c : {"1+w", "3+w", "-1+w"}) {
    QuadraticForm phi = diag_k(k, {c});
    DescentResult r = descend(phi);
    CHECK(r.psi.dim() == witt_index(transfer(phi)));
    CHECK(verify_descent(phi, r));
  }
}

TEST_CASE("hyperbolic forms descend to hyperbolic forms") {
  Ext k = support::f9_over_f3();
  QuadraticForm h = QuadraticForm::hyperbolic_plane(k);
  DescentResult r;
  CHECK(extended_from_base(h, {}, &r));
  CHECK(witt_index(r.psi) == 1);
}

TEST_CASE("random descents in all characteristics") {
  std::mt19937_64 rng(31);
  for (const Ext& k : {support::f4_over_f2(), support::f9_over_f3(), support::q_sqrt(2)}) {
    CAPTURE(k->spec());
    for (int t = 0; t < 15; ++t) {
      std::size_t dim = k->is_finite() ? 2 + 2 * (rng() % 2) : 2;
      QuadraticForm phi = support::random_nonsingular(k, dim, rng, 1);
      DescentResult r = descend(phi);
      CHECK(r.psi.dim() == witt_index(transfer(phi)));
      CHECK(verify_descent(phi, r));
      FormClass c = classify(r.psi);
      CHECK(c.nondegenerate);
      if (k->characteristic() == 2 && r.psi.dim() % 2 == 1) CHECK_FALSE(c.nonsingular);
      // each plane round lowers the Witt index of the remainder by two
      for (std::size_t i = 1; i < r.steps.size(); ++i)
        if (r.steps[i - 1].kind == "plane")
          CHECK(r.steps[i].witt_index_before + 2 == r.steps[i - 1].witt_index_before);
    }
  }
}
