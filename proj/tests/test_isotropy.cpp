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
#include "oracles.hpp"
#include "support.hpp"

using namespace albertkit;

namespace {

QuadraticForm diag(const Field& f, std::initializer_list<long long> c) {
  Vec v;
  for (long long x : c) v.push_back(f->from_int(x));
  return QuadraticForm::diagonal(f, v);
}

QuadraticForm diag_t(const Field& qt, std::initializer_list<const char*> c) {
  Vec v;
  for (const char* x : c) v.push_back(parse_elem(qt, x));
  return QuadraticForm::diagonal(qt, v);
}

void check_witness(const QuadraticForm& phi, const IsotropyVerdict& v) {
  REQUIRE(v.verdict == Verdict::kIsotropic);
  CHECK_FALSE(is_zero_vec(v.witness));
  CHECK(phi.eval(v.witness).is_zero());
}

}  // namespace

TEST_CASE("dispatcher examples") {
  CHECK(isotropy(diag(finite_field(3), {1, 1})).verdict == Verdict::kAnisotropic);
  CHECK(isotropy(diag(rationals(), {1, 1, 1, 1})).verdict == Verdict::kAnisotropic);
  CHECK(isotropy(diag(rationals(), {1, -2})).verdict == Verdict::kAnisotropic);
  check_witness(diag(rationals(), {1, -1}), isotropy(diag(rationals(), {1, -1})));
}

TEST_CASE("Hilbert symbol examples") {
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(-1, -1, 3) == 1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  for (long b : {2, -3, 5, 7}) for (long p : {0, 2, 3, 5, 7}) CHECK(hilbert_symbol(1, b, p) == 1);
}

TEST_CASE("Hilbert symbol agrees with the closed formulas and reciprocity") {
  std::mt19937_64 rng(21);
  auto draw = [&]() {
    for (;;) {
      long n = static_cast<long>(rng() % 101) - 50, d = 1 + static_cast<long>(rng() % 50);
      if (n != 0) return mpq_class(n, d);
    }
  };
  for (int i = 0; i < 200; ++i) {
    mpq_class a = draw(), b = draw();
    a.canonicalize();
    b.canonicalize();
    CAPTURE(a.get_str());
    CAPTURE(b.get_str());
    int prod = 1;
    std::vector<mpz_class> places = relevant_primes({a, b});
    places.push_back(0);
    for (const auto& p : places) {
      int h = hilbert_symbol(a, b, p);
      CHECK(h == oracle::hilbert(a, b, p));
      prod *= h;
    }
    CHECK(prod == 1);
    CHECK(oracle::hilbert_product(a, b) == 1);
  }
}

TEST_CASE("Hasse-Minkowski examples") {
  Field q = rationals();
  QuadraticForm big = diag(q, {1, 1, 1, 1, 1, -7});
  check_witness(big, hasse_minkowski(big));
  CHECK(hasse_minkowski(diag(q, {-1, -1, -1, -2, -5, -10})).verdict == Verdict::kAnisotropic);
  IsotropyVerdict h = hasse_minkowski(diag(q, {1, -1}));
  check_witness(diag(q, {1, -1}), h);
  // <1,1,-3>: 3 is not a sum of two rational squares
  CHECK(hasse_minkowski(diag(q, {1, 1, -3})).verdict == Verdict::kAnisotropic);
  CHECK(hasse_minkowski(diag(q, {1, 1, -2})).verdict == Verdict::kIsotropic);
  CHECK(hasse_minkowski(diag(q, {1, 1, 1, -7})).verdict == Verdict::kAnisotropic);
}

TEST_CASE("Hasse-Minkowski isotropic verdicts have small witnesses") {
  std::mt19937_64 rng(4);
  Field q = rationals();
  int isotropic = 0;
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng() % 3;
    Vec c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(support::random_nonzero(q, rng, 2));
    QuadraticForm phi = QuadraticForm::diagonal(q, c);
    IsotropyVerdict v = hasse_minkowski(phi);
    if (v.verdict != Verdict::kIsotropic) continue;
    ++isotropic;
    check_witness(phi, v);
    check_witness(phi, bounded_search(phi, 6, 5000000));
  }
  CHECK(isotropic > 5);
}

TEST_CASE("ternary solver") {
  auto sol = solve_ternary(1, 1, -2);
  REQUIRE(sol.has_value());
  auto& s = *sol;
  CHECK(s[0] * s[0] + s[1] * s[1] - 2 * s[2] * s[2] == 0);
  CHECK_FALSE(solve_ternary(1, 1, -3).has_value());
  CHECK_FALSE(solve_ternary(1, 1, 1).has_value());
}

TEST_CASE("Springer reduction examples") {
  Field qt = rational_functions(rationals());
  CHECK(springer_reduce(diag_t(qt, {"1", "-t"})).verdict == Verdict::kAnisotropic);
  QuadraticForm iso = diag_t(qt, {"1", "-1", "t"});
  check_witness(iso, springer_reduce(iso));
  CHECK(springer_reduce(diag_t(qt, {"-1", "-1", "-1", "-2", "-t", "2*t"})).verdict == Verdict::kAnisotropic);
  try {
    springer_reduce(diag(rationals(), {1, 1}));
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotApplicable);
  }
  Field f2t = rational_functions(finite_field(2));
  CHECK_THROWS_AS(springer_reduce(diag_t(f2t, {"1", "t"})), Error);
}

TEST_CASE("bounded search examples") {
  Field q = rationals();
  QuadraticForm h = QuadraticForm::hyperbolic_plane(q);
  IsotropyVerdict v = bounded_search(h, 1);
  check_witness(h, v);
  CHECK(bounded_search(diag(q, {1, 1}), 10).verdict == Verdict::kUnknown);
  CHECK(bounded_search(diag(q, {1, 1, -3}), 2).verdict == Verdict::kUnknown);
}

TEST_CASE("finite oracles agree with brute force") {
  std::mt19937_64 rng(17);
  for (int q : {2, 3, 4, 5}) {
    Field f = finite_field(q);
    oracle::SmallField k{q};
    for (int t = 0; t < 200; ++t) {
      int n = 1 + static_cast<int>(rng() % 4);
      oracle::SmallForm s{n, std::vector<int>(n * n, 0)};
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) s.m[i * n + j] = static_cast<int>(rng() % q);
      QuadraticForm phi = s.to_form(f);
      bool expect = oracle::brute_isotropic(k, s);
      IsotropyVerdict a = finite_enumeration(phi), b = finite_structured(phi);
      CHECK((a.verdict == Verdict::kIsotropic) == expect);
      CHECK((b.verdict == Verdict::kIsotropic) == expect);
      if (expect) {
        check_witness(phi, a);
        check_witness(phi, b);
      }
    }
  }
}

TEST_CASE("Witt decomposition examples") {
  WittDecomposition h = witt_decompose(QuadraticForm::hyperbolic_plane(rationals()));
  CHECK(h.hyperbolic_count() == 1);
  CHECK(h.kernel.dim() == 0);
  Field f5 = finite_field(5);
  WittDecomposition w = witt_decompose(diag(f5, {1, 1, 1, 1}));
  CHECK(w.hyperbolic_count() == 2);
  CHECK(verify_witt_decomposition(diag(f5, {1, 1, 1, 1}), w));
  Field f2 = finite_field(2);
  WittDecomposition r = witt_decompose(diag(f2, {1, 1}));
  CHECK(r.radical_dim() == 1);
  CHECK(r.witt_index() == 1);
}

TEST_CASE("adding a hyperbolic plane raises the Witt index by one") {
  std::mt19937_64 rng(8);
  for (const Field& f : {finite_field(3), finite_field(4), rationals(), finite_field(2)}) {
    for (int t = 0; t < 25; ++t) {
      QuadraticForm phi = support::random_nonsingular(f, 2 + 2 * (rng() % 2), rng);
      WittDecomposition w = witt_decompose(phi);
      CHECK(verify_witt_decomposition(phi, w));
      CHECK(witt_index(orthogonal_sum(phi, QuadraticForm::hyperbolic_plane(f))) == w.witt_index() + 1);
      if (w.kernel.dim()) CHECK(isotropy(w.kernel).verdict == Verdict::kAnisotropic);
    }
  }
}

TEST_CASE("rational Witt index from invariants") {
  Field q = rationals();
  CHECK(rational_witt_index(diag(q, {1, 1, -1, -1})) == 2);
  CHECK(rational_witt_index(diag(q, {1, 1, 1, -7})) == 0);
  CHECK(rational_witt_index(diag(q, {1, -1, 1, 1})) == 1);
  CHECK(rational_witt_index(diag(q, {1, 1, 1, -1, -1})) == 2);
  CHECK(rational_witt_index(diag(q, {1, 1, 1, 1, -1})) == 1);
  CHECK(rational_witt_index(diag(q, {1, 0, -1})) == 2);
  CHECK(rational_witt_index(diag(q, {2, -3, 1})) == 1);
  CHECK(rational_witt_index(diag(q, {2, -3, 6})) == 0);
  std::mt19937_64 rng(81);
  for (int t = 0; t < 60; ++t) {
    QuadraticForm phi = support::random_form(q, 1 + rng() % 6, rng);
    INFO(phi.str());
    CHECK(rational_witt_index(phi) == witt_decompose(phi).witt_index());
  }
}
