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

// Rational forms: Hilbert symbols, Hasse-Minkowski and Legendre descent.

#include <algorithm>
#include <map>

#include "isotropy.hpp"
#include "verdicts.hpp"

namespace albertkit {

using detail::anisotropic;
using detail::checked;
using detail::isotropic;
using detail::unknown;

namespace {

// A nontrivial factor of an odd composite n (Pollard-Brent).
mpz_class rho_factor(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    const std::size_t m = 64;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Prime factorization of |n| with multiplicities, ascending.
std::vector<std::pair<mpz_class, int>> factorize(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> primes;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  std::vector<mpz_class> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    mpz_class v = stack.back();
    stack.pop_back();
    if (mpz_probab_prime_p(v.get_mpz_t(), 30)) {
      primes.push_back(v);
      continue;
    }
    mpz_class d = rho_factor(v);
    stack.push_back(d);
    stack.push_back(v / d);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, int>> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.push_back({p, 1});
  }
  return out;
}

// n = s * m^2 with s squarefree (sign kept in s).
void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& m) {
  AK_CHECK(n != 0);
  s = n < 0 ? -1 : 1;
  m = 1;
  for (auto& [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) m *= p;
    if (e % 2) s *= p;
  }
}

std::vector<mpz_class> prime_factors(const mpz_class& r) {
  std::vector<mpz_class> out;
  for (auto& pe : factorize(r)) out.push_back(pe.first);
  return out;
}

// Integer with the same square class as a nonzero rational.
mpz_class square_class(const mpq_class& q) { return q.get_num() * q.get_den(); }

int valuation(mpz_class a, const mpz_class& p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

// Square root of a modulo an odd prime p, a a quadratic residue.
mpz_class sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p) {
  mpz_class a = mod_pos(a_in, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c, r, t, b, tmp;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_class e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    tmp = t;
    while (tmp != 1) {
      tmp = tmp * tmp % p;
      ++i;
    }
    b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return r;
}

// t with t^2 = a mod |n| for squarefree n, or nullopt.
std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& n) {
  mpz_class mod = abs(n);
  mpz_class t = 0, acc = 1;
  for (auto& p : prime_factors(mod)) {
    mpz_class ap = mod_pos(a, p);
    mpz_class r;
    if (p == 2 || ap == 0) {
      r = ap;
    } else {
      if (mpz_legendre(ap.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
      r = sqrt_mod_prime(ap, p);
    }
    // CRT: t = t mod acc, r mod p.
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), acc.get_mpz_t(), p.get_mpz_t());
    mpz_class k = mod_pos((r - t) * inv, p);
    t += acc * k;
    acc *= p;
  }
  t = mod_pos(t, mod);
  if (2 * t > mod) t -= mod;
  return t;
}

using Triple = std::array<mpz_class, 3>;

void normalize(Triple& x) {
  mpz_class g = 0;
  for (auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : x) v /= g;
}

// X^2 = A Y^2 + B Z^2 for squarefree nonzero A, B.
std::optional<Triple> legendre_squarefree(const mpz_class& A, const mpz_class& B) {
  if (A == 1) return Triple{1, 1, 0};
  if (B == 1) return Triple{1, 0, 1};
  if (A < 0 && B < 0) return std::nullopt;
  if (abs(A) > abs(B)) {
    auto r = legendre_squarefree(B, A);
    if (!r) return std::nullopt;
    return Triple{(*r)[0], (*r)[2], (*r)[1]};
  }
  auto t = sqrt_mod_squarefree(A, B);
  if (!t) return std::nullopt;
  mpz_class k = (*t * *t - A) / B;
  AK_CHECK(k != 0);
  mpz_class ks, km;
  squarefree_split(k, ks, km);
  auto r = legendre_squarefree(A, ks);
  if (!r) return std::nullopt;
  const auto& [X1, Y1, Z1] = *r;
  Triple out{*t * X1 + A * Y1, X1 + *t * Y1, ks * km * Z1};
  normalize(out);
  return out;
}

// X^2 = A Y^2 + B Z^2 for nonzero integers.
std::optional<Triple> legendre(const mpz_class& A, const mpz_class& B) {
  mpz_class sa, ma, sb, mb;
  squarefree_split(A, sa, ma);
  squarefree_split(B, sb, mb);
  auto r = legendre_squarefree(sa, sb);
  if (!r) return std::nullopt;
  Triple out{(*r)[0] * ma * mb, (*r)[1] * mb, (*r)[2] * ma};
  normalize(out);
  AK_CHECK(out[0] * out[0] == A * out[1] * out[1] + B * out[2] * out[2]);
  return out;
}

bool is_local_square(const mpz_class& d, const mpz_class& p) {
  if (p == 0) return d > 0;
  int v = valuation(d, p);
  if (v % 2) return false;
  mpz_class u = d;
  for (int i = 0; i < v; ++i) u /= p;
  if (p == 2) return mod_pos(u, 8) == 1;
  return mpz_legendre(mod_pos(u, p).get_mpz_t(), p.get_mpz_t()) == 1;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (v < 0) return std::nullopt;
  if (v == 0) return mpq_class(0);
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  return mpq_class(n, d);
}

// Zero of the diagonal form <d_0, ..., d_{n-1}> over Q (all d_i nonzero),
// found by reducing to ternaries <d_0, d_1, tail value>. The form must be
// known to be isotropic.
std::vector<mpq_class> diagonal_zero(const std::vector<mpq_class>& d) {
  std::size_t n = d.size();
  std::vector<mpq_class> x(n, 0);
  if (auto r = rational_sqrt(-d[1] / d[0])) {
    x[0] = *r;
    x[1] = 1;
    return x;
  }
  AK_CHECK(n >= 3);
  Field q = rationals();
  for (int h = 1; h < 4096; ++h) {
    std::optional<std::vector<mpq_class>> found;
    for_each_vector(q, n - 2, h, true, [&](const Vec& tail) {
      mpq_class c = 0;
      for (std::size_t i = 0; i + 2 < n; ++i) c += d[i + 2] * tail[i].q() * tail[i].q();
      if (c == 0) {
        std::vector<mpq_class> y(n, 0);
        for (std::size_t i = 0; i + 2 < n; ++i) y[i + 2] = tail[i].q();
        found = y;
        return true;
      }
      auto z = solve_ternary(square_class(d[0]), square_class(d[1]), square_class(c));
      if (!z) return false;
      // d = s / den^2 with s = num * den, so s X^2 = d (den X)^2.
      std::vector<mpq_class> y(n, 0);
      y[0] = mpq_class((*z)[0] * d[0].get_den());
      y[1] = mpq_class((*z)[1] * d[1].get_den());
      mpq_class zc = mpq_class((*z)[2] * c.get_den());
      for (std::size_t i = 0; i + 2 < n; ++i) y[i + 2] = zc * tail[i].q();
      found = y;
      return true;
    });
    if (found) return *found;
  }
  throw Error(ErrorCode::kInternal, "witness search for an isotropic rational form did not terminate");
}

}  // namespace

int hilbert_symbol(const mpq_class& qa, const mpq_class& qb, const mpz_class& p) {
  AK_CHECK(qa != 0 && qb != 0);
  mpz_class a = square_class(qa), b = square_class(qb);
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  int alpha = valuation(a, p), beta = valuation(b, p);
  mpz_class u = a, v = b;
  for (int i = 0; i < alpha; ++i) u /= p;
  for (int i = 0; i < beta; ++i) v /= p;
  if (p == 2) {
    auto eps = [](const mpz_class& x) { return static_cast<int>(mod_pos((mod_pos(x, 8) - 1) / 2, 2).get_si()); };
    auto omega = [](const mpz_class& x) {
      mpz_class r = mod_pos(x, 8);
      return static_cast<int>(mod_pos((r * r - 1) / 8, 2).get_si());
    };
    int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 ? -1 : 1;
  }
  int sign = 1;
  mpz_class half = (p - 1) / 2;
  if (alpha % 2 && beta % 2 && half % 2 != 0) sign = -sign;
  if (beta % 2) sign *= mpz_legendre(mod_pos(u, p).get_mpz_t(), p.get_mpz_t());
  if (alpha % 2) sign *= mpz_legendre(mod_pos(v, p).get_mpz_t(), p.get_mpz_t());
  return sign;
}

std::vector<mpz_class> relevant_primes(const std::vector<mpq_class>& values) {
  std::vector<mpz_class> ps{2};
  for (auto& v : values)
    for (auto& p : prime_factors(square_class(v)))
      if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  return ps;
}

std::optional<std::array<mpz_class, 3>> solve_ternary(const mpz_class& a, const mpz_class& b,
                                                      const mpz_class& c) {
  AK_CHECK(a != 0 && b != 0 && c != 0);
  // c * (a x^2 + b y^2 + c z^2) = 0  <=>  (c z)^2 = -ac x^2 - bc y^2.
  auto r = legendre(-a * c, -b * c);
  if (!r) return std::nullopt;
  Triple out{c * (*r)[1], c * (*r)[2], (*r)[0]};
  normalize(out);
  AK_CHECK(a * out[0] * out[0] + b * out[1] * out[1] + c * out[2] * out[2] == 0);
  return out;
}

namespace {

bool same_local_class(const mpz_class& a, const mpz_class& b, const mpz_class& p) {
  return is_local_square(a * b, p);
}

// Zero of an isotropic <a0, a1, a2, a3> (nonzero integers, neither half
// isotropic). Picks t represented by <a0, a1> and by <-a2, -a3> at every
// bad place; one auxiliary prime q is then forced by reciprocity.
std::optional<std::vector<mpz_class>> quaternary_zero(const std::vector<mpz_class>& a) {
  std::vector<mpq_class> qa(a.begin(), a.end());
  std::vector<mpz_class> places = relevant_primes(qa);
  places.insert(places.begin(), mpz_class(0));
  auto good = [&](const mpz_class& t, const mpz_class& p) {
    return hilbert_symbol(mpq_class(a[0] * t), mpq_class(a[1] * t), p) == 1 &&
           hilbert_symbol(mpq_class(-a[2] * t), mpq_class(-a[3] * t), p) == 1;
  };
  std::vector<mpz_class> want;
  for (auto& p : places) {
    std::vector<mpz_class> reps;
    if (p == 0) {
      reps = {1, -1};
    } else if (p == 2) {
      reps = {1, 3, 5, 7, 2, 6, 10, 14};
    } else {
      mpz_class n = 2;
      while (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != -1) ++n;
      reps = {1, n, p, n * p};
    }
    auto it = std::find_if(reps.begin(), reps.end(), [&](const mpz_class& u) { return good(u, p); });
    if (it == reps.end()) return std::nullopt;
    want.push_back(*it);
  }
  mpz_class base = want[0] < 0 ? -1 : 1;
  for (std::size_t i = 1; i < places.size(); ++i)
    if (valuation(want[i], places[i]) % 2) base *= places[i];
  mpz_class q = 1;
  for (long tries = 0; tries < 1000000; ++tries) {
    mpz_class t = base * q;
    bool ok = true;
    for (std::size_t i = 0; ok && i < places.size(); ++i) ok = same_local_class(t, want[i], places[i]);
    if (ok) {
      auto x = solve_ternary(a[0], a[1], -t);
      auto y = solve_ternary(a[2], a[3], t);
      if (!x || !y || (*x)[2] == 0 || (*y)[2] == 0) return std::nullopt;
      // a0 x0^2 + a1 x1^2 = t x2^2 and a2 y0^2 + a3 y1^2 = -t y2^2.
      std::vector<mpz_class> z{(*x)[0] * (*y)[2], (*x)[1] * (*y)[2], (*y)[0] * (*x)[2], (*y)[1] * (*x)[2]};
      return z;
    }
    do mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    while (std::find(places.begin(), places.end(), q) != places.end());
  }
  return std::nullopt;
}

}  // namespace

IsotropyVerdict hasse_minkowski(const QuadraticForm& phi) {
  const Field& f = phi.field();
  if (!as_rationals(f)) throw Error(ErrorCode::kNotApplicable, "Hasse-Minkowski needs forms over Q");
  std::size_t n = phi.dim();
  if (n == 0) return anisotropic("hasse-minkowski");
  Diagonalization dg = diagonalize(phi);
  if (dg.isotropic) return checked(phi, isotropic(*dg.isotropic, "diagonalization"));
  std::vector<mpq_class> d;
  for (auto& c : dg.coeffs) d.push_back(c.q());
  bool pos = std::any_of(d.begin(), d.end(), [](const mpq_class& v) { return v > 0; });
  bool neg = std::any_of(d.begin(), d.end(), [](const mpq_class& v) { return v < 0; });
  if (n == 1 || !pos || !neg) return anisotropic(n == 1 ? "dimension-one" : "definite");
  bool iso = false;
  if (n == 2) {
    iso = rational_sqrt(-d[1] / d[0]).has_value();
  } else if (n == 3) {
    iso = solve_ternary(square_class(d[0]), square_class(d[1]), square_class(d[2])).has_value();
  } else if (n == 4) {
    mpz_class disc = 1;
    for (auto& v : d) disc *= square_class(v);
    iso = true;
    std::vector<mpz_class> places = relevant_primes(d);
    places.insert(places.begin(), mpz_class(0));
    for (auto& p : places) {
      if (!is_local_square(disc, p)) continue;
      int eps = 1;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) eps *= hilbert_symbol(d[i], d[j], p);
      if (eps != hilbert_symbol(-1, -1, p)) {
        iso = false;
        break;
      }
    }
  } else {
    iso = true;  // indefinite of dimension >= 5
  }
  if (!iso) return anisotropic("hasse-minkowski");
  std::vector<mpq_class> y;
  if (n == 4 && !rational_sqrt(-d[1] / d[0]) && !rational_sqrt(-d[3] / d[2])) {
    std::vector<mpz_class> a;
    for (auto& v : d) a.push_back(square_class(v));
    if (auto z = quaternary_zero(a))
      for (std::size_t i = 0; i < 4; ++i) y.push_back(mpq_class((*z)[i] * d[i].get_den()));
  }
  if (y.empty()) y = diagonal_zero(d);
  Vec w = zero_vec(f, n);
  auto qf = as_rationals(f);
  for (std::size_t i = 0; i < n; ++i)
    if (y[i] != 0) w = vec_add(w, vec_scale(qf->from_mpq(y[i]), dg.basis[i]));
  return checked(phi, isotropic(w, "hasse-minkowski"));
}

namespace {

// Nonzero diagonal coefficients of the regular part of phi over Q,
// scaled to integers.
std::vector<mpz_class> rational_diagonal(const QuadraticForm& phi) {
  const Field& f = phi.field();
  std::size_t n = phi.dim();
  std::vector<Vec> cur;
  for (std::size_t i = 0; i < n; ++i) cur.push_back(unit_vec(f, n, i));
  std::vector<mpz_class> out;
  Elem two = f->from_int(2);
  while (!cur.empty()) {
    std::optional<Vec> v;
    for (auto& x : cur)
      if (!phi.eval(x).is_zero()) { v = x; break; }
    for (std::size_t i = 0; !v && i < cur.size(); ++i)
      for (std::size_t j = i + 1; !v && j < cur.size(); ++j)
        if (!phi.polar(cur[i], cur[j]).is_zero()) v = vec_add(cur[i], cur[j]);
    if (!v) break;  // the rest is radical
    Elem dv = phi.eval(*v);
    out.push_back(square_class(dv.q()));
    Elem inv2d = (two * dv).inv();
    std::vector<Vec> next;
    for (auto& x : cur) {
      Vec y = vec_sub(x, vec_scale(phi.polar(x, *v) * inv2d, *v));
      if (is_zero_vec(y)) continue;
      next.push_back(y);
      if (rank(f, next, n) < next.size()) next.pop_back();
      if (next.size() + 1 == cur.size()) break;
    }
    cur = std::move(next);
  }
  return out;
}

}  // namespace

std::size_t rational_witt_index(const QuadraticForm& phi) {
  if (!as_rationals(phi.field())) throw Error(ErrorCode::kNotApplicable, "rational Witt index needs a form over Q");
  std::vector<mpz_class> a = rational_diagonal(phi);
  std::size_t n = a.size();
  std::size_t r = std::count_if(a.begin(), a.end(), [](const mpz_class& v) { return v > 0; });
  std::size_t s = n - r;
  std::vector<mpq_class> qa(a.begin(), a.end());
  std::vector<mpz_class> places = relevant_primes(qa);
  mpz_class d = 1;
  for (auto& v : a) d *= v;
  std::vector<int> eps(places.size(), 1);
  for (std::size_t k = 0; k < places.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) eps[k] *= hilbert_symbol(qa[i], qa[j], places[k]);
  // Peel hyperbolic planes: for q = q' + H, d(q') = -d(q) and
  // eps(q') = eps(q) (d(q'), -1). Return the largest k for which q' exists.
  std::size_t best = 0;
  std::size_t radical = phi.dim() - n;
  for (std::size_t k = 0; k <= std::min(r, s); ++k) {
    std::size_t m = n - 2 * k;
    bool exists = true;
    for (std::size_t i = 0; exists && i < places.size(); ++i) {
      const mpz_class& p = places[i];
      if (m == 0) exists = eps[i] == 1 && is_local_square(d, p);
      else if (m == 1) exists = eps[i] == 1;
      else if (m == 2) exists = eps[i] == 1 || !is_local_square(-d, p);
    }
    if (m == 0 && exists) exists = d > 0 && mpz_perfect_square_p(d.get_mpz_t());
    if (exists) best = k;
    if (k == std::min(r, s)) break;
    d = -d;
    for (std::size_t i = 0; i < places.size(); ++i) eps[i] *= hilbert_symbol(mpq_class(d), -1, places[i]);
  }
  return best + radical;
}

}  // namespace albertkit
