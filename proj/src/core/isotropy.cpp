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

#include "isotropy.hpp"
#include "verdicts.hpp"

#include <algorithm>

namespace albertkit {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kIsotropic: return "Isotropic";
    case Verdict::kAnisotropic: return "Anisotropic";
    case Verdict::kUnknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

using detail::anisotropic;
using detail::checked;
using detail::isotropic;
using detail::unknown;

Vec combine(const Field& f, const std::vector<Vec>& basis, const Vec& coords, std::size_t n) {
  Vec v = zero_vec(f, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) v = vec_add(v, vec_scale(coords[i], basis[i]));
  return v;
}

// Witness for a form in few variables over a finite field: fix all but the
// last coordinate and solve the remaining quadratic in one variable.
std::optional<Vec> finite_solve_last(const QuadraticForm& phi) {
  const Field& f = phi.field();
  std::size_t n = phi.dim();
  Vec last = unit_vec(f, n, n - 1);
  Elem a = phi.coeff(n - 1, n - 1);
  if (a.is_zero()) return last;
  std::optional<Vec> found;
  for_each_vector(f, n - 1, 0, true, [&](const Vec& head) {
    Vec x = head;
    x.push_back(f->zero());
    Elem b = phi.polar(x, last);
    Elem c = phi.eval(x);
    if (a.is_zero()) {
      if (b.is_zero()) {
        if (c.is_zero()) { found = x; return true; }
        return false;
      }
      x[n - 1] = -c / b;
      found = x;
      return true;
    }
    auto r = f->quadratic_root(-b / a, -c / a);
    if (!r) return false;
    x[n - 1] = *r;
    found = x;
    return true;
  });
  return found;
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite fields

IsotropyVerdict finite_enumeration(const QuadraticForm& phi, std::size_t cap) {
  const Field& f = phi.field();
  if (!f->is_finite()) throw Error(ErrorCode::kNotApplicable, "enumeration needs a finite field");
  if (phi.dim() == 0) return anisotropic("enumeration");
  double points = 1;
  for (std::size_t i = 0; i < phi.dim(); ++i) points *= static_cast<double>(f->order());
  if (points > static_cast<double>(cap)) return unknown("enumeration", 0);
  std::optional<Vec> w;
  for_each_vector(f, phi.dim(), 0, true, [&](const Vec& x) {
    if (phi.eval(x).is_zero()) { w = x; return true; }
    return false;
  });
  if (w) return checked(phi, isotropic(*w, "enumeration"));
  return anisotropic("enumeration");
}

IsotropyVerdict finite_structured(const QuadraticForm& phi) {
  const Field& f = phi.field();
  if (!f->is_finite()) throw Error(ErrorCode::kNotApplicable, "structured decision needs a finite field");
  std::size_t n = phi.dim();
  if (n == 0) return anisotropic("structured");
  FormClass c = classify(phi);
  if (!c.rad.empty()) return checked(phi, isotropic(c.rad[0], "radical"));
  if (n == 1) {
    if (phi.coeff(0, 0).is_zero()) return checked(phi, isotropic(unit_vec(f, 1, 0), "structured"));
    return anisotropic("structured");
  }
  if (n == 2) {
    const Elem& a = phi.coeff(0, 0);
    const Elem& b = phi.coeff(0, 1);
    const Elem& cc = phi.coeff(1, 1);
    if (a.is_zero()) return checked(phi, isotropic(unit_vec(f, 2, 0), "structured"));
    auto r = f->quadratic_root(-b / a, -cc / a);
    if (!r) return anisotropic(f->characteristic() == 2 ? "artin-schreier" : "discriminant");
    return checked(phi, isotropic({*r, f->one()}, "structured"));
  }
  // Chevalley-Warning: every form in >= 3 variables has a nontrivial zero;
  // the subform on the first three coordinates already does.
  QuadraticForm sub = phi.pullback({unit_vec(f, n, 0), unit_vec(f, n, 1), unit_vec(f, n, 2)});
  auto w = finite_solve_last(sub);
  if (!w) throw Error(ErrorCode::kInternalContradiction, "ternary form over a finite field without zero");
  Vec x = zero_vec(f, n);
  for (std::size_t i = 0; i < 3; ++i) x[i] = (*w)[i];
  return checked(phi, isotropic(x, "chevalley"));
}

// ---------------------------------------------------------------------------
// Bounded search

IsotropyVerdict bounded_search(const QuadraticForm& phi, int height, std::size_t budget) {
  const Field& f = phi.field();
  std::size_t n = phi.dim();
  if (n == 0) return unknown("bounded-search", height);
  for (std::size_t i = 0; i < n; ++i)
    if (phi.coeff(i, i).is_zero()) return checked(phi, isotropic(unit_vec(f, n, i), "bounded-search", 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int sgn : {1, -1}) {
        Vec x = unit_vec(f, n, i);
        x[j] = f->from_int(sgn);
        if (phi.eval(x).is_zero()) return checked(phi, isotropic(x, "bounded-search", 1));
      }
  std::size_t visited = 0;
  int reached = -1;
  for (int h = 0; h <= height; ++h) {
    std::optional<Vec> w;
    bool stopped = for_each_vector(f, n, h, true, [&](const Vec& x) {
      if (++visited > budget) return true;
      if (phi.eval(x).is_zero()) { w = x; return true; }
      return false;
    });
    if (w) return checked(phi, isotropic(*w, "bounded-search", h));
    if (stopped) break;
    reached = h;
  }
  return unknown("bounded-search", reached);
}

// ---------------------------------------------------------------------------
// Diagonalization (characteristic != 2)

namespace {

// Over Q, the primitive integer multiple of v; other fields unchanged.
// Keeps coefficients small along chains of complements.
Vec primitive(const Vec& v) {
  if (v.empty() || !as_rationals(v[0].field())) return v;
  mpz_class l = 1, g = 0;
  for (const Elem& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.q().get_den_mpz_t());
  for (const Elem& x : v) {
    mpz_class n = x.q().get_num() * (l / x.q().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return v;
  return vec_scale(as_rationals(v[0].field())->from_mpq(mpq_class(l, g)), v);
}

// Exact LLL reduction (delta = 3/4) of integer row vectors.
void lll(std::vector<std::vector<mpz_class>>& b) {
  std::size_t m = b.size();
  if (m < 2) return;
  std::vector<std::vector<mpq_class>> mu(m, std::vector<mpq_class>(m));
  std::vector<mpq_class> bb(m);
  auto gram_schmidt = [&] {
    std::vector<std::vector<mpq_class>> bs(m);
    for (std::size_t i = 0; i < m; ++i) {
      bs[i].assign(b[i].begin(), b[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class d = 0;
        for (std::size_t k = 0; k < b[i].size(); ++k) d += mpq_class(b[i][k]) * bs[j][k];
        mu[i][j] = bb[j] == 0 ? mpq_class(0) : mpq_class(d / bb[j]);
        for (std::size_t k = 0; k < b[i].size(); ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
      bb[i] = 0;
      for (auto& x : bs[i]) bb[i] += x * x;
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t j = k; j-- > 0;) {
      mpq_class& mkj = mu[k][j];
      if (abs(mkj) * 2 <= 1) continue;
      mpz_class r;
      mpq_class t = mkj + mpq_class(1, 2);
      mpz_fdiv_q(r.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[j][c];
      for (std::size_t c = 0; c < j; ++c) mu[k][c] -= r * mu[j][c];
      mu[k][j] -= r;
    }
    if (bb[k] >= (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bb[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Over Q, a reduced basis of {x in span(cur) : polar(x, u) = polar(x, g) = 0}.
std::optional<std::vector<Vec>> reduced_complement(const QuadraticForm& phi, const std::vector<Vec>& cur,
                                                   const Vec& u, const Vec& g) {
  auto q = as_rationals(phi.field());
  if (!q) return std::nullopt;
  std::size_t m = cur.size();
  std::vector<Vec> rows(2);
  for (auto& x : cur) {
    rows[0].push_back(phi.polar(x, u));
    rows[1].push_back(phi.polar(x, g));
  }
  std::vector<std::vector<mpz_class>> a(2, std::vector<mpz_class>(m));
  for (int r = 0; r < 2; ++r) {
    Vec pr = primitive(rows[r]);
    for (std::size_t i = 0; i < m; ++i) a[r][i] = pr[i].q().get_num();
  }
  // Kernel trick: reduce (e_i, N a_i); short vectors with zero tail span
  // the saturated integer kernel.
  mpz_class big = 1000000;
  for (int attempt = 0; attempt < 8; ++attempt, big *= 1000000) {
    std::vector<std::vector<mpz_class>> b(m, std::vector<mpz_class>(m + 2));
    for (std::size_t i = 0; i < m; ++i) {
      b[i][i] = 1;
      b[i][m] = big * a[0][i];
      b[i][m + 1] = big * a[1][i];
    }
    lll(b);
    std::vector<Vec> out;
    for (auto& row : b) {
      if (row[m] != 0 || row[m + 1] != 0) continue;
      Vec x = zero_vec(phi.field(), phi.dim());
      for (std::size_t i = 0; i < m; ++i)
        if (row[i] != 0) x = vec_add(x, vec_scale(q->from_mpq(mpq_class(row[i])), cur[i]));
      out.push_back(x);
    }
    if (out.size() + 2 == m) return out;
  }
  return std::nullopt;
}

}  // namespace

Diagonalization diagonalize(const QuadraticForm& phi) {
  const Field& f = phi.field();
  if (f->characteristic() == 2) throw Error(ErrorCode::kNotApplicable, "no diagonalization in characteristic 2");
  std::size_t n = phi.dim();
  Diagonalization d;
  std::vector<Vec> cur;
  for (std::size_t i = 0; i < n; ++i) cur.push_back(unit_vec(f, n, i));
  Elem two = f->from_int(2);
  while (!cur.empty()) {
    for (auto& x : cur)
      if (phi.eval(x).is_zero()) {
        d.isotropic = x;
        return d;
      }
    Vec v = cur[0];
    Elem dv = phi.eval(v);
    d.coeffs.push_back(dv);
    d.basis.push_back(v);
    std::vector<Vec> next;
    Elem inv2d = (two * dv).inv();
    for (std::size_t i = 1; i < cur.size(); ++i)
      next.push_back(primitive(vec_sub(cur[i], vec_scale(phi.polar(cur[i], v) * inv2d, v))));
    cur = std::move(next);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Springer reduction at t = 0

IsotropyVerdict springer_reduce(const QuadraticForm& phi, const OracleOptions& opts) {
  const Field& f = phi.field();
  auto r = as_ratfn(f);
  if (!r || f->characteristic() == 2 || !(as_rationals(r->coefficients()) || r->coefficients()->is_finite()))
    throw Error(ErrorCode::kNotApplicable, "Springer reduction needs Q(t) or F_q(t) with q odd");
  std::size_t n = phi.dim();
  if (n == 0) return anisotropic("springer");
  Diagonalization dg = diagonalize(phi);
  if (dg.isotropic) return checked(phi, isotropic(*dg.isotropic, "diagonalization"));
  const Field& c = r->coefficients();
  std::vector<std::size_t> group[2];
  std::vector<int> half(n);
  Vec residues[2];
  bool monomial = true;
  for (std::size_t i = 0; i < n; ++i) {
    int e = r->valuation(dg.coeffs[i]);
    int h = e >= 0 ? e / 2 : -((-e + 1) / 2);
    half[i] = h;
    int parity = e - 2 * h;
    group[parity].push_back(i);
    residues[parity].push_back(r->unit_residue(dg.coeffs[i]));
    monomial = monomial && r->is_monomial(dg.coeffs[i]);
  }
  IsotropyVerdict residue_verdict[2];
  for (int g = 0; g < 2; ++g)
    residue_verdict[g] = residues[g].empty() ? anisotropic("empty")
                                             : isotropy(QuadraticForm::diagonal(c, residues[g]), opts);
  if (residue_verdict[0].verdict == Verdict::kAnisotropic && residue_verdict[1].verdict == Verdict::kAnisotropic)
    return anisotropic("springer");
  for (int g = 0; g < 2; ++g) {
    if (residue_verdict[g].verdict != Verdict::kIsotropic) continue;
    // Lift the residue zero; exact when every coefficient is c * t^e.
    Vec coords = zero_vec(f, n);
    for (std::size_t j = 0; j < group[g].size(); ++j) {
      std::size_t i = group[g][j];
      coords[i] = r->constant(residue_verdict[g].witness[j]) * r->t_power(-half[i]);
    }
    Vec w = combine(f, dg.basis, coords, n);
    if (phi.eval(w).is_zero()) return checked(phi, isotropic(w, "springer"));
    AK_CHECK(!monomial);
  }
  IsotropyVerdict b = bounded_search(phi, opts.max_height, opts.budget);
  if (b.verdict != Verdict::kUnknown) return b;
  return unknown("springer+bounded-search", b.height);
}

// ---------------------------------------------------------------------------
// Real quadratic fields

namespace {

// Sign of u + v sqrt(D) for rationals, D > 0 not a square.
int sign_surd(const mpq_class& u, const mpq_class& v, const mpq_class& D) {
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  mpq_class lhs = u * u, rhs = v * v * D;
  return lhs > rhs ? su : sv;
}

// Nonsingular binary forms over any field with a square-root (odd
// characteristic) or Artin-Schreier (characteristic 2) test.
std::optional<IsotropyVerdict> binary_decision(const QuadraticForm& phi) {
  if (phi.dim() != 2) return std::nullopt;
  const Field& f = phi.field();
  const Elem &a = phi.coeff(0, 0), &b = phi.coeff(0, 1), &c = phi.coeff(1, 1);
  if (a.is_zero()) return checked(phi, isotropic(unit_vec(f, 2, 0), "binary"));
  if (c.is_zero()) return checked(phi, isotropic(unit_vec(f, 2, 1), "binary"));
  if (f->characteristic() == 2) {
    if (b.is_zero()) return std::nullopt;
    std::optional<Elem> u;
    try {
      u = f->artin_schreier(a * c / (b * b));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnsupported) throw;
      return std::nullopt;
    }
    if (!u) return anisotropic("binary-artin-schreier");
    return checked(phi, isotropic({b / a * *u, f->one()}, "binary"));
  }
  // a x^2 + b x y + c y^2 = 0 has a root x/y iff b^2 - 4ac is a square
  Elem disc = b * b - f->from_int(4) * a * c;
  if (disc.is_zero()) return std::nullopt;
  auto r = f->sqrt(disc);
  if (!r) return anisotropic("binary-discriminant");
  return checked(phi, isotropic({(*r - b) / (a + a), f->one()}, "binary"));
}

std::optional<IsotropyVerdict> real_embedding_definite(const QuadraticForm& phi) {
  const Field& f = phi.field();
  auto k = as_ext(f);
  if (!k || k->is_split() || !k->is_field() || !as_rationals(k->base())) return std::nullopt;
  mpq_class alpha = k->alpha().q(), beta = k->beta().q();
  mpq_class D = alpha * alpha + 4 * beta;
  if (D <= 0) return std::nullopt;
  Diagonalization dg = diagonalize(phi);
  if (dg.isotropic) return checked(phi, isotropic(*dg.isotropic, "diagonalization"));
  for (int root : {1, -1}) {
    int first = 0;
    bool definite = true;
    for (auto& d : dg.coeffs) {
      auto [a, b] = k->coords(d);
      mpq_class u = a.q() + b.q() * alpha / 2, v = root * b.q() / 2;
      int s = sign_surd(u, v, D);
      if (first == 0) first = s;
      else if (s != first) definite = false;
    }
    if (definite) return anisotropic("definite-at-real-embedding");
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dispatcher

IsotropyVerdict isotropy(const QuadraticForm& phi, const OracleOptions& opts) {
  const Field& f = phi.field();
  if (phi.dim() == 0) return anisotropic("empty");
  if (f->is_finite()) return finite_structured(phi);
  try {
    FormClass c = classify(phi);
    if (!c.rad.empty()) return checked(phi, isotropic(c.rad[0], "radical"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupported) throw;
  }
  if (as_rationals(f)) return hasse_minkowski(phi);
  if (auto r = as_ratfn(f)) {
    if (f->characteristic() != 2 &&
        (as_rationals(r->coefficients()) || r->coefficients()->is_finite()))
      return springer_reduce(phi, opts);
  }
  if (auto v = binary_decision(phi)) return *v;
  if (auto v = real_embedding_definite(phi)) {
    if (v->verdict != Verdict::kUnknown) return *v;
  }
  return bounded_search(phi, opts.max_height, opts.budget);
}

// ---------------------------------------------------------------------------
// Witt decomposition

Mat WittDecomposition::change_of_basis() const {
  Mat rows = radical;
  for (auto& [e, g] : planes) {
    rows.push_back(e);
    rows.push_back(g);
  }
  for (auto& v : kernel_basis) rows.push_back(v);
  return rows;
}

WittDecomposition witt_decompose(const QuadraticForm& phi, const OracleOptions& opts) {
  const Field& f = phi.field();
  std::size_t n = phi.dim();
  WittDecomposition w;
  FormClass c = classify(phi);
  w.radical = c.rad;
  // Complete rad phi to a basis with unit vectors; the added span is an
  // orthogonal complement on which phi is regular.
  std::vector<Vec> cur;
  {
    std::vector<Vec> span = w.radical;
    for (std::size_t i = 0; i < n; ++i) {
      span.push_back(unit_vec(f, n, i));
      if (rank(f, span, n) == span.size()) cur.push_back(span.back());
      else span.pop_back();
    }
  }
  while (!cur.empty()) {
    QuadraticForm sub = phi.pullback(cur);
    IsotropyVerdict v = isotropy(sub, opts);
    w.methods.push_back(v.method);
    if (v.verdict == Verdict::kUnknown)
      throw Error(ErrorCode::kOracleIncomplete,
                  "isotropy of a " + std::to_string(sub.dim()) + "-dimensional form over " + f->spec() +
                      " could not be decided (" + v.method + ")");
    if (v.verdict == Verdict::kAnisotropic) break;
    Vec u = combine(f, cur, v.witness, n);
    std::optional<Vec> partner;
    for (auto& x : cur) {
      Elem b = phi.polar(u, x);
      if (!b.is_zero()) {
        partner = vec_scale(b.inv(), x);
        break;
      }
    }
    if (!partner) throw Error(ErrorCode::kInternalContradiction, "isotropic vector in the radical of a regular form");
    Vec g = vec_sub(*partner, vec_scale(phi.eval(*partner), u));
    w.planes.emplace_back(u, g);
    // Orthogonal complement of span(u, g) inside span(cur): project every
    // x along the plane and keep an independent subset.
    std::vector<Vec> next;
    if (auto red = reduced_complement(phi, cur, u, g)) {
      next = std::move(*red);
    } else {
      for (auto& x : cur) {
        Vec px = vec_sub(vec_sub(x, vec_scale(phi.polar(x, g), u)), vec_scale(phi.polar(x, u), g));
        if (is_zero_vec(px)) continue;
        next.push_back(primitive(px));
        if (rank(f, next, n) < next.size()) next.pop_back();
        if (next.size() + 2 == cur.size()) break;
      }
    }
    cur = std::move(next);
  }
  w.kernel_basis = cur;
  w.kernel = phi.pullback(cur);
  if (!verify_witt_decomposition(phi, w))
    throw Error(ErrorCode::kInternalContradiction, "Witt decomposition failed its exact check");
  return w;
}

bool verify_witt_decomposition(const QuadraticForm& phi, const WittDecomposition& w) {
  const Field& f = phi.field();
  Mat basis = w.change_of_basis();
  if (basis.size() != phi.dim() || rank(f, basis, phi.dim()) != phi.dim()) return false;
  QuadraticForm expected(f, Mat{});
  expected = QuadraticForm::diagonal(f, zero_vec(f, w.radical.size()));
  for (std::size_t i = 0; i < w.planes.size(); ++i)
    expected = orthogonal_sum(expected, QuadraticForm::hyperbolic_plane(f));
  expected = orthogonal_sum(expected, w.kernel);
  return phi.pullback(basis) == expected;
}

std::size_t witt_index(const QuadraticForm& phi, const OracleOptions& opts) {
  if (as_rationals(phi.field())) return rational_witt_index(phi);
  return witt_decompose(phi, opts).witt_index();
}

// ---------------------------------------------------------------------------
// Isotropic bases

std::vector<Vec> isotropic_spanning_set(const QuadraticForm& phi, const OracleOptions& opts,
                                        const std::optional<Vec>& seed) {
  const Field& f = phi.field();
  std::size_t n = phi.dim();
  Vec u;
  if (seed) {
    u = *seed;
    if (is_zero_vec(u) || !phi.eval(u).is_zero()) throw Error(ErrorCode::kNotIsotropic, "seed vector is not isotropic");
  } else {
    IsotropyVerdict v = isotropy(phi, opts);
    if (v.verdict != Verdict::kIsotropic) throw Error(ErrorCode::kNotIsotropic, "form has no isotropic vector found");
    u = v.witness;
  }
  std::vector<Vec> basis{u};
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    basis.push_back(unit_vec(f, n, i));
    if (rank(f, basis, n) != basis.size()) basis.pop_back();
  }
  // x -> x - phi(x) polar(u,x)^{-1} u is isotropic when polar(u,x) != 0.
  auto correct = [&](const Vec& x) {
    Elem b = phi.polar(u, x);
    return vec_sub(x, vec_scale(phi.eval(x) / b, u));
  };
  std::optional<Vec> w;
  for (std::size_t i = 1; i < n; ++i)
    if (!phi.polar(u, basis[i]).is_zero()) { w = basis[i]; break; }
  if (!w) throw Error(ErrorCode::kNotIsotropic, "isotropic vector lies in the polar radical; form is not regular");
  std::vector<Vec> out{u};
  for (std::size_t i = 1; i < n; ++i) {
    const Vec& x = basis[i];
    out.push_back(phi.polar(u, x).is_zero() ? correct(vec_add(x, *w)) : correct(x));
  }
  for (auto& x : out)
    if (!phi.eval(x).is_zero()) throw Error(ErrorCode::kInternalContradiction, "isotropic basis vector is not isotropic");
  if (rank(f, out, n) != n) throw Error(ErrorCode::kInternalContradiction, "isotropic vectors do not span");
  return out;
}

}  // namespace albertkit
