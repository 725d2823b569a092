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

#include "linalg.hpp"

namespace albertkit {

Echelon rref(const Field& f, Mat m, std::size_t ncols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Elem inv = m[r][col].inv();
    for (std::size_t j = col; j < ncols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Elem factor = m[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (!m[r][j].is_zero()) m[i][j] = m[i][j] - factor * m[r][j];
    }
    out.pivots.push_back(static_cast<int>(col));
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  (void)f;
  return out;
}

std::size_t rank(const Field& f, const Mat& m, std::size_t ncols) {
  return rref(f, m, ncols).pivots.size();
}

std::vector<Vec> kernel(const Field& f, const Mat& m, std::size_t ncols) {
  Echelon e = rref(f, m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, ncols);
    v[free] = f->one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> try_solve(const Field& f, const Mat& m, const Vec& rhs, std::size_t ncols) {
  AK_CHECK(rhs.size() == m.size());
  Mat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  Echelon e = rref(f, aug, ncols + 1);
  Vec x = zero_vec(f, ncols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == static_cast<int>(ncols)) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][ncols];
  }
  return x;
}

Vec solve(const Field& f, const Mat& m, const Vec& rhs, std::size_t ncols) {
  auto x = try_solve(f, m, rhs, ncols);
  if (!x) throw Error(ErrorCode::kNoSolution, "inconsistent linear system");
  return *x;
}

Mat inverse(const Field& f, const Mat& m) {
  std::size_t n = m.size();
  Mat aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    AK_CHECK(aug[i].size() == n);
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? f->one() : f->zero());
  }
  Echelon e = rref(f, aug, 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != static_cast<int>(n - 1))
    throw Error(ErrorCode::kDependentBasis, "matrix is singular");
  Mat inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(e.rows[i].begin() + n, e.rows[i].end());
  return inv;
}

Mat transpose(const Mat& m, std::size_t ncols) {
  Mat t(ncols);
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < m.size(); ++i) t[j].push_back(m[i][j]);
  return t;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  Mat c(a.size(), zero_vec(f, cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

Vec mat_vec(const Field& f, const Mat& a, const Vec& x) {
  Vec y;
  y.reserve(a.size());
  for (auto& row : a) y.push_back(dot(f, row, x));
  return y;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
  AK_CHECK(a.size() == b.size());
  Elem s = f->zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s = s + a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  AK_CHECK(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  AK_CHECK(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Elem& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Mat identity(const Field& f, std::size_t n) {
  Mat m(n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f->one();
  return m;
}

Elem lift(const Elem& x, const Field& to) {
  if (same_field(x.field(), to)) return x;
  if (auto k = as_ext(to)) {
    if (same_field(x.field(), k->base())) return k->embed(x);
  }
  if (auto r = as_ratfn(to)) {
    if (same_field(x.field(), r->coefficients())) return r->constant(x);
  }
  throw Error(ErrorCode::kPrecondition,
              "no embedding of " + x.field()->spec() + " into " + to->spec());
}

Vec lift(const Vec& v, const Field& to) {
  Vec out;
  out.reserve(v.size());
  for (auto& x : v) out.push_back(lift(x, to));
  return out;
}

}  // namespace albertkit
