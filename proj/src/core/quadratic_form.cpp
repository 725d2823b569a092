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

#include "quadratic_form.hpp"

#include <sstream>

namespace albertkit {

QuadraticForm::QuadraticForm(Field f, Mat upper) : f_(std::move(f)), n_(upper.size()), m_(std::move(upper)) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (m_[i].size() != n_) throw Error(ErrorCode::kDimensionMismatch, "coefficient matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) {
      m_[i][j] = lift(m_[i][j], f_);
      if (j < i && !m_[i][j].is_zero())
        throw Error(ErrorCode::kDimensionMismatch, "coefficient matrix must be upper triangular");
    }
  }
}

QuadraticForm QuadraticForm::diagonal(const Field& f, const Vec& coeffs) {
  Mat m(coeffs.size(), zero_vec(f, coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) m[i][i] = coeffs[i];
  return QuadraticForm(f, m);
}

QuadraticForm QuadraticForm::binary(const Elem& a, const Elem& b, const Elem& c) {
  const Field& f = a.field();
  return QuadraticForm(f, {{a, b}, {f->zero(), c}});
}

QuadraticForm QuadraticForm::hyperbolic_plane(const Field& f) {
  return binary(f->zero(), f->one(), f->zero());
}

QuadraticForm QuadraticForm::from_square_matrix(const Field& f, const Mat& m) {
  std::size_t n = m.size();
  Mat u(n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i) {
    u[i][i] = m[i][i];
    for (std::size_t j = i + 1; j < n; ++j) u[i][j] = m[i][j] + m[j][i];
  }
  return QuadraticForm(f, u);
}

Elem QuadraticForm::eval(const Vec& x) const {
  if (x.size() != n_) throw Error(ErrorCode::kDimensionMismatch, "vector length differs from form dimension");
  Elem s = f_->zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    Elem row = f_->zero();
    for (std::size_t j = i; j < n_; ++j)
      if (!m_[i][j].is_zero() && !x[j].is_zero()) row = row + m_[i][j] * x[j];
    s = s + x[i] * row;
  }
  return s;
}

Elem QuadraticForm::polar(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw Error(ErrorCode::kDimensionMismatch, "vector length differs from form dimension");
  Elem s = f_->zero();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      if (m_[i][j].is_zero()) continue;
      Elem t = x[i] * y[j] + x[j] * y[i];
      if (!t.is_zero()) s = s + m_[i][j] * t;
    }
  return s;
}

Mat QuadraticForm::polar_matrix() const {
  Mat b(n_, zero_vec(f_, n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      b[i][j] = b[i][j] + m_[i][j];
      b[j][i] = b[j][i] + m_[i][j];
    }
  return b;
}

QuadraticForm QuadraticForm::pullback(const std::vector<Vec>& images) const {
  std::size_t k = images.size();
  Mat u(k, zero_vec(f_, k));
  for (std::size_t i = 0; i < k; ++i) {
    u[i][i] = eval(images[i]);
    for (std::size_t j = i + 1; j < k; ++j) u[i][j] = polar(images[i], images[j]);
  }
  return QuadraticForm(f_, u);
}

QuadraticForm QuadraticForm::restrict(const std::vector<Vec>& basis) const {
  if (rank(f_, basis, n_) != basis.size())
    throw Error(ErrorCode::kDependentBasis, "restriction basis is linearly dependent");
  return pullback(basis);
}

QuadraticForm QuadraticForm::scale(const Elem& c) const {
  if (c.is_zero()) throw Error(ErrorCode::kZeroParameter, "scaling factor must be nonzero");
  Mat u = m_;
  for (auto& row : u)
    for (auto& e : row) e = c * e;
  return QuadraticForm(f_, u);
}

QuadraticForm QuadraticForm::base_change(const Field& to) const {
  Mat u;
  for (auto& row : m_) u.push_back(lift(row, to));
  return QuadraticForm(to, u);
}

bool QuadraticForm::operator==(const QuadraticForm& o) const {
  if (n_ != o.n_ || !same_field(f_, o.f_)) return false;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (m_[i][j] != o.m_[i][j]) return false;
  return true;
}

std::string QuadraticForm::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << m_[i][j].str();
    os << "]";
  }
  os << "]";
  return os.str();
}

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b) {
  if (!same_field(a.field(), b.field()))
    throw Error(ErrorCode::kDimensionMismatch, "orthogonal sum of forms over different fields");
  const Field& f = a.field();
  std::size_t n = a.dim() + b.dim();
  Mat u(n, zero_vec(f, n));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) u[i][j] = a.coeff(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j) u[a.dim() + i][a.dim() + j] = b.coeff(i, j);
  return QuadraticForm(f, u);
}

std::vector<Vec> quadratic_radical(const QuadraticForm& phi, const std::vector<Vec>& rad_polar) {
  const Field& f = phi.field();
  if (rad_polar.empty()) return {};
  if (f->characteristic() != 2) return rad_polar;
  // phi is additive and Frobenius-semilinear on rad b_phi.
  Vec values;
  for (auto& r : rad_polar) values.push_back(phi.eval(r));
  std::size_t k = rad_polar.size();
  std::vector<Vec> coeff_kernel;
  if (f->is_finite()) {
    Vec row;
    for (auto& c : values) row.push_back(*f->sqrt(c));
    coeff_kernel = kernel(f, {row}, k);
  } else if (k == 1) {
    if (values[0].is_zero()) coeff_kernel.push_back({f->one()});
  } else if (k == 2) {
    if (values[0].is_zero() && values[1].is_zero()) {
      coeff_kernel = {{f->one(), f->zero()}, {f->zero(), f->one()}};
    } else if (values[0].is_zero()) {
      coeff_kernel.push_back({f->one(), f->zero()});
    } else if (values[1].is_zero()) {
      coeff_kernel.push_back({f->zero(), f->one()});
    } else if (auto r = f->sqrt(values[1] / values[0])) {
      coeff_kernel.push_back({*r, f->one()});
    }
  } else {
    throw Error(ErrorCode::kUnsupported,
                "quadratic radical over an imperfect field needs dim rad b_phi <= 2");
  }
  std::vector<Vec> out;
  for (auto& c : coeff_kernel) {
    Vec v = zero_vec(f, phi.dim());
    for (std::size_t i = 0; i < k; ++i) v = vec_add(v, vec_scale(c[i], rad_polar[i]));
    out.push_back(v);
  }
  return out;
}

FormClass classify(const QuadraticForm& phi) {
  FormClass c;
  c.rad_polar = kernel(phi.field(), phi.polar_matrix(), phi.dim());
  c.rad = quadratic_radical(phi, c.rad_polar);
  c.nonsingular = c.rad_polar.empty();
  c.regular = c.rad.empty();
  c.nondegenerate = c.regular && c.rad_polar.size() <= 1;
  return c;
}

std::vector<Vec> polar_complement(const QuadraticForm& phi, const std::vector<Vec>& vectors) {
  Mat b = phi.polar_matrix();
  Mat rows;
  for (auto& v : vectors) rows.push_back(mat_vec(phi.field(), b, v));
  if (rows.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < phi.dim(); ++i) all.push_back(unit_vec(phi.field(), phi.dim(), i));
    return all;
  }
  return kernel(phi.field(), rows, phi.dim());
}

namespace {

struct HeightLevels {
  std::vector<Elem> values;
  std::vector<bool> old;        // value already present at the previous height
  std::vector<bool> neg_first;  // negation appears earlier in the list
};

HeightLevels levels(const Field& f, int h) {
  HeightLevels out;
  out.values = f->small_elements(h);
  std::vector<Elem> prev;
  if (h > 0 && !f->is_finite()) prev = f->small_elements(h - 1);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    bool in_prev = f->is_finite() ? h > 0 : false;
    for (auto& p : prev)
      if (p == out.values[i]) { in_prev = true; break; }
    out.old.push_back(in_prev);
    bool earlier = false;
    Elem n = -out.values[i];
    for (std::size_t j = 0; j < i; ++j)
      if (out.values[j] == n) { earlier = true; break; }
    out.neg_first.push_back(earlier);
  }
  return out;
}

}  // namespace

bool for_each_vector(const Field& f, std::size_t n, int height, bool projective,
                     const std::function<bool(const Vec&)>& visit) {
  if (n == 0) return false;
  if (f->is_finite() && height > 0) return false;
  HeightLevels lv = levels(f, height);
  std::size_t m = lv.values.size();
  std::vector<std::size_t> idx(n, 0);
  Vec x(n, f->zero());
  while (true) {
    std::size_t i = 0;
    while (i < n && ++idx[i] == m) idx[i++] = 0;
    if (i == n) return false;
    // Index n-1 is the most significant digit; enumeration runs over the
    // leading coordinate last so that small vectors appear first.
    int first = -1;
    bool any_new = false;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = lv.values[idx[n - 1 - j]];
      if (first < 0 && !x[j].is_zero()) first = static_cast<int>(j);
      if (!lv.old[idx[n - 1 - j]]) any_new = true;
    }
    if (first < 0) continue;
    if (!f->is_finite() && !any_new) continue;
    std::size_t fi = idx[n - 1 - first];
    if (projective && f->is_finite()) {
      if (!x[first].is_one()) continue;
    } else if (lv.neg_first[fi]) {
      continue;
    }
    if (visit(x)) return true;
  }
}

Embedding isometric_embedding(const QuadraticForm& psi, const QuadraticForm& phi, int height,
                              std::size_t enumeration_cap) {
  const Field& f = phi.field();
  if (!same_field(f, psi.field())) throw Error(ErrorCode::kDimensionMismatch, "forms over different fields");
  std::size_t k = psi.dim(), n = phi.dim();
  Embedding out;
  if (k > n) {
    out.outcome = SearchOutcome::kProvenNone;
    return out;
  }
  if (k == 0) {
    out.outcome = SearchOutcome::kFound;
    return out;
  }
  // Candidate images per basis vector of psi, by value.
  std::vector<std::vector<Vec>> cand(k);
  std::size_t visited = 0;
  bool complete = false;
  auto collect = [&](const Vec& x) {
    ++visited;
    Elem v = phi.eval(x);
    for (std::size_t i = 0; i < k; ++i)
      if (v == psi.coeff(i, i)) cand[i].push_back(x);
    return visited >= enumeration_cap;
  };
  if (f->is_finite()) {
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(f->order());
    bool stopped = false;
    if (total <= static_cast<double>(enumeration_cap)) {
      // Every nonzero vector; for_each_vector keeps one of x, -x, so add negations.
      stopped = for_each_vector(f, n, 0, false, [&](const Vec& x) {
        if (collect(x)) return true;
        Vec y = vec_scale(-f->one(), x);
        if (!(y == x)) return collect(y);
        return false;
      });
      complete = !stopped;
    }
  } else {
    for (int h = 0; h <= height; ++h) {
      bool stopped = for_each_vector(f, n, h, false, [&](const Vec& x) {
        if (collect(x)) return true;
        return collect(vec_scale(-f->one(), x));
      });
      if (stopped) break;
    }
  }
  std::vector<Vec> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == k) return true;
    for (auto& x : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = phi.polar(chosen[j], x) == psi.polar(unit_vec(f, k, j), unit_vec(f, k, i));
      if (!ok) continue;
      chosen.push_back(x);
      if (rank(f, chosen, n) == chosen.size() && extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (extend(0)) {
    out.outcome = SearchOutcome::kFound;
    out.images = chosen;
    return out;
  }
  out.outcome = complete ? SearchOutcome::kProvenNone : SearchOutcome::kBudgetExhausted;
  return out;
}

}  // namespace albertkit
