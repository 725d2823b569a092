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

#include "quaternion.hpp"

#include <sstream>

namespace albertkit {

Quat QuaternionAlgebra::make(const Field& k, const Elem& e_alpha, const Elem& e_beta, const Elem& a) {
  Elem ka = lift(a, k);
  bool unit = true;
  try {
    (void)ka.inv();
  } catch (const Error&) {
    unit = false;
  }
  if (!unit) throw Error(ErrorCode::kZeroParameter, "quaternion parameter a must be a unit");
  auto q = std::shared_ptr<QuaternionAlgebra>(new QuaternionAlgebra());
  q->k_ = k;
  q->e_ = make_generated(k, lift(e_alpha, k), lift(e_beta, k));
  q->a_ = ka;
  return q;
}

Quat QuaternionAlgebra::hamilton(const Field& k) {
  return make(k, k->zero(), k->from_int(-1), k->from_int(-1));
}

Elem QuaternionAlgebra::to_e(const Elem& c0, const Elem& c1) const { return e_->make(c0, c1); }
std::pair<Elem, Elem> QuaternionAlgebra::from_e(const Elem& l) const { return e_->coords(l); }

Vec QuaternionAlgebra::zero() const { return zero_vec(k_, 4); }
Vec QuaternionAlgebra::one() const { return unit_vec(k_, 4, 0); }
Vec QuaternionAlgebra::basis(std::size_t i) const { return unit_vec(k_, 4, i); }
Vec QuaternionAlgebra::scalar(const Elem& c) const {
  Vec v = zero();
  v[0] = lift(c, k_);
  return v;
}

Vec QuaternionAlgebra::mul(const Vec& x, const Vec& y) const {
  AK_CHECK(x.size() == 4 && y.size() == 4);
  Elem l1 = to_e(x[0], x[1]), l2 = to_e(x[2], x[3]);
  Elem m1 = to_e(y[0], y[1]), m2 = to_e(y[2], y[3]);
  // (l1 + l2 z)(m1 + m2 z) = l1 m1 + a l2 iota(m2) + (l1 m2 + l2 iota(m1)) z
  Elem ea = e_->embed(a_);
  Elem p = l1 * m1 + ea * l2 * e_->gamma(m2);
  Elem r = l1 * m2 + l2 * e_->gamma(m1);
  auto [p0, p1] = from_e(p);
  auto [r0, r1] = from_e(r);
  return {p0, p1, r0, r1};
}

Vec QuaternionAlgebra::conjugate(const Vec& x) const {
  auto [c0, c1] = from_e(e_->gamma(to_e(x[0], x[1])));
  return {c0, c1, -x[2], -x[3]};
}

Elem QuaternionAlgebra::trd(const Vec& x) const { return e_->trace(to_e(x[0], x[1])); }

Elem QuaternionAlgebra::nrd(const Vec& x) const {
  return e_->norm(to_e(x[0], x[1])) - a_ * e_->norm(to_e(x[2], x[3]));
}

bool QuaternionAlgebra::is_scalar(const Vec& x) const {
  return x[1].is_zero() && x[2].is_zero() && x[3].is_zero();
}

std::optional<Elem> QuaternionAlgebra::scalar_value(const Vec& x) const {
  if (!is_scalar(x)) return std::nullopt;
  return x[0];
}

QuadraticForm QuaternionAlgebra::norm_form() const {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < 4; ++i) b.push_back(basis(i));
  Mat m(4, zero_vec(k_, 4));
  for (std::size_t i = 0; i < 4; ++i) {
    m[i][i] = nrd(b[i]);
    for (std::size_t j = i + 1; j < 4; ++j) m[i][j] = nrd(vec_add(b[i], b[j])) - nrd(b[i]) - nrd(b[j]);
  }
  return QuadraticForm(k_, m);
}

bool QuaternionAlgebra::check_axioms() const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t l = 0; l < 4; ++l) {
        Vec x = basis(i), y = basis(j), z = basis(l);
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
      }
  Vec z = basis(2), e = basis(1);
  if (mul(z, z) != scalar(a_)) return false;
  // z e = iota(e) z
  Vec iota_e = conjugate(e);
  if (mul(z, e) != mul(iota_e, z)) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    Vec x = basis(i);
    if (mul(one(), x) != x || mul(x, one()) != x) return false;
  }
  return true;
}

std::string QuaternionAlgebra::str() const {
  std::ostringstream os;
  os << "(E/K, a) with E: e^2 = " << e_alpha().str() << "*e + " << e_beta().str() << ", a = " << a_.str()
     << ", K = " << k_->spec();
  return os.str();
}

SplitVerdict is_split(const QuaternionAlgebra& q, const OracleOptions& opts) {
  if (!q.base()->is_field()) throw Error(ErrorCode::kNotAField, "split test needs a field of scalars");
  SplitVerdict out;
  IsotropyVerdict v = isotropy(q.norm_form(), opts);
  out.verdict = v.verdict;
  out.method = v.method;
  if (v.verdict == Verdict::kIsotropic) {
    out.zero_divisor = v.witness;
    if (!q.nrd(v.witness).is_zero())
      throw Error(ErrorCode::kInternalContradiction, "norm-form zero is not a zero divisor");
  }
  return out;
}

QuadraticEmbedding embed_quadratic_algebra(const QuaternionAlgebra& q, const Elem& p_in, const Elem& n_in,
                                           const OracleOptions& opts) {
  const Field& k = q.base();
  Elem p = lift(p_in, k), n = lift(n_in, k);
  Vec trd_row;
  for (std::size_t i = 0; i < 4; ++i) trd_row.push_back(q.trd(q.basis(i)));
  Vec xp = solve(k, {trd_row}, {p}, 4);
  std::vector<Vec> t0 = kernel(k, {trd_row}, 4);
  std::vector<Vec> images = t0;
  images.push_back(xp);
  QuadraticForm nf = q.norm_form();
  QuadraticForm phi0 = nf.pullback(images);
  Mat m = phi0.upper();
  m[3][3] = m[3][3] - n;
  // Phi(y, s) = Nrd(y + s xp) - n s^2 on ker(Trd) + K xp.
  QuadraticForm phi(k, m);

  QuadraticEmbedding out;
  IsotropyVerdict v = isotropy(phi, opts);
  out.method = v.method;
  if (v.verdict == Verdict::kAnisotropic) {
    out.outcome = SearchOutcome::kProvenNone;
    return out;
  }
  if (v.verdict == Verdict::kUnknown) {
    out.outcome = SearchOutcome::kBudgetExhausted;
    return out;
  }
  auto to_x = [&](const Vec& c) -> std::optional<Vec> {
    if (c[3].is_zero()) return std::nullopt;
    Vec x = zero_vec(k, 4);
    for (std::size_t i = 0; i < 4; ++i) x = vec_add(x, vec_scale(c[i], images[i]));
    return vec_scale(c[3].inv(), x);
  };
  std::vector<Vec> cands{v.witness};
  try {
    for (auto& c : isotropic_spanning_set(phi, opts, v.witness)) cands.push_back(c);
  } catch (const Error&) {
  }
  std::size_t base_count = cands.size();
  // A zero in the hyperplane s = 0 moves to s = 1 along a line.
  for (std::size_t i = 0; i < base_count; ++i) {
    if (!cands[i][3].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      Vec start = unit_vec(k, 4, 3);
      if (j < 3) start[j] = k->one();
      Elem b = phi.polar(cands[i], start);
      if (b.is_zero()) continue;
      Elem t = -phi.eval(start) / b;
      cands.push_back(vec_add(start, vec_scale(t, cands[i])));
    }
  }
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size() && j < 4 * base_count; ++j) {
      Vec s = vec_add(cands[i], cands[j]);
      if (phi.eval(s).is_zero()) cands.push_back(s);
    }
  for (auto& c : cands) {
    auto x = to_x(c);
    if (!x || q.is_scalar(*x)) continue;
    if (q.trd(*x) != p || q.nrd(*x) != n) throw Error(ErrorCode::kInternalContradiction, "embedding check failed");
    out.outcome = SearchOutcome::kFound;
    out.x = *x;
    return out;
  }
  out.outcome = SearchOutcome::kBudgetExhausted;
  return out;
}

}  // namespace albertkit
