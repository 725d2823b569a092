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

#include "corestriction.hpp"

namespace albertkit {

namespace {

const EtaleQuadratic* require_ext(const Quat& q) {
  const EtaleQuadratic* e = as_ext(q->base());
  if (e == nullptr)
    throw Error(ErrorCode::kPrecondition, "quaternion algebra must be defined over a quadratic etale K/F");
  return e;
}

const Elem& component(const Elem& x, int i) { return std::get<Elem::Pair>(x.rep()).c[i]; }

}  // namespace

TensorAlgebra::TensorAlgebra(Quat q) : q_(std::move(q)), ext_(require_ext(q_)) {
  qtab_.assign(4, std::vector<Vec>(4));
  qtab_g_.assign(4, std::vector<Vec>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      qtab_[i][k] = q_->mul(q_->basis(i), q_->basis(k));
      for (const auto& c : qtab_[i][k]) qtab_g_[i][k].push_back(ext_->gamma(c));
    }
}

Vec TensorAlgebra::zero() const { return zero_vec(K(), 16); }
Vec TensorAlgebra::one() const { return unit_vec(K(), 16, 0); }
Vec TensorAlgebra::scalar(const Elem& k) const {
  Vec v = zero();
  v[0] = lift(k, K());
  return v;
}

Vec TensorAlgebra::pure(const Vec& x, const Vec& y) const {
  Vec out = zero();
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    Elem gx = ext_->gamma(x[i]);
    for (std::size_t j = 0; j < 4; ++j) out[4 * i + j] = gx * y[j];
  }
  return out;
}

Vec TensorAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out = zero();
  for (std::size_t a = 0; a < 16; ++a) {
    if (x[a].is_zero()) continue;
    std::size_t i = a / 4, j = a % 4;
    for (std::size_t b = 0; b < 16; ++b) {
      if (y[b].is_zero()) continue;
      std::size_t k = b / 4, l = b % 4;
      Elem c = x[a] * y[b];
      const Vec& left = qtab_g_[i][k];
      const Vec& right = qtab_[j][l];
      for (std::size_t m = 0; m < 4; ++m) {
        if (left[m].is_zero()) continue;
        Elem cm = c * left[m];
        for (std::size_t n = 0; n < 4; ++n)
          if (!right[n].is_zero()) out[4 * m + n] += cm * right[n];
      }
    }
  }
  return out;
}

Vec TensorAlgebra::switch_map(const Vec& xi) const {
  Vec out = zero();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[4 * j + i] = ext_->gamma(xi[4 * i + j]);
  return out;
}

Vec TensorAlgebra::conjugate_first(const Vec& xi) const {
  Vec out = zero();
  for (std::size_t i = 0; i < 4; ++i) {
    // ^gamma sigma(b_i) = sum_k gamma(S_ik) ^gamma b_k
    Vec s = q_->conjugate(q_->basis(i));
    for (std::size_t k = 0; k < 4; ++k) {
      if (s[k].is_zero()) continue;
      Elem g = ext_->gamma(s[k]);
      for (std::size_t j = 0; j < 4; ++j) out[4 * k + j] += g * xi[4 * i + j];
    }
  }
  return out;
}

Vec TensorAlgebra::realify(const Vec& xi) const {
  Vec out;
  out.reserve(2 * xi.size());
  for (const auto& c : xi) {
    auto [c0, c1] = ext_->coords(c);
    out.push_back(c0);
    out.push_back(c1);
  }
  return out;
}

Vec TensorAlgebra::unrealify(const Vec& c) const {
  Vec out;
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) out.push_back(ext_->make(c[i], c[i + 1]));
  return out;
}

Vec CorestrictionAlgebra::coords(const Vec& xi) const {
  auto c = try_solve(tensor->F(), real_columns, tensor->realify(xi), basis.size());
  if (!c) throw Error(ErrorCode::kValueNotInF, "element is not fixed by the switch map");
  return *c;
}

Vec CorestrictionAlgebra::element(const Vec& c) const {
  Vec out = tensor->zero();
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!c[k].is_zero()) out = vec_add(out, vec_scale(lift(c[k], tensor->K()), basis[k]));
  return out;
}

bool CorestrictionAlgebra::contains(const Vec& xi) const { return tensor->switch_map(xi) == xi; }

CorestrictionAlgebra corestriction(const Quat& q) {
  CorestrictionAlgebra cor;
  auto t = std::make_shared<TensorAlgebra>(q);
  cor.tensor = t;
  const Field& f = t->F();
  Mat cols;
  for (std::size_t j = 0; j < 32; ++j) {
    Vec e = unit_vec(f, 32, j);
    cols.push_back(vec_sub(t->realify(t->switch_map(t->unrealify(e))), e));
  }
  std::vector<Vec> fixed = kernel(f, transpose(cols, 32), 32);
  if (fixed.size() != 16)
    throw Error(ErrorCode::kInternalContradiction, "fixed points of the switch map do not have dimension 16");
  for (const auto& v : fixed) cor.basis.push_back(t->unrealify(v));
  Mat real_basis;
  for (const auto& b : cor.basis) real_basis.push_back(t->realify(b));
  cor.real_columns = transpose(real_basis, 32);

  StructAlgebra& a = cor.algebra;
  a.field = f;
  a.dim = 16;
  a.table.assign(16, std::vector<Vec>(16));
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) a.table[i][j] = cor.coords(t->mul(cor.basis[i], cor.basis[j]));
  a.unit = cor.coords(t->one());
  return cor;
}

bool scalar_extension_is_bijective(const CorestrictionAlgebra& cor) {
  const TensorAlgebra& t = *cor.tensor;
  if (t.ext().is_field()) return rank(t.K(), cor.basis, 16) == 16;
  if (!t.ext().is_split())
    throw Error(ErrorCode::kUnsupported, "non-field K must use the split presentation");
  for (int c = 0; c < 2; ++c) {
    Mat proj;
    for (const auto& b : cor.basis) {
      Vec row;
      for (const auto& x : b) row.push_back(component(x, c));
      proj.push_back(row);
    }
    if (rank(t.F(), proj, 16) != 16) return false;
  }
  return true;
}

std::pair<Quat, Quat> split_components(const Quat& q) {
  const EtaleQuadratic* e = require_ext(q);
  if (!e->is_split()) throw Error(ErrorCode::kPrecondition, "K is not in the split presentation");
  auto part = [&](int c) {
    return QuaternionAlgebra::make(e->base(), component(q->e_alpha(), c), component(q->e_beta(), c),
                                   component(q->a(), c));
  };
  return {part(0), part(1)};
}

StructAlgebra structure_of(const QuaternionAlgebra& q) {
  StructAlgebra a;
  a.field = q.base();
  a.dim = 4;
  a.table.assign(4, std::vector<Vec>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a.table[i][j] = q.mul(q.basis(i), q.basis(j));
  a.unit = q.one();
  return a;
}

SplitComparison compare_with_split_product(const CorestrictionAlgebra& cor) {
  auto [q1, q2] = split_components(cor.tensor->quaternion());
  SplitComparison out;
  out.direct = tensor_product(structure_of(*q1), structure_of(*q2));
  // The second idempotent of K cuts ^gamma Q down to Q1 and Q down to Q2.
  for (const auto& b : cor.basis) {
    Vec v;
    for (const auto& x : b) v.push_back(component(x, 1));
    out.images.push_back(v);
  }
  out.isomorphic = is_algebra_isomorphism(cor.algebra, out.direct, out.images);
  return out;
}

}  // namespace albertkit
