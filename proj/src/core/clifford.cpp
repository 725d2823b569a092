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

#include "clifford.hpp"

#include <bit>

namespace albertkit {

CliffordAlgebra::CliffordAlgebra(QuadraticForm phi) : phi_(std::move(phi)) {
  if (phi_.dim() > kMaxDim) throw Error(ErrorCode::kDimensionCap, "Clifford algebras are capped at dimension 6 forms");
  const std::size_t d = dim();
  alg_.field = field();
  alg_.dim = d;
  alg_.unit = unit_vec(field(), d, 0);
  // right multiplication of every monomial by every generator, then extend linearly
  std::vector<std::vector<Vec>> by_gen(d, std::vector<Vec>(phi_.dim()));
  for (std::uint32_t m = 0; m < d; ++m)
    for (std::size_t i = 0; i < phi_.dim(); ++i) by_gen[m][i] = mul_generator(m, i);
  alg_.table.assign(d, std::vector<Vec>(d));
  for (std::uint32_t s = 0; s < d; ++s)
    for (std::uint32_t t = 0; t < d; ++t) {
      Vec acc = unit_vec(field(), d, s);
      for (std::size_t i = 0; i < phi_.dim(); ++i) {
        if (!(t >> i & 1u)) continue;
        Vec next = zero_vec(field(), d);
        for (std::uint32_t m = 0; m < d; ++m)
          if (!acc[m].is_zero()) next = vec_add(next, vec_scale(acc[m], by_gen[m][i]));
        acc = std::move(next);
      }
      alg_.table[s][t] = std::move(acc);
    }
}

Vec CliffordAlgebra::monomial(std::uint32_t mask) const { return unit_vec(field(), dim(), mask); }

Vec CliffordAlgebra::mul_generator(std::uint32_t mask, std::size_t i) const {
  const std::uint32_t bit = std::uint32_t{1} << i;
  if (mask == 0 || static_cast<std::size_t>(31 - std::countl_zero(mask)) < i) return monomial(mask | bit);
  std::size_t top = 31 - std::countl_zero(mask);
  std::uint32_t rest = mask & ~(std::uint32_t{1} << top);
  if (top == i) return vec_scale(phi_.coeff(i, i), monomial(rest));
  // e_rest e_top e_i = b(e_i, e_top) e_rest - (e_rest e_i) e_top
  Vec out = vec_scale(phi_.coeff(i, top), monomial(rest));
  Vec inner = mul_generator(rest, i);
  const std::uint32_t top_bit = std::uint32_t{1} << top;
  for (std::uint32_t m = 0; m < dim(); ++m)
    if (!inner[m].is_zero()) out[m | top_bit] -= inner[m];
  return out;
}

std::vector<std::uint32_t> even_masks(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
    if (std::popcount(m) % 2 == 0) out.push_back(m);
  return out;
}

StructAlgebra even_part(const CliffordAlgebra& c) {
  auto masks = even_masks(c.rank_n());
  std::vector<std::size_t> pos(c.dim(), 0);
  for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
  StructAlgebra a;
  a.field = c.field();
  a.dim = masks.size();
  a.unit = unit_vec(a.field, a.dim, 0);
  a.table.assign(a.dim, std::vector<Vec>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const Vec& full = c.structure().table[masks[i]][masks[j]];
      Vec v = zero_vec(a.field, a.dim);
      for (std::uint32_t m = 0; m < c.dim(); ++m) {
        if (full[m].is_zero()) continue;
        if (std::popcount(m) % 2 != 0) throw Error(ErrorCode::kInternalContradiction, "even part not closed");
        v[pos[m]] = full[m];
      }
      a.table[i][j] = std::move(v);
    }
  return a;
}

std::vector<Vec> center(const StructAlgebra& a, const std::vector<Vec>& generators) {
  Mat rows;
  for (const auto& g : generators) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < a.dim; ++i) cols.push_back(vec_sub(a.mul(a.basis(i), g), a.mul(g, a.basis(i))));
    for (auto& r : transpose(cols, a.dim)) rows.push_back(std::move(r));
  }
  return kernel(a.field, rows, a.dim);
}

ArfReport arf_trivial(const QuadraticForm& phi) {
  if (phi.dim() % 2 != 0 || phi.dim() == 0 || !classify(phi).nonsingular)
    throw Error(ErrorCode::kPrecondition, "Arf invariant needs a nonsingular even-dimensional form");
  CliffordAlgebra c(phi);
  StructAlgebra c0 = even_part(c);
  auto masks = even_masks(phi.dim());
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (std::popcount(masks[i]) == 2) gens.push_back(c0.basis(i));
  auto z_basis = center(c0, gens);
  if (z_basis.size() != 2) throw Error(ErrorCode::kInternalContradiction, "center of the even part is not 2-dimensional");
  ArfReport rep;
  const Field& f = phi.field();
  for (const auto& v : z_basis)
    if (rank(f, {c0.unit, v}, c0.dim) == 2) {
      rep.z = v;
      break;
    }
  auto ab = try_solve(f, transpose({rep.z, c0.unit}, c0.dim), c0.mul(rep.z, rep.z), 2);
  if (!ab) throw Error(ErrorCode::kInternalContradiction, "center is not closed");
  rep.a = (*ab)[0];
  rep.b = (*ab)[1];
  auto r1 = f->quadratic_root(rep.a, rep.b);
  if (!r1) return rep;
  Elem r2 = rep.a - *r1;
  if (*r1 == r2) throw Error(ErrorCode::kInternalContradiction, "center is not etale");
  // (z - r2) / (r1 - r2) is idempotent
  rep.idempotent = vec_scale((*r1 - r2).inv(), vec_sub(rep.z, vec_scale(r2, c0.unit)));
  if (c0.mul(rep.idempotent, rep.idempotent) != rep.idempotent)
    throw Error(ErrorCode::kInternalContradiction, "idempotent check failed");
  rep.trivial = true;
  return rep;
}

CliffordIsoReport clifford_iso_check(const AlbertData& d) {
  const TensorAlgebra& t = *d.tensor;
  CliffordIsoReport rep;
  std::vector<M2> gens;
  for (const auto& xi : d.xi_basis) gens.push_back(f_map(d, xi));
  rep.relations_hold = true;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!m2_is_scalar(m2_mul(t, gens[i], gens[i]), d.form.coeff(i, i))) rep.relations_hold = false;
    for (std::size_t j = i + 1; j < 6; ++j) {
      M2 p = m2_mul(t, gens[i], gens[j]), q = m2_mul(t, gens[j], gens[i]);
      M2 s{vec_add(p.a, q.a), vec_add(p.b, q.b), vec_add(p.c, q.c), vec_add(p.d, q.d)};
      if (!m2_is_scalar(s, d.form.coeff(i, j))) rep.relations_hold = false;
    }
  }
  if (!rep.relations_hold) throw Error(ErrorCode::kRelationViolation, "Clifford relations fail under f");

  std::vector<M2> images(64);
  images[0] = {t.one(), t.zero(), t.zero(), t.one()};
  Mat real;
  rep.even_diagonal = rep.odd_off_diagonal = rep.image_fixed = true;
  for (std::uint32_t m = 0; m < 64; ++m) {
    if (m != 0) {
      std::size_t top = 31 - std::countl_zero(m);
      images[m] = m2_mul(t, images[m & ~(std::uint32_t{1} << top)], gens[top]);
    }
    const M2& x = images[m];
    if (std::popcount(m) % 2 == 0) {
      if (!is_zero_vec(x.b) || !is_zero_vec(x.c)) rep.even_diagonal = false;
    } else if (!is_zero_vec(x.a) || !is_zero_vec(x.d)) {
      rep.odd_off_diagonal = false;
    }
    for (const Vec* v : {&x.a, &x.b, &x.c, &x.d})
      if (t.switch_map(*v) != *v) rep.image_fixed = false;
    Vec r;
    for (const Vec* v : {&x.a, &x.b, &x.c, &x.d}) {
      Vec rv = t.realify(*v);
      r.insert(r.end(), rv.begin(), rv.end());
    }
    real.push_back(std::move(r));
  }
  rep.image_rank = rank(t.F(), real, 128);
  if (rep.image_rank != 64) throw Error(ErrorCode::kRankDeficient, "image of the Clifford algebra has rank " +
                                                                        std::to_string(rep.image_rank));
  return rep;
}

}  // namespace albertkit
