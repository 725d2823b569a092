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

#include "transfer.hpp"

namespace albertkit {

namespace {

const EtaleQuadratic& field_extension(const QuadraticForm& phi) {
  auto k = as_ext(phi.field());
  if (!k) throw Error(ErrorCode::kPrecondition, "form is not defined over a quadratic extension");
  if (k->is_split()) throw Error(ErrorCode::kSplitK, "transfer is not used for split K");
  if (!k->is_field()) throw Error(ErrorCode::kSplitK, "K is split (X^2 - alpha X - beta has a root)");
  return *k;
}

Vec combine_k(const Field& f, const std::vector<Vec>& basis, const Vec& coords, std::size_t n) {
  Vec v = zero_vec(f, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) v = vec_add(v, vec_scale(coords[i], basis[i]));
  return v;
}

[[noreturn]] void contradiction(const std::string& what) {
  throw Error(ErrorCode::kInternalContradiction, "descent: " + what);
}

}  // namespace

Vec to_k_vector(const EtaleQuadratic& k, const Vec& f_coords) {
  AK_CHECK(f_coords.size() % 2 == 0);
  Vec out;
  for (std::size_t i = 0; i < f_coords.size(); i += 2) out.push_back(k.make(f_coords[i], f_coords[i + 1]));
  return out;
}

Vec to_f_coords(const EtaleQuadratic& k, const Vec& k_vector) {
  Vec out;
  for (auto& x : k_vector) {
    auto [a, b] = k.coords(x);
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

QuadraticForm transfer(const QuadraticForm& phi) {
  const EtaleQuadratic& k = field_extension(phi);
  const Field& kf = phi.field();
  const Field& f = k.base();
  std::size_t n = phi.dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(unit_vec(kf, n, i));
    Vec wb = zero_vec(kf, n);
    wb[i] = k.generator();
    basis.push_back(wb);
  }
  Mat m(2 * n, zero_vec(f, 2 * n));
  for (std::size_t p = 0; p < 2 * n; ++p) {
    m[p][p] = k.s_functional(phi.eval(basis[p]));
    for (std::size_t q = p + 1; q < 2 * n; ++q) m[p][q] = k.s_functional(phi.polar(basis[p], basis[q]));
  }
  QuadraticForm t(f, m);
  if (classify(phi).nonsingular && !classify(t).nonsingular)
    throw Error(ErrorCode::kInternalContradiction, "transfer of a nonsingular form is singular");
  return t;
}

DescentResult descend(const QuadraticForm& phi, const OracleOptions& opts) {
  const EtaleQuadratic& k = field_extension(phi);
  const Field& kf = phi.field();
  const Field& f = k.base();
  std::size_t n = phi.dim();
  if (!classify(phi).nonsingular) throw Error(ErrorCode::kPrecondition, "descent needs a nonsingular form");

  DescentResult res;
  res.transfer_witt_index = witt_index(transfer(phi), opts);
  std::vector<QuadraticForm> pieces;

  // Hyperbolic planes over K descend to hyperbolic planes over F.
  WittDecomposition wk = witt_decompose(phi, opts);
  for (auto& [e, g] : wk.planes) {
    pieces.push_back(QuadraticForm::hyperbolic_plane(f));
    res.embedding.push_back(e);
    res.embedding.push_back(g);
    DescentStep st;
    st.kind = "hyperbolic";
    st.u = e;
    st.v = g;
    res.steps.push_back(st);
  }

  std::vector<Vec> cur = wk.kernel_basis;
  while (!cur.empty()) {
    QuadraticForm sub = phi.pullback(cur);
    QuadraticForm t = transfer(sub);
    std::size_t i0 = witt_index(t, opts);
    if (i0 == 0) break;
    if (!classify(t).nonsingular) contradiction("transfer of a nonsingular form is singular");
    IsotropyVerdict tv = isotropy(t, opts);
    if (tv.verdict == Verdict::kUnknown)
      throw Error(ErrorCode::kOracleIncomplete, "isotropy of a transfer could not be decided (" + tv.method + ")");
    if (tv.verdict != Verdict::kIsotropic) contradiction("transfer with positive Witt index has no isotropic vector");
    Vec u_local = to_k_vector(k, tv.witness);
    Vec u = combine_k(kf, cur, u_local, n);
    auto phi_u = k.in_base(phi.eval(u));
    if (!phi_u) contradiction("phi(u) is not in F");
    if (i0 == 1) {
      pieces.push_back(QuadraticForm::diagonal(f, {*phi_u}));
      res.embedding.push_back(u);
      DescentStep st;
      st.kind = "line";
      st.u = u;
      st.witt_index_before = 1;
      res.steps.push_back(st);
      break;
    }
    // polar(u, v) = 1 with v outside K u; for v in K u the complement W
    // below would be u's orthogonal and no suitable w exists.
    std::optional<Vec> v;
    std::vector<Vec> trial = cur;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) trial.push_back(vec_add(cur[i], cur[j]));
    for (auto& x : trial) {
      Elem b = phi.polar(u, x);
      if (!b.is_zero() && rank(kf, {u, x}, n) == 2) {
        v = vec_scale(b.inv(), x);
        break;
      }
    }
    if (!v) contradiction("no partner for u in a nonsingular space");
    Elem lambda = k.lambda();
    Vec v_local = solve(kf, transpose(cur, n), *v, cur.size());
    Vec lv_local = vec_scale(lambda, v_local);
    // W = span_F(u, lambda v)^perp for the transfer.
    Mat tb = t.polar_matrix();
    Mat rows{mat_vec(f, tb, to_f_coords(k, u_local)), mat_vec(f, tb, to_f_coords(k, lv_local))};
    std::vector<Vec> wbasis = kernel(f, rows, t.dim());
    QuadraticForm tw = t.pullback(wbasis);
    std::vector<Vec> iso = isotropic_spanning_set(tw, opts);
    std::optional<Vec> w;
    for (auto& c : iso) {
      Vec w_local = to_k_vector(k, combine_k(f, wbasis, c, t.dim()));
      Vec cand = combine_k(kf, cur, w_local, n);
      if (!phi.polar(u, cand).is_zero()) {
        w = cand;
        break;
      }
    }
    if (!w) contradiction("no isotropic w in W with polar(u, w) != 0");
    auto b_uw = k.in_base(phi.polar(u, *w));
    auto phi_w = k.in_base(phi.eval(*w));
    if (!b_uw || !phi_w) contradiction("values of phi on span(u, w) are not in F");
    if (rank(kf, {u, *w}, n) != 2) contradiction("u and w are K-dependent");
    pieces.push_back(QuadraticForm::binary(*phi_u, *b_uw, *phi_w));
    res.embedding.push_back(u);
    res.embedding.push_back(*w);
    DescentStep st;
    st.kind = "plane";
    st.u = u;
    st.v = *v;
    st.w = *w;
    st.lambda = lambda;
    st.witt_index_before = i0;
    res.steps.push_back(st);
    // Orthogonal complement of span_K(u, w) inside span(cur).
    Mat crow(2);
    for (auto& x : cur) {
      crow[0].push_back(phi.polar(u, x));
      crow[1].push_back(phi.polar(*w, x));
    }
    std::vector<Vec> next;
    for (auto& c : kernel(kf, crow, cur.size())) next.push_back(combine_k(kf, cur, c, n));
    cur = std::move(next);
    std::size_t i0_next = cur.empty() ? 0 : witt_index(transfer(phi.pullback(cur)), opts);
    if (i0_next + 2 != i0) contradiction("Witt index of the transfer did not drop by 2");
  }

  QuadraticForm psi = QuadraticForm::diagonal(f, {});
  for (auto& p : pieces) psi = orthogonal_sum(psi, p);
  res.psi = psi;
  if (psi.dim() != res.transfer_witt_index) contradiction("dim psi differs from the Witt index of the transfer");
  if (!classify(psi).nondegenerate) contradiction("psi is degenerate");
  if (!verify_descent(phi, res)) contradiction("embedding check failed");
  return res;
}

bool verify_descent(const QuadraticForm& phi, const DescentResult& r) {
  const Field& kf = phi.field();
  if (r.embedding.size() != r.psi.dim()) return false;
  if (r.psi.dim() == 0) return true;
  if (rank(kf, r.embedding, phi.dim()) != r.psi.dim()) return false;
  return phi.pullback(r.embedding) == r.psi.base_change(kf);
}

bool extended_from_base(const QuadraticForm& phi, const OracleOptions& opts, DescentResult* out) {
  QuadraticForm t = transfer(phi);
  if (2 * witt_index(t, opts) != t.dim() || !classify(t).nonsingular)
    throw Error(ErrorCode::kPrecondition, "transfer is not hyperbolic");
  DescentResult r = descend(phi, opts);
  bool ok = r.psi.dim() == phi.dim() && verify_descent(phi, r);
  if (out) *out = r;
  return ok;
}

}  // namespace albertkit
