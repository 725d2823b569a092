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

#include "albert.hpp"

#include <random>

#include "verdicts.hpp"

namespace albertkit {

namespace {

const Elem& component(const Elem& x, int i) { return std::get<Elem::Pair>(x.rep()).c[i]; }

Vec q_realify(const EtaleQuadratic& ext, const Vec& x) {
  Vec out;
  for (const auto& c : x) {
    auto [c0, c1] = ext.coords(c);
    out.push_back(c0);
    out.push_back(c1);
  }
  return out;
}

Vec q_unrealify(const EtaleQuadratic& ext, const Vec& r) {
  Vec out;
  for (std::size_t i = 0; i + 1 < r.size(); i += 2) out.push_back(ext.make(r[i], r[i + 1]));
  return out;
}

// Greedily extends `chosen` by candidates whose images raise the rank, up to `target` elements.
template <typename ImageFn>
void greedy_extend(const Field& f, std::size_t width, const std::vector<Vec>& candidates, std::size_t target,
                   std::vector<Vec>& chosen, Mat& images, ImageFn image) {
  for (const auto& c : candidates) {
    if (chosen.size() >= target) return;
    Mat trial = images;
    trial.push_back(image(c));
    if (rank(f, trial, width) == trial.size()) {
      images = std::move(trial);
      chosen.push_back(c);
    }
  }
}

// Walks isotropic vectors of phi: the seed, an isotropic basis through it, then the
// points w - phi(w)/b(seed, w) * seed of the quadric for w of growing height.
template <typename Accept>
bool search_quadric(const QuadraticForm& phi, const Vec& seed, const OracleOptions& opts, std::size_t& tried,
                    Accept accept) {
  auto attempt = [&](const Vec& c) {
    ++tried;
    return !is_zero_vec(c) && accept(c);
  };
  if (attempt(seed)) return true;
  std::vector<Vec> seeds{seed};
  try {
    for (auto& v : isotropic_spanning_set(phi, opts, seed)) {
      if (attempt(v)) return true;
      seeds.push_back(v);
    }
    for (std::size_t i = 0; i < seeds.size(); ++i)
      for (std::size_t j = i + 1; j < seeds.size(); ++j) {
        Vec s = vec_add(seeds[i], seeds[j]);
        if (phi.eval(s).is_zero() && attempt(s)) return true;
      }
  } catch (const Error&) {
  }
  const int max_h = phi.field()->is_finite() ? 0 : opts.max_height;
  for (int h = 0; h <= max_h; ++h) {
    bool done = for_each_vector(phi.field(), phi.dim(), h, false, [&](const Vec& w) {
      if (tried >= opts.budget) return true;
      for (const auto& s : seeds) {
        Elem b = phi.polar(s, w);
        Elem v = phi.eval(w);
        Vec c;
        if (!b.is_zero())
          c = vec_sub(w, vec_scale(v / b, s));
        else if (v.is_zero())
          c = w;
        else
          continue;
        if (attempt(c)) return true;
        if (tried >= opts.budget) return true;
      }
      return false;
    });
    if (tried >= opts.budget) return false;
    if (done) return true;
  }
  return false;
}

// Scalars used for readable basis candidates: the idempotents over split K, else 1 and w.
std::vector<Elem> preferred_scalars(const EtaleQuadratic& ext) {
  if (ext.is_split()) return {ext.one() - ext.generator(), ext.generator()};
  return {ext.one(), ext.generator()};
}

}  // namespace

Elem pick_kappa(const EtaleQuadratic& ext) {
  const Field& f = ext.base();
  if (f->characteristic() == 2) return ext.one();
  if (ext.is_split()) return ext.make(f->one(), -f->one());
  if (ext.alpha().is_zero()) return ext.generator();
  return ext.generator() + ext.generator() - ext.embed(ext.alpha());
}

Elem AlbertData::trace_condition(const Vec& y) const {
  return tensor->ext().trace(quaternion().trd(y));
}

Vec AlbertData::xi_of(const Vec& y) const {
  const QuaternionAlgebra& q = quaternion();
  return vec_add(tensor->pure(y, q.one()), tensor->pure(q.one(), y));
}

Elem AlbertData::value(const Vec& y) const {
  const EtaleQuadratic& ext = tensor->ext();
  Elem n = quaternion().nrd(y);
  Elem v = kappa * (ext.gamma(n) - n);
  auto in_f = ext.in_base(v);
  if (!in_f) throw Error(ErrorCode::kValueNotInF, "Albert form value " + v.str() + " is not in F");
  return *in_f;
}

Vec AlbertData::y_of(const Vec& c) const {
  const Field& k = tensor->K();
  Vec y = zero_vec(k, 4);
  for (std::size_t i = 0; i < y_basis.size(); ++i)
    if (!c[i].is_zero()) y = vec_add(y, vec_scale(lift(c[i], k), y_basis[i]));
  return y;
}

Vec AlbertData::xi_from(const Vec& c) const { return xi_of(y_of(c)); }

std::optional<Vec> AlbertData::xi_coords(const Vec& xi) const {
  return try_solve(F(), xi_real_columns, tensor->realify(xi), xi_basis.size());
}

AlbertData albert_form(const Quat& q, std::optional<Elem> kappa) {
  AlbertData d;
  d.tensor = std::make_shared<TensorAlgebra>(q);
  const EtaleQuadratic& ext = d.tensor->ext();
  const Field& f = d.tensor->F();
  const Field& k = d.tensor->K();
  d.kappa = kappa ? lift(*kappa, k) : pick_kappa(ext);
  if (d.kappa.is_zero() || ext.gamma(d.kappa) != -d.kappa)
    throw Error(ErrorCode::kPrecondition, "kappa must be a unit with gamma(kappa) = -kappa");

  // {y : T(Trd(y)) = 0} as the kernel of one functional on the 8-dim F-space Q.
  Vec functional;
  for (std::size_t j = 0; j < 8; ++j) functional.push_back(d.trace_condition(q_unrealify(ext, unit_vec(f, 8, j))));
  std::vector<Vec> ys;
  for (auto& r : kernel(f, {functional}, 8)) ys.push_back(q_unrealify(ext, r));
  if (ys.size() != 7) throw Error(ErrorCode::kInternalContradiction, "trace condition is not a single constraint");

  Mat y_to_xi;
  for (const auto& y : ys) y_to_xi.push_back(d.tensor->realify(d.xi_of(y)));
  auto ker = kernel(f, transpose(y_to_xi, 32), 7);
  if (ker.size() != 1) throw Error(ErrorCode::kInternalContradiction, "V^s does not have dimension 6");
  // The kernel is K-scalars fixed up to sign by gamma: kappa*F, or F in characteristic 2.
  d.kernel_y = q->scalar(f->characteristic() == 2 ? k->one() : d.kappa);
  if (!is_zero_vec(d.xi_of(d.kernel_y))) throw Error(ErrorCode::kInternalContradiction, "unexpected kernel of y -> xi");

  // Prefer the readable elements lambda * b_i before falling back to kernel vectors.
  std::vector<Vec> candidates;
  for (std::size_t i = 1; i < 4; ++i)
    for (const Elem& l : preferred_scalars(ext)) {
      Vec y = vec_scale(l, q->basis(i));
      if (d.trace_condition(y).is_zero()) candidates.push_back(y);
    }
  for (const auto& y : ys) candidates.push_back(y);
  Mat images;
  greedy_extend(f, 32, candidates, 6, d.y_basis, images,
                [&](const Vec& y) { return d.tensor->realify(d.xi_of(y)); });
  AK_CHECK(d.y_basis.size() == 6);
  for (const auto& y : d.y_basis) {
    Vec xi = d.xi_of(y);
    if (d.tensor->switch_map(xi) != xi) throw Error(ErrorCode::kInternalContradiction, "V^s element not s-fixed");
    d.xi_basis.push_back(xi);
  }
  d.xi_real_columns = transpose(images, 32);

  Mat upper(6, zero_vec(f, 6));
  Vec diag;
  for (const auto& y : d.y_basis) diag.push_back(d.value(y));
  for (std::size_t i = 0; i < 6; ++i) {
    upper[i][i] = diag[i];
    for (std::size_t j = i + 1; j < 6; ++j) upper[i][j] = d.value(vec_add(d.y_basis[i], d.y_basis[j])) - diag[i] - diag[j];
  }
  d.form = QuadraticForm(f, upper);
  if (!classify(d.form).nonsingular) throw Error(ErrorCode::kInternalContradiction, "Albert form is singular");
  return d;
}

M2 m2_mul(const TensorAlgebra& t, const M2& x, const M2& y) {
  return {vec_add(t.mul(x.a, y.a), t.mul(x.b, y.c)), vec_add(t.mul(x.a, y.b), t.mul(x.b, y.d)),
          vec_add(t.mul(x.c, y.a), t.mul(x.d, y.c)), vec_add(t.mul(x.c, y.b), t.mul(x.d, y.d))};
}

bool m2_is_zero(const M2& x) { return is_zero_vec(x.a) && is_zero_vec(x.b) && is_zero_vec(x.c) && is_zero_vec(x.d); }

bool m2_is_scalar(const M2& x, const Elem& c) {
  if (!is_zero_vec(x.b) || !is_zero_vec(x.c)) return false;
  for (const Vec* v : {&x.a, &x.d}) {
    if ((*v)[0] != lift(c, (*v)[0].field())) return false;
    for (std::size_t i = 1; i < v->size(); ++i)
      if (!(*v)[i].is_zero()) return false;
  }
  return true;
}

M2 f_map(const AlbertData& d, const Vec& xi) {
  const TensorAlgebra& t = *d.tensor;
  return {t.zero(), vec_scale(d.kappa, t.conjugate_first(xi)), xi, t.zero()};
}

FMapReport f_map_check(const AlbertData& d, std::size_t random_count, std::uint64_t seed) {
  const TensorAlgebra& t = *d.tensor;
  const Field& f = d.F();
  FMapReport rep;
  auto check_one = [&](const Vec& c) {
    Vec y = d.y_of(c);
    Vec xi = d.xi_of(y);
    Elem phi = d.form.eval(c);
    if (d.value(y) != phi) rep.identity_holds = false;
    M2 m = f_map(d, xi);
    if (!m2_is_scalar(m2_mul(t, m, m), phi)) rep.identity_holds = false;
    if (t.switch_map(m.b) != m.b || t.switch_map(m.c) != m.c) rep.entries_fixed = false;
    ++rep.checked;
  };
  for (std::size_t i = 0; i < 6; ++i) check_one(unit_vec(f, 6, i));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::size_t r = 0; r < random_count; ++r) {
    Vec c;
    for (std::size_t i = 0; i < 6; ++i) c.push_back(f->from_int(dist(rng)));
    check_one(c);
  }
  std::vector<M2> fs;
  for (const auto& xi : d.xi_basis) fs.push_back(f_map(d, xi));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      M2 p = m2_mul(t, fs[i], fs[j]), q = m2_mul(t, fs[j], fs[i]);
      M2 s{vec_add(p.a, q.a), vec_add(p.b, q.b), vec_add(p.c, q.c), vec_add(p.d, q.d)};
      if (!m2_is_scalar(s, d.form.coeff(i, j))) rep.polarization_holds = false;
    }
  if (!rep.identity_holds || !rep.polarization_holds)
    throw Error(ErrorCode::kIdentityFails, "f(xi)^2 = phi(xi) fails");
  return rep;
}

DivisionVerdict cor_is_division(const AlbertData& d, const OracleOptions& opts) {
  DivisionVerdict out;
  IsotropyVerdict v = isotropy(d.form, opts);
  out.albert = v.verdict;
  out.method = v.method;
  if (v.verdict != Verdict::kIsotropic) return out;
  out.coords = v.witness;
  out.y = d.y_of(v.witness);
  out.xi = d.xi_of(out.y);
  out.nilpotent = f_map(d, out.xi);
  if (m2_is_zero(out.nilpotent) || !m2_is_zero(m2_mul(*d.tensor, out.nilpotent, out.nilpotent)))
    throw Error(ErrorCode::kInternalContradiction, "isotropic Albert vector does not give a nilpotent");
  return out;
}

WitnessCheck validate_witness(const QuaternionAlgebra& q, const Vec& x, bool etale_required) {
  WitnessCheck w;
  const EtaleQuadratic* ext = as_ext(q.base());
  if (ext == nullptr) throw Error(ErrorCode::kPrecondition, "witness check needs a quadratic etale K/F");
  if (x.size() != 4) {
    w.reason = "wrong length";
    return w;
  }
  auto t = ext->in_base(q.trd(x));
  auto n = ext->in_base(q.nrd(x));
  if (!t || !n) {
    w.reason = "reduced trace or norm not in F";
    return w;
  }
  w.trd = *t;
  w.nrd = *n;
  if (ext->is_field()) {
    if (q.is_scalar(x)) {
      w.reason = "x lies in K";
      return w;
    }
  } else {
    if (!ext->is_split()) throw Error(ErrorCode::kUnsupported, "non-field K must use the split presentation");
    for (int c = 0; c < 2; ++c)
      if (component(x[1], c).is_zero() && component(x[2], c).is_zero() && component(x[3], c).is_zero()) {
        w.reason = "a component of x is scalar";
        return w;
      }
  }
  if (etale_required) {
    const Field& f = ext->base();
    bool sep = f->characteristic() == 2 ? !w.trd.is_zero() : !(w.trd * w.trd - f->from_int(4) * w.nrd).is_zero();
    if (!sep) {
      w.reason = "generated algebra is not etale";
      return w;
    }
  }
  w.ok = true;
  return w;
}

IsotropicVector generator_to_isotropic(const AlbertData& d, const Vec& x) {
  if (!validate_witness(d.quaternion(), x, false).ok)
    throw Error(ErrorCode::kInvalidWitness, "not a quadratic subalgebra witness");
  IsotropicVector out;
  out.y = vec_scale(d.kappa, x);
  if (!d.trace_condition(out.y).is_zero() || !d.value(out.y).is_zero())
    throw Error(ErrorCode::kInternalContradiction, "kappa x does not give an isotropic Albert vector");
  out.xi = d.xi_of(out.y);
  auto c = d.xi_coords(out.xi);
  if (!c) throw Error(ErrorCode::kInternalContradiction, "kappa x outside V^s");
  out.coords = *c;
  if (!d.form.eval(out.coords).is_zero()) throw Error(ErrorCode::kInternalContradiction, "coordinates not isotropic");
  return out;
}

SubalgebraSearch isotropic_to_generator(const AlbertData& d, const Vec& coords, const OracleOptions& opts) {
  if (coords.size() != 6 || is_zero_vec(coords) || !d.form.eval(coords).is_zero())
    throw Error(ErrorCode::kInvalidWitness, "not a nonzero isotropic Albert vector");
  SubalgebraSearch out;
  out.method = "albert-quadric";
  const QuaternionAlgebra& q = d.quaternion();
  bool found = search_quadric(d.form, coords, opts, out.tried, [&](const Vec& c) {
    Vec y = d.y_of(c);
    // y is determined up to kernel_y, which shifts the trace in odd characteristic.
    for (const Vec& cand : {y, vec_add(y, d.kernel_y)}) {
      Vec x = vec_scale(d.kappa, cand);
      if (q.trd(x).is_zero()) continue;
      if (validate_witness(q, x, true).ok) {
        out.x = x;
        return true;
      }
    }
    return false;
  });
  out.outcome = found ? SearchOutcome::kFound : SearchOutcome::kBudgetExhausted;
  return out;
}

SubalgebraSearch find_disjoint_quadratic_subalgebra(const Quat& q, bool etale_required, const OracleOptions& opts) {
  const EtaleQuadratic* ext = as_ext(q->base());
  if (ext == nullptr) throw Error(ErrorCode::kPrecondition, "quaternion algebra must be over a quadratic etale K/F");
  const Field& f = ext->base();
  SubalgebraSearch out;
  auto accept = [&](const Vec& x) {
    ++out.tried;
    if (!validate_witness(*q, x, etale_required).ok) return false;
    out.x = x;
    out.outcome = SearchOutcome::kFound;
    return true;
  };

  std::vector<Vec> simple;
  for (std::size_t i = 1; i < 4; ++i)
    for (const Elem& l : {ext->one(), ext->generator()}) simple.push_back(vec_scale(l, q->basis(i)));
  std::size_t n_simple = simple.size();
  for (std::size_t i = 0; i < n_simple; ++i)
    for (std::size_t j = i + 1; j < n_simple; ++j) simple.push_back(vec_add(simple[i], simple[j]));
  for (const auto& x : simple)
    if (accept(x)) {
      out.method = "basis-candidates";
      return out;
    }

  // X = {x : Trd(x) in F}; x -> s(Nrd(x)) vanishes exactly when Nrd(x) is in F.
  // F*1 lies in its radical, so the question lives on a complement of 1 in X.
  Vec functional;
  for (std::size_t j = 0; j < 8; ++j)
    functional.push_back(ext->s_functional(q->trd(q_unrealify(*ext, unit_vec(f, 8, j)))));
  std::vector<Vec> xs;
  for (std::size_t i = 1; i < 4; ++i)
    for (const Elem& l : preferred_scalars(*ext)) {
      Vec x = vec_scale(l, q->basis(i));
      if (ext->s_functional(q->trd(x)).is_zero()) xs.push_back(q_realify(*ext, x));
    }
  for (auto& r : kernel(f, {functional}, 8)) xs.push_back(r);
  std::vector<Vec> chosen{q_realify(*ext, q->one())};
  Mat images{chosen[0]};
  greedy_extend(f, 8, xs, 7, chosen, images, [](const Vec& r) { return r; });
  AK_CHECK(chosen.size() == 7);
  std::vector<Vec> basis;
  for (std::size_t i = 1; i < 7; ++i) basis.push_back(q_unrealify(*ext, chosen[i]));
  auto to_x = [&](const Vec& c) {
    Vec x = q->zero();
    for (std::size_t i = 0; i < 6; ++i)
      if (!c[i].is_zero()) x = vec_add(x, vec_scale(lift(c[i], q->base()), basis[i]));
    return x;
  };
  auto value = [&](const Vec& x) { return ext->s_functional(q->nrd(x)); };
  Mat upper(6, zero_vec(f, 6));
  for (std::size_t i = 0; i < 6; ++i) {
    upper[i][i] = value(basis[i]);
    for (std::size_t j = i + 1; j < 6; ++j)
      upper[i][j] = value(vec_add(basis[i], basis[j])) - upper[i][i] - value(basis[j]);
  }
  QuadraticForm phi(f, upper);
  IsotropyVerdict v = isotropy(phi, opts);
  out.method = "trace-rational-norm/" + v.method;
  if (v.verdict == Verdict::kAnisotropic) {
    out.outcome = SearchOutcome::kProvenNone;
    return out;
  }
  if (v.verdict == Verdict::kUnknown) {
    out.outcome = SearchOutcome::kBudgetExhausted;
    return out;
  }
  std::size_t tried = 0;
  bool found = search_quadric(phi, v.witness, opts, tried, [&](const Vec& c) { return accept(to_x(c)); });
  if (!found) out.outcome = SearchOutcome::kBudgetExhausted;
  return out;
}

}  // namespace albertkit
