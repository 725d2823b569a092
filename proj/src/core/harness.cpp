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

#include "harness.hpp"

#include <openssl/evp.h>

#include <array>
#include <random>

#include "transfer.hpp"

namespace albertkit {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedCertificate, what); }

std::string get_string(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) malformed(std::string("missing string field ") + key);
  return j.at(key).get<std::string>();
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.str());
  return a;
}

Vec json_vec(const Field& f, const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) malformed("witness has the wrong length");
  Vec v;
  for (const auto& e : j) {
    if (!e.is_string()) malformed("witness entries must be strings");
    v.push_back(parse_elem(f, e.get<std::string>()));
  }
  return v;
}

long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long long nonzero(std::mt19937_64& rng, long long bound) {
  long long v = 0;
  while (v == 0) v = pick(rng, -bound, bound);
  return v;
}

std::string signed_term(long long c, const std::string& sym) {
  if (c == 0) return "";
  return (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + "*" + sym;
}

std::string monomial_slot(std::mt19937_64& rng) {
  static const std::array<int, 8> coeffs{1, -1, 2, -2, 3, -3, 5, -5};
  std::string c = std::to_string(coeffs[rng() % coeffs.size()]);
  return rng() % 2 ? c + "*t" : c;
}

std::string f2t_poly(std::mt19937_64& rng, bool nonzero_required) {
  static const std::array<const char*, 6> polys{"0", "1", "t", "t+1", "t^2", "t^2+1"};
  std::size_t lo = nonzero_required ? 1 : 0;
  return polys[lo + rng() % (polys.size() - lo)];
}

Status outcome_status(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kFound: return Status::kYes;
    case SearchOutcome::kProvenNone: return Status::kNoProven;
    default: return Status::kUnknown;
  }
}

Status verdict_status(Verdict v) {
  switch (v) {
    case Verdict::kIsotropic: return Status::kYes;
    case Verdict::kAnisotropic: return Status::kNoProven;
    default: return Status::kUnknown;
  }
}

Status parse_status(const std::string& s) {
  if (s == "yes") return Status::kYes;
  if (s == "no-proven") return Status::kNoProven;
  if (s == "unknown") return Status::kUnknown;
  malformed("unknown status " + s);
}

bool statuses_agree(const std::vector<Status>& all) {
  bool yes = false, no = false;
  for (Status s : all) {
    yes |= s == Status::kYes;
    no |= s == Status::kNoProven;
  }
  return !(yes && no);
}

bool nilpotent_ok(const AlbertData& d, const Vec& coords) {
  if (is_zero_vec(coords) || !d.form.eval(coords).is_zero()) return false;
  M2 m = f_map(d, d.xi_from(coords));
  return !m2_is_zero(m) && m2_is_zero(m2_mul(*d.tensor, m, m));
}

ConditionResult transfer_route(const Quat& q, const OracleOptions& opts) {
  ConditionResult r;
  QuadraticForm nq = q->norm_form();
  DescentResult dr = descend(nq, opts);
  if (dr.transfer_witt_index < 2) {
    r.status = Status::kNoProven;
    r.method = "transfer-witt-index=" + std::to_string(dr.transfer_witt_index);
    return r;
  }
  // a nonsingular binary subform a x^2 + b xy + c y^2 of psi names L = F[X]/(X^2 - bX + ac)
  const QuadraticForm& psi = dr.psi;
  for (std::size_t i = 0; i < psi.dim(); ++i)
    for (std::size_t j = i + 1; j < psi.dim(); ++j) {
      const Elem& b = psi.coeff(i, j);
      if (b.is_zero()) continue;
      Elem a = psi.coeff(i, i), c = psi.coeff(j, j);
      auto emb = embed_quadratic_algebra(*q, b, a * c, opts);
      if (emb.outcome != SearchOutcome::kFound) continue;
      if (!validate_witness(*q, emb.x, false).ok) continue;
      r.status = Status::kYes;
      r.method = "transfer-descent-embedding";
      r.witness = emb.x;
      return r;
    }
  r.method = "transfer-descent: no embedding found within budget";
  return r;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::kYes: return "yes";
    case Status::kNoProven: return "no-proven";
    default: return "unknown";
  }
}

json instance_to_json(const Instance& inst) {
  Field k = parse_field(inst.k_spec);
  const EtaleQuadratic* ext = as_ext(k);
  return json{{"schema", kSchema},
              {"name", inst.name},
              {"family", inst.family},
              {"seed", inst.seed},
              {"F", ext != nullptr ? ext->base()->spec() : std::string()},
              {"K", inst.k_spec},
              {"Q", {{"E", {{"alpha", inst.e_alpha}, {"beta", inst.e_beta}}}, {"a", inst.a}}},
              {"oracle",
               {{"max_height", inst.opts.max_height},
                {"budget", inst.opts.budget},
                {"enumeration_cap", inst.opts.enumeration_cap}}}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) malformed("instance must be an object");
  if (j.contains("schema") && j.at("schema") != kSchema) malformed("unsupported schema");
  Instance inst;
  inst.k_spec = get_string(j, "K");
  if (j.contains("name")) inst.name = get_string(j, "name");
  if (j.contains("family")) inst.family = get_string(j, "family");
  if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
  if (!j.contains("Q")) malformed("missing Q");
  const json& q = j.at("Q");
  inst.a = get_string(q, "a");
  if (!q.contains("E")) malformed("missing Q.E");
  inst.e_alpha = get_string(q.at("E"), "alpha");
  inst.e_beta = get_string(q.at("E"), "beta");
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    if (o.contains("max_height")) inst.opts.max_height = o.at("max_height").get<int>();
    if (o.contains("budget")) inst.opts.budget = o.at("budget").get<std::size_t>();
    if (o.contains("enumeration_cap")) inst.opts.enumeration_cap = o.at("enumeration_cap").get<std::size_t>();
  }
  if (j.contains("F")) {
    Field k = parse_field(inst.k_spec);
    const EtaleQuadratic* ext = as_ext(k);
    if (ext == nullptr || ext->base()->spec() != get_string(j, "F")) malformed("F does not match the base of K");
  }
  return inst;
}

Quat build_quaternion(const Instance& inst) {
  Field k = parse_field(inst.k_spec);
  if (as_ext(k) == nullptr) throw Error(ErrorCode::kPrecondition, "K must be a quadratic etale algebra over F");
  return QuaternionAlgebra::make(k, parse_elem(k, inst.e_alpha), parse_elem(k, inst.e_beta), parse_elem(k, inst.a));
}

const std::vector<std::string>& instance_families() {
  static const std::vector<std::string> f{"split-K-over-Q", "quad-K-over-Q", "split-K-over-Qt", "char2-finite",
                                          "char2-function-field"};
  return f;
}

Instance generate_instance(const std::string& family, std::uint64_t seed) {
  const auto& fams = instance_families();
  std::size_t idx = 0;
  while (idx < fams.size() && fams[idx] != family) ++idx;
  if (idx == fams.size()) throw Error(ErrorCode::kUnknownFamily, "unknown family " + family);
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + idx);
  Instance inst;
  inst.family = family;
  inst.seed = seed;
  inst.name = family + "#" + std::to_string(seed);
  auto pair = [](const std::string& x, const std::string& y) { return "[" + x + "," + y + "]"; };
  for (;;) {
    if (family == "split-K-over-Q") {
      inst.k_spec = "Q/split";
      inst.e_alpha = "[0,0]";
      inst.e_beta = pair(std::to_string(nonzero(rng, 10)), std::to_string(nonzero(rng, 10)));
      inst.a = pair(std::to_string(nonzero(rng, 10)), std::to_string(nonzero(rng, 10)));
    } else if (family == "quad-K-over-Q") {
      static const std::array<int, 11> ds{-7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10};
      int d = ds[rng() % ds.size()];
      inst.k_spec = d < 0 ? "Q/x^2+" + std::to_string(-d) : "Q/x^2-" + std::to_string(d);
      auto elem = [&](long long bound, long long wbound) {
        return std::to_string(pick(rng, -bound, bound)) + signed_term(pick(rng, -wbound, wbound), "w");
      };
      inst.e_alpha = elem(3, 1);
      inst.e_beta = elem(10, 3);
      inst.a = elem(10, 3);
    } else if (family == "split-K-over-Qt") {
      inst.k_spec = "Q(t)/split";
      inst.opts.budget = 20000;
      inst.e_alpha = "[0,0]";
      inst.e_beta = pair(monomial_slot(rng), monomial_slot(rng));
      inst.a = pair(monomial_slot(rng), monomial_slot(rng));
    } else if (family == "char2-finite") {
      bool big = rng() % 2;
      inst.k_spec = big ? "F(4)/x^2+x+g" : "F(2)/x^2+x+1";
      std::vector<std::string> base = big ? std::vector<std::string>{"0", "1", "g", "g+1"}
                                          : std::vector<std::string>{"0", "1"};
      auto elem = [&] { return "(" + base[rng() % base.size()] + ")+(" + base[rng() % base.size()] + ")*w"; };
      inst.e_alpha = elem();
      inst.e_beta = elem();
      inst.a = elem();
    } else {
      inst.k_spec = "F(2)(t)/x^2+x+t";
      inst.opts.budget = 20000;
      static const std::array<const char*, 3> alphas{"1", "t", "t+1"};
      inst.e_alpha = alphas[rng() % alphas.size()];
      inst.e_beta = f2t_poly(rng, false);
      inst.a = "(" + f2t_poly(rng, false) + ")+(" + f2t_poly(rng, false) + ")*w";
    }
    try {
      build_quaternion(inst);
      return inst;
    } catch (const Error&) {
      // inseparable E or a = 0: draw again
    }
  }
}

const std::vector<std::string>& named_instances() {
  static const std::vector<std::string> n{"hamilton-q-sqrt2", "hamilton-pair-q", "biquaternion-qt-division"};
  return n;
}

Instance named_instance(const std::string& name) {
  Instance inst;
  inst.name = name;
  inst.family = "named";
  if (name == "hamilton-q-sqrt2") {
    inst.k_spec = "Q/x^2-2";
    inst.e_alpha = "0";
    inst.e_beta = "-1";
    inst.a = "-1";
  } else if (name == "hamilton-pair-q") {
    inst.k_spec = "Q/split";
    inst.e_alpha = "[0,0]";
    inst.e_beta = "[-1,-1]";
    inst.a = "[-1,-1]";
  } else if (name == "biquaternion-qt-division") {
    inst.k_spec = "Q(t)/split";
    inst.e_alpha = "[0,0]";
    inst.e_beta = "[-1,t]";
    inst.a = "[-1,2]";
  } else {
    throw Error(ErrorCode::kUnknownFamily, "unknown named instance " + name);
  }
  return inst;
}

EquivalenceReport check_equivalence(const Instance& inst, const CheckOptions& copts) {
  EquivalenceReport r;
  r.inst = inst;
  Quat q = build_quaternion(inst);
  AlbertData d = albert_form(q);
  r.kappa = d.kappa;
  auto guarded = [&](ConditionResult& out, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      out.status = Status::kUnknown;
      out.method = std::string("error: ") + error_code_name(e.code());
      r.notes.push_back(e.what());
    }
  };
  guarded(r.cond_i, [&] {
    auto s = find_disjoint_quadratic_subalgebra(q, false, inst.opts);
    r.cond_i = {outcome_status(s.outcome), s.method, s.x};
  });
  guarded(r.cond_ii, [&] {
    auto s = find_disjoint_quadratic_subalgebra(q, true, inst.opts);
    r.cond_ii = {outcome_status(s.outcome), s.method, s.x};
  });
  guarded(r.cond_iii, [&] {
    auto v = cor_is_division(d, inst.opts);
    r.cond_iii = {verdict_status(v.albert), v.method, v.coords};
  });
  std::vector<Status> direct{r.cond_i.status, r.cond_ii.status, r.cond_iii.status};

  if (r.cond_i.status == Status::kYes) {
    try {
      auto iv = generator_to_isotropic(d, r.cond_i.witness);
      r.derived_iii_from_i = iv.coords;
      if (r.cond_iii.status == Status::kUnknown) r.cond_iii = {Status::kYes, "derived: generator to isotropic", iv.coords};
    } catch (const Error& e) {
      r.consistent = false;
      r.notes.push_back(std::string("(i) => (iii) conversion failed: ") + e.what());
    }
  }
  if (r.cond_iii.status == Status::kYes) {
    auto g = isotropic_to_generator(d, r.cond_iii.witness, inst.opts);
    if (g.outcome == SearchOutcome::kFound) {
      r.derived_ii_from_iii = g.x;
      if (r.cond_ii.status == Status::kUnknown) r.cond_ii = {Status::kYes, "derived: isotropic to generator", g.x};
    } else {
      r.notes.push_back("(iii) => (ii) conversion exhausted its budget");
    }
  }
  if (r.cond_ii.status == Status::kYes && r.cond_i.status == Status::kUnknown)
    r.cond_i = {Status::kYes, "derived: separable witness", r.cond_ii.witness};

  std::vector<Status> all{r.cond_i.status, r.cond_ii.status, r.cond_iii.status};
  if (copts.transfer_path) {
    ConditionResult tp;
    guarded(tp, [&] {
      if (!q->base()->is_field()) throw Error(ErrorCode::kNotApplicable, "transfer route needs K a field");
      tp = transfer_route(q, inst.opts);
    });
    r.transfer_path = tp;
    all.push_back(tp.status);
  }
  r.consistent = r.consistent && statuses_agree(direct) && statuses_agree(all);
  return r;
}

int exit_code(const EquivalenceReport& r) {
  if (!r.consistent) return 2;
  for (Status s : {r.cond_i.status, r.cond_ii.status, r.cond_iii.status})
    if (s == Status::kUnknown) return 3;
  return 0;
}

namespace {

json condition_json(const ConditionResult& c) {
  json j{{"status", status_name(c.status)}, {"method", c.method}};
  if (c.status == Status::kYes) j["witness"] = vec_json(c.witness);
  return j;
}

json payload_of(const EquivalenceReport& r) {
  json j{{"schema", kSchema},
         {"instance", instance_to_json(r.inst)},
         {"kappa", r.kappa.str()},
         {"conditions", {{"i", condition_json(r.cond_i)}, {"ii", condition_json(r.cond_ii)}, {"iii", condition_json(r.cond_iii)}}},
         {"consistent", r.consistent},
         {"exit_code", exit_code(r)},
         {"notes", r.notes}};
  json der = json::object();
  if (r.derived_iii_from_i) der["iii_from_i"] = vec_json(*r.derived_iii_from_i);
  if (r.derived_ii_from_iii) der["ii_from_iii"] = vec_json(*r.derived_ii_from_iii);
  j["derivations"] = der;
  if (r.transfer_path) j["transfer_path"] = condition_json(*r.transfer_path);
  return j;
}

}  // namespace

json report_to_json(const EquivalenceReport& r) {
  json j = payload_of(r);
  j["digest"] = sha256_hex(j.dump());
  return j;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::kInternal, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

bool verify_certificate(const json& report, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why != nullptr) *why = w;
    return false;
  };
  try {
    if (!report.is_object() || report.value("schema", "") != kSchema) return fail("schema mismatch");
    json body = report;
    std::string digest = get_string(body, "digest");
    body.erase("digest");
    if (sha256_hex(body.dump()) != digest) return fail("digest mismatch");

    Instance inst = instance_from_json(report.at("instance"));
    Quat q = build_quaternion(inst);
    AlbertData d = albert_form(q);
    if (get_string(report, "kappa") != d.kappa.str()) return fail("kappa mismatch");
    const json& conds = report.at("conditions");
    std::vector<Status> st;
    for (const char* key : {"i", "ii", "iii"}) {
      const json& c = conds.at(key);
      Status s = parse_status(get_string(c, "status"));
      st.push_back(s);
      std::string k(key);
      if (s == Status::kYes) {
        if (k == "iii") {
          if (!nilpotent_ok(d, json_vec(d.F(), c.at("witness"), 6))) return fail("(iii) witness is not isotropic");
        } else if (!validate_witness(*q, json_vec(q->base(), c.at("witness"), 4), k == "ii").ok) {
          return fail("(" + k + ") witness does not validate");
        }
      } else if (s == Status::kNoProven) {
        if (k == "iii") {
          if (isotropy(d.form, inst.opts).verdict != Verdict::kAnisotropic) return fail("(iii) anisotropy not confirmed");
        } else if (find_disjoint_quadratic_subalgebra(q, k == "ii", inst.opts).outcome != SearchOutcome::kProvenNone) {
          return fail("(" + k + ") negative verdict not confirmed");
        }
      }
    }
    const json& der = report.at("derivations");
    if (der.contains("iii_from_i") && !nilpotent_ok(d, json_vec(d.F(), der.at("iii_from_i"), 6)))
      return fail("derived (iii) vector is not isotropic");
    if (der.contains("ii_from_iii") && !validate_witness(*q, json_vec(q->base(), der.at("ii_from_iii"), 4), true).ok)
      return fail("derived (ii) witness does not validate");
    if (report.contains("transfer_path")) {
      const json& tp = report.at("transfer_path");
      Status s = parse_status(get_string(tp, "status"));
      st.push_back(s);
      if (s == Status::kYes && !validate_witness(*q, json_vec(q->base(), tp.at("witness"), 4), false).ok)
        return fail("transfer-route witness does not validate");
    }
    bool consistent = report.at("consistent").get<bool>();
    if (statuses_agree(st) != consistent && consistent) return fail("consistency flag contradicts the verdicts");
    return true;
  } catch (const Error& e) {
    return fail(e.what());
  } catch (const json::exception& e) {
    return fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace albertkit
