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

#include "albertkit/albertkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "clifford.hpp"
#include "harness.hpp"
#include "transfer.hpp"

using nlohmann::json;
namespace ak = albertkit;

struct ak_form {
  ak::QuadraticForm form;
};

struct ak_quaternion {
  ak::Quat q;
  std::string spec;
};

namespace {

thread_local std::string g_last_error;

struct BadArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
int guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return AK_OK;
  } catch (const ak::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const BadArgument& e) {
    g_last_error = e.what();
    return AK_INVALID_ARGUMENT;
  } catch (const json::exception& e) {
    g_last_error = std::string("invalid JSON: ") + e.what();
    return AK_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AK_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw BadArgument(std::string("null argument: ") + what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  require(out, "out");
  *out = dup_string(j.dump());
}

ak::OracleOptions parse_options(const char* text) {
  ak::OracleOptions o;
  if (text == nullptr || *text == '\0') return o;
  json j = json::parse(text);
  if (j.contains("max_height")) o.max_height = j.at("max_height").get<int>();
  if (j.contains("budget")) o.budget = j.at("budget").get<std::size_t>();
  if (j.contains("enumeration_cap")) o.enumeration_cap = j.at("enumeration_cap").get<std::size_t>();
  return o;
}

json vec_json(const ak::Vec& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.str());
  return a;
}

json mat_json(const ak::Mat& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(vec_json(r));
  return a;
}

json vecs_json(const std::vector<ak::Vec>& vs) { return mat_json(vs); }

ak::Vec parse_strings(const ak::Field& f, const json& j) {
  if (!j.is_array()) throw BadArgument("expected an array of element strings");
  ak::Vec v;
  for (const auto& e : j) v.push_back(ak::parse_elem(f, e.is_string() ? e.get<std::string>() : e.dump()));
  return v;
}

json form_json(const ak::QuadraticForm& f) {
  return json{{"field", f.field()->spec()}, {"dim", f.dim()}, {"upper", mat_json(f.upper())}};
}

json verdict_json(const ak::IsotropyVerdict& v) {
  json j{{"verdict", ak::verdict_name(v.verdict)}, {"method", v.method}};
  if (v.verdict == ak::Verdict::kIsotropic) j["witness"] = vec_json(v.witness);
  return j;
}

const char* outcome_name(ak::SearchOutcome o) {
  switch (o) {
    case ak::SearchOutcome::kFound: return "found";
    case ak::SearchOutcome::kProvenNone: return "proven-none";
    default: return "budget-exhausted";
  }
}

json m2_json(const ak::M2& m) {
  return json{{"a", vec_json(m.a)}, {"b", vec_json(m.b)}, {"c", vec_json(m.c)}, {"d", vec_json(m.d)}};
}

json albert_json(const ak::AlbertData& d) {
  json ys = json::array();
  for (const auto& y : d.y_basis) ys.push_back(vec_json(y));
  return json{{"kappa", d.kappa.str()}, {"y_basis", ys}, {"form", form_json(d.form)}};
}

}  // namespace

extern "C" {

const char* ak_version(void) { return "1.0.0"; }

const char* ak_status_name(int status) {
  if (status == AK_INVALID_ARGUMENT) return "InvalidArgument";
  return ak::error_code_name(static_cast<ak::ErrorCode>(status));
}

const char* ak_last_error(void) { return g_last_error.c_str(); }

void ak_string_free(char* s) { std::free(s); }

int ak_form_from_json(const char* text, ak_form** out) {
  return guard([&] {
    require(text, "json");
    require(out, "out");
    json j = json::parse(text);
    ak::Field f = ak::parse_field(j.at("field").get<std::string>());
    ak::QuadraticForm form;
    if (j.contains("diag")) {
      form = ak::QuadraticForm::diagonal(f, parse_strings(f, j.at("diag")));
    } else if (j.contains("upper")) {
      ak::Mat m;
      for (const auto& row : j.at("upper")) m.push_back(parse_strings(f, row));
      form = ak::QuadraticForm(f, m);
    } else {
      throw BadArgument("form needs \"diag\" or \"upper\"");
    }
    *out = new ak_form{std::move(form)};
  });
}

void ak_form_free(ak_form* form) { delete form; }

int ak_form_to_json(const ak_form* form, char** out) {
  return guard([&] {
    require(form, "form");
    emit(form_json(form->form), out);
  });
}

int ak_form_isotropy(const ak_form* form, const char* options, char** out) {
  return guard([&] {
    require(form, "form");
    auto v = ak::isotropy(form->form, parse_options(options));
    json j = verdict_json(v);
    j["form"] = form_json(form->form);
    emit(j, out);
  });
}

int ak_form_witt(const ak_form* form, const char* options, char** out) {
  return guard([&] {
    require(form, "form");
    auto w = ak::witt_decompose(form->form, parse_options(options));
    json planes = json::array();
    for (const auto& [e, f] : w.planes) planes.push_back(json{{"e", vec_json(e)}, {"f", vec_json(f)}});
    emit(json{{"witt_index", w.witt_index()},
              {"hyperbolic_count", w.hyperbolic_count()},
              {"radical_dim", w.radical_dim()},
              {"radical", vecs_json(w.radical)},
              {"hyperbolic_planes", planes},
              {"kernel_basis", vecs_json(w.kernel_basis)},
              {"kernel", form_json(w.kernel)},
              {"methods", w.methods},
              {"verified", ak::verify_witt_decomposition(form->form, w)}},
         out);
  });
}

int ak_form_isotropic_basis(const ak_form* form, const char* options, char** out) {
  return guard([&] {
    require(form, "form");
    auto basis = ak::isotropic_spanning_set(form->form, parse_options(options));
    emit(json{{"basis", vecs_json(basis)}}, out);
  });
}

int ak_form_transfer(const ak_form* form, ak_form** out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = new ak_form{ak::transfer(form->form)};
  });
}

int ak_form_descend(const ak_form* form, const char* options, char** out) {
  return guard([&] {
    require(form, "form");
    auto r = ak::descend(form->form, parse_options(options));
    json steps = json::array();
    for (const auto& s : r.steps) {
      json st{{"kind", s.kind}, {"u", vec_json(s.u)}, {"witt_index_before", s.witt_index_before}};
      if (!s.v.empty()) st["v"] = vec_json(s.v);
      if (!s.w.empty()) st["w"] = vec_json(s.w);
      steps.push_back(st);
    }
    ak::FormClass c = ak::classify(r.psi);
    emit(json{{"psi", form_json(r.psi)},
              {"embedding", vecs_json(r.embedding)},
              {"transfer_witt_index", r.transfer_witt_index},
              {"psi_nonsingular", c.nonsingular},
              {"psi_nondegenerate", c.nondegenerate},
              {"steps", steps},
              {"verified", ak::verify_descent(form->form, r)}},
         out);
  });
}

int ak_form_clifford(const ak_form* form, const char* command, char** out) {
  return guard([&] {
    require(form, "form");
    require(command, "command");
    std::string cmd(command);
    if (cmd == "build") {
      ak::CliffordAlgebra c(form->form);
      json table = json::array();
      const auto& s = c.structure();
      for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
          json terms = json::array();
          for (std::size_t k = 0; k < s.dim; ++k)
            if (!s.table[i][j][k].is_zero()) terms.push_back({k, s.table[i][j][k].str()});
          table.push_back({{"i", i}, {"j", j}, {"terms", terms}});
        }
      emit(json{{"dim", c.dim()}, {"basis", "monomials e_S indexed by bitmask S"}, {"products", table}}, out);
    } else if (cmd == "arf") {
      auto r = ak::arf_trivial(form->form);
      json j{{"trivial", r.trivial}, {"center_relation", {{"a", r.a.str()}, {"b", r.b.str()}}}};
      if (r.trivial) j["idempotent"] = vec_json(r.idempotent);
      emit(j, out);
    } else {
      throw BadArgument("clifford command must be build or arf");
    }
  });
}

int ak_quaternion_from_json(const char* text, ak_quaternion** out) {
  return guard([&] {
    require(text, "json");
    require(out, "out");
    json j = json::parse(text);
    ak::Field k = ak::parse_field(j.at("ext").get<std::string>());
    const json& e = j.at("E");
    auto q = ak::QuaternionAlgebra::make(k, ak::parse_elem(k, e.at("alpha").get<std::string>()),
                                         ak::parse_elem(k, e.at("beta").get<std::string>()),
                                         ak::parse_elem(k, j.at("a").get<std::string>()));
    *out = new ak_quaternion{q, j.dump()};
  });
}

void ak_quaternion_free(ak_quaternion* q) { delete q; }

int ak_quaternion_command(const ak_quaternion* q, const char* command, const char* argument, const char* options,
                          char** out) {
  return guard([&] {
    require(q, "quaternion");
    require(command, "command");
    std::string cmd(command);
    ak::OracleOptions opts = parse_options(options);
    const ak::QuaternionAlgebra& h = *q->q;
    json arg = argument != nullptr && *argument != '\0' ? json::parse(argument) : json();
    if (cmd == "nrd") {
      ak::Vec x = parse_strings(h.base(), arg);
      if (x.size() != 4) throw BadArgument("element needs 4 coordinates");
      emit(json{{"x", vec_json(x)}, {"nrd", h.nrd(x).str()}, {"trd", h.trd(x).str()},
                {"conjugate", vec_json(h.conjugate(x))}, {"norm_form", form_json(h.norm_form())}},
           out);
    } else if (cmd == "split") {
      auto s = ak::is_split(h, opts);
      json j{{"split", ak::verdict_name(s.verdict)}, {"method", s.method}};
      if (s.verdict == ak::Verdict::kIsotropic) j["zero_divisor"] = vec_json(s.zero_divisor);
      emit(j, out);
    } else if (cmd == "subalg") {
      bool etale = arg.is_object() && arg.value("etale", false);
      auto s = ak::find_disjoint_quadratic_subalgebra(q->q, etale, opts);
      json j{{"outcome", outcome_name(s.outcome)}, {"method", s.method}, {"etale_required", etale}};
      if (s.outcome == ak::SearchOutcome::kFound) {
        auto w = ak::validate_witness(h, s.x, etale);
        j["x"] = vec_json(s.x);
        j["trd"] = w.trd.str();
        j["nrd"] = w.nrd.str();
      }
      emit(j, out);
    } else if (cmd == "embed") {
      if (!arg.is_object()) throw BadArgument("embed needs {\"p\": .., \"q\": ..}");
      ak::Elem p = ak::parse_elem(h.base(), arg.at("p").get<std::string>());
      ak::Elem n = ak::parse_elem(h.base(), arg.at("q").get<std::string>());
      auto e = ak::embed_quadratic_algebra(h, p, n, opts);
      json j{{"outcome", outcome_name(e.outcome)}, {"method", e.method}};
      if (e.outcome == ak::SearchOutcome::kFound) j["x"] = vec_json(e.x);
      emit(j, out);
    } else {
      throw BadArgument("quaternion command must be nrd, split, subalg or embed");
    }
  });
}

int ak_corestriction_command(const ak_quaternion* q, const char* command, int with_structure, const char* options,
                             char** out) {
  return guard([&] {
    require(q, "quaternion");
    require(command, "command");
    std::string cmd(command);
    ak::OracleOptions opts = parse_options(options);
    if (cmd == "build") {
      auto cor = ak::corestriction(q->q);
      json j{{"dim", cor.basis.size()},
             {"associative", cor.algebra.is_associative()},
             {"unital", cor.algebra.is_unital()},
             {"scalar_extension_bijective", ak::scalar_extension_is_bijective(cor)}};
      const ak::EtaleQuadratic* ext = ak::as_ext(q->q->base());
      if (ext != nullptr && ext->is_split()) j["matches_split_product"] = ak::compare_with_split_product(cor).isomorphic;
      if (with_structure) {
        j["basis"] = vecs_json(cor.basis);
        json table = json::array();
        for (std::size_t i = 0; i < 16; ++i)
          for (std::size_t k = 0; k < 16; ++k) table.push_back(vec_json(cor.algebra.table[i][k]));
        j["structure_constants"] = table;
      }
      emit(j, out);
    } else if (cmd == "albert") {
      auto d = ak::albert_form(q->q);
      json j = albert_json(d);
      j["arf_trivial"] = ak::arf_trivial(d.form).trivial;
      emit(j, out);
    } else if (cmd == "fcheck") {
      auto d = ak::albert_form(q->q);
      auto r = ak::f_map_check(d);
      auto c = ak::clifford_iso_check(d);
      emit(json{{"identity_holds", r.identity_holds},
                {"entries_fixed", r.entries_fixed},
                {"polarization_holds", r.polarization_holds},
                {"checked", r.checked},
                {"interpretation", r.interpretation},
                {"clifford_image_rank", c.image_rank},
                {"even_part_diagonal", c.even_diagonal},
                {"odd_part_off_diagonal", c.odd_off_diagonal},
                {"image_in_fixed_algebra", c.image_fixed}},
           out);
    } else if (cmd == "division") {
      auto d = ak::albert_form(q->q);
      auto v = ak::cor_is_division(d, opts);
      json j{{"division", v.albert == ak::Verdict::kAnisotropic ? "yes"
                          : v.albert == ak::Verdict::kIsotropic ? "no"
                                                                : "unknown"},
             {"method", v.method},
             {"albert", albert_json(d)}};
      if (v.albert == ak::Verdict::kIsotropic) {
        j["isotropic_vector"] = vec_json(v.coords);
        j["y"] = vec_json(v.y);
        j["nilpotent"] = m2_json(v.nilpotent);
      }
      emit(j, out);
    } else {
      throw BadArgument("corestriction command must be build, albert, fcheck or division");
    }
  });
}

int ak_instance_generate(const char* family, uint64_t seed, char** out) {
  return guard([&] {
    require(family, "family");
    emit(ak::instance_to_json(ak::generate_instance(family, seed)), out);
  });
}

int ak_instance_named(const char* name, char** out) {
  return guard([&] {
    require(name, "name");
    emit(ak::instance_to_json(ak::named_instance(name)), out);
  });
}

int ak_check(const char* instance_json, int transfer_path, char** report_json, int* exit_code) {
  return guard([&] {
    require(instance_json, "instance");
    ak::Instance inst = ak::instance_from_json(json::parse(instance_json));
    ak::CheckOptions c;
    c.transfer_path = transfer_path != 0;
    auto r = ak::check_equivalence(inst, c);
    if (exit_code != nullptr) *exit_code = ak::exit_code(r);
    emit(ak::report_to_json(r), report_json);
  });
}

int ak_verify(const char* report_json, int* ok, char** why) {
  return guard([&] {
    require(report_json, "report");
    require(ok, "ok");
    std::string reason;
    json j;
    try {
      j = json::parse(report_json);
    } catch (const json::exception& e) {
      *ok = 0;
      if (why != nullptr) *why = dup_string(std::string("malformed JSON: ") + e.what());
      return;
    }
    *ok = ak::verify_certificate(j, &reason) ? 1 : 0;
    if (why != nullptr) *why = dup_string(reason);
  });
}

}  // extern "C"
