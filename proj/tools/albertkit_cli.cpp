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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "albertkit/albertkit.h"

using nlohmann::json;

namespace {

struct Failure {
  int status;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) {
    std::cerr << "albertkit: cannot read " << path << "\n";
    throw Failure{AK_INVALID_ARGUMENT};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check(int status) {
  if (status == AK_OK) return;
  std::cerr << "albertkit: " << ak_status_name(status) << ": " << ak_last_error() << "\n";
  throw Failure{status};
}

std::string take(char* s) {
  std::string out(s == nullptr ? "" : s);
  ak_string_free(s);
  return out;
}

bool g_compact = false;

void print(const std::string& text) {
  json j = json::parse(text);
  std::cout << (g_compact ? j.dump() : j.dump(2)) << "\n";
}

const char* opt_or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

struct FormHandle {
  ak_form* f = nullptr;
  explicit FormHandle(const std::string& path) { check(ak_form_from_json(read_input(path).c_str(), &f)); }
  ~FormHandle() { ak_form_free(f); }
};

// Accepts either a quaternion spec or an instance file.
std::string quaternion_spec_from(const std::string& text) {
  json j = json::parse(text);
  if (j.contains("ext")) return j.dump();
  return json{{"ext", j.at("K")}, {"a", j.at("Q").at("a")}, {"E", j.at("Q").at("E")}}.dump();
}

struct QuatHandle {
  ak_quaternion* q = nullptr;
  explicit QuatHandle(const std::string& path) {
    check(ak_quaternion_from_json(quaternion_spec_from(read_input(path)).c_str(), &q));
  }
  ~QuatHandle() { ak_quaternion_free(q); }
};

int worse(int a, int b) {
  auto rank = [](int c) { return c == 2 ? 3 : c == 3 ? 2 : c == 0 ? 0 : 1; };
  return rank(b) > rank(a) ? b : a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"albertkit: quadratic forms, transfers, quaternion algebras and corestrictions"};
  app.require_subcommand(1);
  app.add_flag("--json", g_compact, "Compact single-line JSON output");
  std::string options;
  app.add_option("--oracle", options, "Oracle options as JSON: {\"max_height\":..,\"budget\":..}");

  std::string form_path;
  auto* iso = app.add_subcommand("isotropy", "Decide isotropy of a form");
  iso->add_option("--form", form_path, "Form JSON file ('-' for stdin)")->required();
  bool witt = false, basis = false;
  iso->add_flag("--witt", witt, "Print the Witt decomposition instead");
  iso->add_flag("--basis", basis, "Print an isotropic basis instead");

  auto* tr = app.add_subcommand("transfer", "Transfer a form over K/F down to F");
  tr->add_option("--form", form_path, "Form JSON file")->required();

  auto* de = app.add_subcommand("descend", "Descend the isotropic part of a transfer");
  de->add_option("--form", form_path, "Form JSON file")->required();

  std::string spec_path, cmd, element, p_value, q_value;
  bool etale = false;
  auto* qu = app.add_subcommand("quat", "Quaternion algebra commands");
  qu->add_option("--spec", spec_path, "Quaternion spec JSON file")->required();
  qu->add_option("--cmd", cmd, "nrd | split | subalg | embed")->required()->check(
      CLI::IsMember({"nrd", "split", "subalg", "embed"}));
  qu->add_option("--element", element, "Element as a JSON array of 4 coordinates (nrd)");
  qu->add_flag("--etale", etale, "Require an etale subalgebra (subalg)");
  qu->add_option("--p", p_value, "Trace for embed");
  qu->add_option("--q", q_value, "Norm for embed");

  std::string instance_path;
  bool structure = false;
  auto* co = app.add_subcommand("cor", "Corestriction and Albert form commands");
  co->add_option("--instance", instance_path, "Instance or quaternion spec JSON file")->required();
  co->add_option("--cmd", cmd, "build | albert | fcheck | division")->required()->check(
      CLI::IsMember({"build", "albert", "fcheck", "division"}));
  co->add_flag("--structure", structure, "Include structure constants (build)");

  auto* cl = app.add_subcommand("clifford", "Clifford algebra of a form");
  cl->add_option("--form", form_path, "Form JSON file")->required();
  cl->add_option("--cmd", cmd, "build | arf")->required()->check(CLI::IsMember({"build", "arf"}));

  std::string named, family, path, out_path;
  std::uint64_t seed = 1;
  int count = 1;
  auto* ch = app.add_subcommand("check", "Check the equivalence of the three conditions");
  ch->add_option("--instance", instance_path, "Instance JSON file");
  ch->add_option("--named", named, "Named instance");
  ch->add_option("--family", family, "Instance family ('all' for every family)");
  ch->add_option("--seed", seed, "First seed");
  ch->add_option("--count", count, "Number of seeds per family")->check(CLI::PositiveNumber);
  ch->add_option("--path", path, "Extra cross-check route")->check(CLI::IsMember({"transfer"}));
  ch->add_option("--out", out_path, "Write the report(s) to this file");

  auto* ge = app.add_subcommand("gen", "Generate an instance");
  ge->add_option("--family", family, "Instance family")->required();
  ge->add_option("--seed", seed, "Seed");

  std::string report_path;
  auto* ve = app.add_subcommand("verify", "Re-verify a report or a batch of reports");
  ve->add_option("--report", report_path, "Report JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const char* opts = opt_or_null(options);
    char* out = nullptr;
    if (iso->parsed()) {
      FormHandle f(form_path);
      if (witt)
        check(ak_form_witt(f.f, opts, &out));
      else if (basis)
        check(ak_form_isotropic_basis(f.f, opts, &out));
      else
        check(ak_form_isotropy(f.f, opts, &out));
      print(take(out));
    } else if (tr->parsed()) {
      FormHandle f(form_path);
      ak_form* t = nullptr;
      check(ak_form_transfer(f.f, &t));
      int st = ak_form_to_json(t, &out);
      ak_form_free(t);
      check(st);
      print(take(out));
    } else if (de->parsed()) {
      FormHandle f(form_path);
      check(ak_form_descend(f.f, opts, &out));
      print(take(out));
    } else if (qu->parsed()) {
      QuatHandle q(spec_path);
      std::string arg;
      if (cmd == "nrd") arg = element;
      if (cmd == "subalg") arg = json{{"etale", etale}}.dump();
      if (cmd == "embed") arg = json{{"p", p_value}, {"q", q_value}}.dump();
      check(ak_quaternion_command(q.q, cmd.c_str(), opt_or_null(arg), opts, &out));
      print(take(out));
    } else if (co->parsed()) {
      QuatHandle q(instance_path);
      check(ak_corestriction_command(q.q, cmd.c_str(), structure ? 1 : 0, opts, &out));
      print(take(out));
    } else if (cl->parsed()) {
      FormHandle f(form_path);
      check(ak_form_clifford(f.f, cmd.c_str(), &out));
      print(take(out));
    } else if (ge->parsed()) {
      check(ak_instance_generate(family.c_str(), seed, &out));
      print(take(out));
    } else if (ch->parsed()) {
      std::vector<std::string> instances;
      if (!instance_path.empty()) {
        instances.push_back(read_input(instance_path));
      } else if (!named.empty()) {
        check(ak_instance_named(named.c_str(), &out));
        instances.push_back(take(out));
      } else if (!family.empty()) {
        std::vector<std::string> fams{family};
        if (family == "all")
          fams = {"split-K-over-Q", "quad-K-over-Q", "split-K-over-Qt", "char2-finite", "char2-function-field"};
        for (const auto& fam : fams)
          for (int i = 0; i < count; ++i) {
            check(ak_instance_generate(fam.c_str(), seed + static_cast<std::uint64_t>(i), &out));
            instances.push_back(take(out));
          }
      } else {
        std::cerr << "albertkit: check needs --instance, --named or --family\n";
        return 1;
      }
      int code = 0;
      json reports = json::array();
      for (const auto& inst : instances) {
        int ec = 0;
        check(ak_check(inst.c_str(), path == "transfer" ? 1 : 0, &out, &ec));
        reports.push_back(json::parse(take(out)));
        code = worse(code, ec);
      }
      json result = reports.size() == 1 ? reports[0] : json{{"schema", "albertkit/1"}, {"reports", reports}};
      if (!out_path.empty()) {
        std::ofstream o(out_path);
        o << result.dump(2) << "\n";
        std::size_t counts[4] = {0, 0, 0, 0};
        for (const auto& r : reports) counts[r.at("exit_code").get<int>()]++;
        std::cout << reports.size() << " instance(s): " << counts[0] << " consistent, " << counts[2]
                  << " inconsistent, " << counts[3] << " with unknown verdicts\n";
      } else {
        std::cout << (g_compact ? result.dump() : result.dump(2)) << "\n";
      }
      return code;
    } else if (ve->parsed()) {
      json j = json::parse(read_input(report_path));
      std::vector<json> reports;
      if (j.contains("reports"))
        for (const auto& r : j.at("reports")) reports.push_back(r);
      else
        reports.push_back(j);
      int rejected = 0;
      for (const auto& r : reports) {
        int ok = 0;
        char* why = nullptr;
        check(ak_verify(r.dump().c_str(), &ok, &why));
        std::string reason = take(why);
        if (!ok) {
          ++rejected;
          std::cout << "rejected: " << reason << "\n";
        }
      }
      std::cout << reports.size() - rejected << "/" << reports.size() << " report(s) verified\n";
      return rejected == 0 ? 0 : 1;
    }
  } catch (const Failure& f) {
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "albertkit: invalid JSON: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
