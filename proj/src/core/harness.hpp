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

#ifndef ALBERTKIT_CORE_HARNESS_HPP_
#define ALBERTKIT_CORE_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "albert.hpp"

namespace albertkit {

inline constexpr const char* kSchema = "albertkit/1";

// The data (F, K, Q): K is parsed from k_spec, F is its base, Q = (E/K, a) with
// E = K[e]/(e^2 - alpha e - beta).
struct Instance {
  std::string name;
  std::string family;
  std::uint64_t seed = 0;
  std::string k_spec;
  std::string e_alpha, e_beta, a;
  OracleOptions opts;
};

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);  // throws kMalformedCertificate
Quat build_quaternion(const Instance& inst);

const std::vector<std::string>& instance_families();
Instance generate_instance(const std::string& family, std::uint64_t seed);  // throws kUnknownFamily
// "hamilton-q-sqrt2", "hamilton-pair-q", "biquaternion-qt-division"
const std::vector<std::string>& named_instances();
Instance named_instance(const std::string& name);

enum class Status { kYes, kNoProven, kUnknown };
const char* status_name(Status s);

struct ConditionResult {
  Status status = Status::kUnknown;
  std::string method;
  Vec witness;  // quaternion element for (i)/(ii); Albert coordinates for (iii)
};

struct EquivalenceReport {
  Instance inst;
  Elem kappa;
  ConditionResult cond_i, cond_ii, cond_iii;
  std::optional<Vec> derived_iii_from_i;  // isotropic Albert coordinates from the (i) witness
  std::optional<Vec> derived_ii_from_iii; // separable witness from the isotropic vector
  std::optional<ConditionResult> transfer_path;
  bool consistent = true;
  std::vector<std::string> notes;
};

struct CheckOptions {
  bool transfer_path = false;
};
EquivalenceReport check_equivalence(const Instance& inst, const CheckOptions& copts = {});

// 0 consistent and complete, 2 inconsistent, 3 Unknown present.
int exit_code(const EquivalenceReport& r);

nlohmann::json report_to_json(const EquivalenceReport& r);
// Re-verifies every witness and negative verdict in a report; never trusts method tags.
bool verify_certificate(const nlohmann::json& report, std::string* why = nullptr);

std::string sha256_hex(const std::string& data);

}  // namespace albertkit

#endif  // ALBERTKIT_CORE_HARNESS_HPP_
