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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harness.hpp"

using namespace albertkit;
using nlohmann::json;

namespace {

json redigest(json j) {
  j.erase("digest");
  j["digest"] = sha256_hex(j.dump());
  return j;
}

}  // namespace

TEST_CASE("named instances reproduce their verdicts") {
  for (const std::string& name : named_instances()) {
    CAPTURE(name);
    EquivalenceReport r = check_equivalence(named_instance(name), {true});
    CHECK(exit_code(r) == 0);
    CHECK(r.consistent);
    Status expect = name == "biquaternion-qt-division" ? Status::kNoProven : Status::kYes;
    CHECK(r.cond_i.status == expect);
    CHECK(r.cond_ii.status == expect);
    CHECK(r.cond_iii.status == expect);
    json j = report_to_json(r);
    std::string why;
    CHECK_MESSAGE(verify_certificate(j, &why), why);
  }
  EquivalenceReport h = check_equivalence(named_instance("hamilton-q-sqrt2"));
  REQUIRE(h.derived_ii_from_iii.has_value());
  Quat q = build_quaternion(h.inst);
  CHECK(validate_witness(*q, *h.derived_ii_from_iii, true).ok);
}

TEST_CASE("generation is deterministic and covers all families") {
  CHECK(instance_families().size() == 5);
  for (const std::string& fam : instance_families()) {
    CAPTURE(fam);
    for (std::uint64_t seed : {1, 2, 3}) {
      Instance a = generate_instance(fam, seed), b = generate_instance(fam, seed);
      CHECK(instance_to_json(a) == instance_to_json(b));
      CHECK(instance_to_json(instance_from_json(instance_to_json(a))) == instance_to_json(a));
      EquivalenceReport r = check_equivalence(a);
      CHECK(exit_code(r) == 0);
      CHECK(report_to_json(r) == report_to_json(check_equivalence(b)));
    }
  }
  try {
    generate_instance("no-such-family", 1);
    FAIL("expected UnknownFamily");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownFamily);
  }
}

TEST_CASE("certificates reject tampering") {
  json j = report_to_json(check_equivalence(named_instance("hamilton-q-sqrt2")));
  REQUIRE(verify_certificate(j));
  json t = j;
  t["conditions"]["i"]["witness"][1] = "2";
  CHECK_FALSE(verify_certificate(t));  // digest no longer matches
  // a consistent digest does not rescue an invalid witness
  t["conditions"]["i"]["witness"][1] = "1+w";
  std::string why;
  CHECK_FALSE(verify_certificate(redigest(t), &why));
  CHECK_FALSE(why.empty());
  json u = j;
  u["conditions"]["iii"]["witness"][0] = "0";
  CHECK_FALSE(verify_certificate(redigest(u)));
  json v = j;
  v["conditions"]["iii"]["status"] = "no-proven";
  CHECK_FALSE(verify_certificate(redigest(v)));
  json w = j;
  w.erase("instance");
  CHECK_FALSE(verify_certificate(w));

  json d = report_to_json(check_equivalence(named_instance("biquaternion-qt-division")));
  REQUIRE(verify_certificate(d));
  // claiming a division algebra for a split one is caught by re-running the oracle
  json e = report_to_json(check_equivalence(named_instance("hamilton-pair-q")));
  e["conditions"]["iii"]["status"] = d["conditions"]["iii"]["status"];
  e["conditions"]["iii"]["method"] = d["conditions"]["iii"]["method"];
  e["conditions"]["iii"]["witness"] = json::array();
  CHECK_FALSE(verify_certificate(redigest(e)));
}

TEST_CASE("digest is SHA-256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
