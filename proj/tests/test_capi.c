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

/* Exercises the public header from plain C. */

#include <albertkit/albertkit.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main(void) {
  ak_form* form = NULL;
  ak_form* transferred = NULL;
  ak_quaternion* q = NULL;
  char* out = NULL;
  char* report = NULL;
  char* why = NULL;
  int code = -1, ok = 0;

  EXPECT(ak_version() != NULL);
  EXPECT(strcmp(ak_status_name(AK_SPLIT_K), ak_status_name(AK_OK)) != 0);

  EXPECT(ak_form_from_json("{\"field\": \"Q\", \"diag\": [\"1\", \"-1\"]}", &form) == AK_OK);
  EXPECT(ak_form_isotropy(form, NULL, &out) == AK_OK);
  EXPECT(out && strstr(out, "\"Isotropic\"") != NULL);
  ak_string_free(out);
  out = NULL;
  ak_form_free(form);
  form = NULL;

  EXPECT(ak_form_from_json("{\"field\": \"Q/x^2-2\", \"diag\": [\"1\"]}", &form) == AK_OK);
  EXPECT(ak_form_transfer(form, &transferred) == AK_OK);
  EXPECT(ak_form_to_json(transferred, &out) == AK_OK);
  EXPECT(out && strstr(out, "\"2\"") != NULL);
  ak_string_free(out);
  out = NULL;
  ak_form_free(transferred);
  ak_form_free(form);
  form = NULL;

  EXPECT(ak_form_from_json("{\"field\": \"Q/split\", \"diag\": [\"1\"]}", &form) == AK_OK);
  EXPECT(ak_form_transfer(form, &transferred) == AK_SPLIT_K);
  EXPECT(strlen(ak_last_error()) > 0);
  ak_form_free(form);
  form = NULL;

  EXPECT(ak_form_from_json("{not json", &form) != AK_OK);
  EXPECT(form == NULL);
  EXPECT(ak_form_isotropy(NULL, NULL, &out) == AK_INVALID_ARGUMENT);

  EXPECT(ak_quaternion_from_json(
             "{\"ext\": \"Q/x^2-2\", \"a\": \"-1\", \"E\": {\"alpha\": \"0\", \"beta\": \"-1\"}}", &q) == AK_OK);
  EXPECT(ak_quaternion_command(q, "nrd", "[\"1\", \"1\", \"0\", \"0\"]", NULL, &out) == AK_OK);
  EXPECT(out && strstr(out, "\"2\"") != NULL);
  ak_string_free(out);
  out = NULL;
  EXPECT(ak_corestriction_command(q, "division", 0, NULL, &out) == AK_OK);
  ak_string_free(out);
  out = NULL;
  ak_quaternion_free(q);

  EXPECT(ak_instance_generate("no-such-family", 1, &out) == AK_UNKNOWN_FAMILY);
  EXPECT(ak_instance_named("hamilton-q-sqrt2", &out) == AK_OK);
  EXPECT(ak_check(out, 0, &report, &code) == AK_OK);
  EXPECT(code == 0);
  EXPECT(ak_verify(report, &ok, &why) == AK_OK);
  EXPECT(ok == 1);
  ak_string_free(why);
  ak_string_free(report);
  ak_string_free(out);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
