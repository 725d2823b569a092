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

#ifndef ALBERTKIT_ALBERTKIT_H_
#define ALBERTKIT_ALBERTKIT_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AK_API __declspec(dllexport)
#else
#define AK_API __attribute__((visibility("default")))
#endif

/* Status codes. Every entry point returns one of these; AK_OK is 0. */
enum {
  AK_OK = 0,
  AK_PARSE = 1,
  AK_NOT_ETALE = 2,
  AK_NOT_A_FIELD = 3,
  AK_NO_SOLUTION = 4,
  AK_DIMENSION_MISMATCH = 5,
  AK_DEPENDENT_BASIS = 6,
  AK_BUDGET_EXHAUSTED = 7,
  AK_NOT_ISOTROPIC = 8,
  AK_ORACLE_INCOMPLETE = 9,
  AK_INTERNAL_CONTRADICTION = 10,
  AK_SPLIT_K = 11,
  AK_ZERO_PARAMETER = 12,
  AK_VALUE_NOT_IN_F = 13,
  AK_IDENTITY_FAILS = 14,
  AK_RELATION_VIOLATION = 15,
  AK_RANK_DEFICIENT = 16,
  AK_DIMENSION_CAP = 17,
  AK_INVALID_WITNESS = 18,
  AK_UNKNOWN_FAMILY = 19,
  AK_MALFORMED_CERTIFICATE = 20,
  AK_NOT_APPLICABLE = 21,
  AK_DIVISION_BY_ZERO = 22,
  AK_UNSUPPORTED = 23,
  AK_NO_SOLUTION_PROVEN = 24,
  AK_PRECONDITION = 25,
  AK_INVALID_ARGUMENT = 98,
  AK_INTERNAL = 99
};

typedef struct ak_form ak_form;             /* quadratic form over a field */
typedef struct ak_quaternion ak_quaternion; /* quaternion algebra (E/K, a) over K/F */

AK_API const char* ak_version(void);
AK_API const char* ak_status_name(int status);
/* Message of the last failure on the calling thread; valid until the next call. */
AK_API const char* ak_last_error(void);
/* Frees any string returned through a char** out-parameter. */
AK_API void ak_string_free(char* s);

/* Options are JSON objects {"max_height":..,"budget":..,"enumeration_cap":..}; NULL means defaults. */

/* {"field": "Q", "diag": ["1","1"]} or {"field": "Q(t)", "upper": [["1","2"],["0","3"]]} */
AK_API int ak_form_from_json(const char* json, ak_form** out);
AK_API void ak_form_free(ak_form* form);
AK_API int ak_form_to_json(const ak_form* form, char** out_json);
/* Verdict, witness and method. */
AK_API int ak_form_isotropy(const ak_form* form, const char* options, char** out_json);
/* Radical, hyperbolic planes and anisotropic kernel, exactly re-verified. */
AK_API int ak_form_witt(const ak_form* form, const char* options, char** out_json);
/* Isotropic basis of a regular isotropic form. */
AK_API int ak_form_isotropic_basis(const ak_form* form, const char* options, char** out_json);
/* s_* of a form over a quadratic field extension K/F. */
AK_API int ak_form_transfer(const ak_form* form, ak_form** out);
/* psi over F with dim psi = Witt index of the transfer and psi_K a subform. */
AK_API int ak_form_descend(const ak_form* form, const char* options, char** out_json);
/* command "build" (structure constants) or "arf". */
AK_API int ak_form_clifford(const ak_form* form, const char* command, char** out_json);

/* {"ext": "Q/x^2-2", "a": "-1", "E": {"alpha": "0", "beta": "-1"}} */
AK_API int ak_quaternion_from_json(const char* json, ak_quaternion** out);
AK_API void ak_quaternion_free(ak_quaternion* q);
/* command "nrd" (argument: JSON array of 4 coordinates), "split", "subalg" (argument:
   {"etale": true|false}) or "embed" (argument: {"p": .., "q": ..}). */
AK_API int ak_quaternion_command(const ak_quaternion* q, const char* command, const char* argument,
                                 const char* options, char** out_json);
/* command "build", "albert", "fcheck" or "division". */
AK_API int ak_corestriction_command(const ak_quaternion* q, const char* command, int with_structure,
                                    const char* options, char** out_json);

/* Instances and certificates; JSON carries the schema tag "albertkit/1". */
AK_API int ak_instance_generate(const char* family, uint64_t seed, char** out_json);
AK_API int ak_instance_named(const char* name, char** out_json);
/* exit_code: 0 consistent and complete, 2 inconsistent, 3 unknown verdicts present. */
AK_API int ak_check(const char* instance_json, int transfer_path, char** report_json, int* exit_code);
/* ok receives 1 when every witness in the report re-verifies; why explains a rejection. */
AK_API int ak_verify(const char* report_json, int* ok, char** why);

#ifdef __cplusplus
}
#endif

#endif /* ALBERTKIT_ALBERTKIT_H_ */
