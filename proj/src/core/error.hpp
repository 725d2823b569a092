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

#ifndef ALBERTKIT_CORE_ERROR_HPP_
#define ALBERTKIT_CORE_ERROR_HPP_

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace albertkit {

// Numeric values are part of the C ABI (see include/albertkit/albertkit.h).
enum class ErrorCode : int {
  kOk = 0,
  kParse = 1,
  kNotEtale = 2,
  kNotAField = 3,
  kNoSolution = 4,
  kDimensionMismatch = 5,
  kDependentBasis = 6,
  kBudgetExhausted = 7,
  kNotIsotropic = 8,
  kOracleIncomplete = 9,
  kInternalContradiction = 10,
  kSplitK = 11,
  kZeroParameter = 12,
  kValueNotInF = 13,
  kIdentityFails = 14,
  kRelationViolation = 15,
  kRankDeficient = 16,
  kDimensionCap = 17,
  kInvalidWitness = 18,
  kUnknownFamily = 19,
  kMalformedCertificate = 20,
  kNotApplicable = 21,
  kDivisionByZero = 22,
  kUnsupported = 23,
  kNoSolutionProven = 24,
  kPrecondition = 25,
  kInternal = 99,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void hard_fault(const char* file, int line, const char* expr) {
  std::fprintf(stderr, "%s:%d: albertkit invariant violated: %s\n", file, line, expr);
  std::abort();
}

}  // namespace albertkit

// Programmer errors (mixing contexts, out-of-range indices) abort.
#define AK_CHECK(x) \
  do { if (!(x)) ::albertkit::hard_fault(__FILE__, __LINE__, #x); } while (0)

#endif  // ALBERTKIT_CORE_ERROR_HPP_
