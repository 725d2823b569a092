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

// Verdict constructors shared by the oracle translation units.

#ifndef ALBERTKIT_CORE_VERDICTS_HPP_
#define ALBERTKIT_CORE_VERDICTS_HPP_

#include <string>
#include <utility>

#include "isotropy.hpp"

namespace albertkit::detail {

inline IsotropyVerdict isotropic(Vec w, std::string method, int height = -1) {
  IsotropyVerdict v;
  v.verdict = Verdict::kIsotropic;
  v.witness = std::move(w);
  v.method = std::move(method);
  v.height = height;
  return v;
}

inline IsotropyVerdict anisotropic(std::string method) {
  IsotropyVerdict v;
  v.verdict = Verdict::kAnisotropic;
  v.method = std::move(method);
  return v;
}

inline IsotropyVerdict unknown(std::string method, int height) {
  IsotropyVerdict v;
  v.verdict = Verdict::kUnknown;
  v.method = std::move(method);
  v.height = height;
  return v;
}

// Re-verifies a witness before it leaves an oracle.
inline IsotropyVerdict checked(const QuadraticForm& phi, IsotropyVerdict v) {
  if (v.verdict == Verdict::kIsotropic) {
    if (v.witness.size() != phi.dim() || is_zero_vec(v.witness) || !phi.eval(v.witness).is_zero())
      throw Error(ErrorCode::kInternalContradiction, "oracle " + v.method + " produced an invalid witness");
  }
  return v;
}

}  // namespace albertkit::detail

#endif  // ALBERTKIT_CORE_VERDICTS_HPP_
