// Copyright 2026 The thintree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thintree/errors.hpp"

namespace thintree {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidCut: return "invalid-cut";
    case ErrorCode::kInvalidInstance: return "invalid-instance";
    case ErrorCode::kInvalidTree: return "invalid-tree";
    case ErrorCode::kGuardExceeded: return "guard-exceeded";
    case ErrorCode::kProtocol: return "protocol";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
    case ErrorCode::kConstruction: return "construction";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kNotCliqueRespecting: return "not-clique-respecting";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kOverflow: return "overflow";
  }
  return "unknown";
}

}  // namespace thintree
