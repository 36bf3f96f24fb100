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

#pragma once

#include <stdexcept>
#include <string>

namespace thintree {

enum class ErrorCode {
  kInvalidArgument = 1,
  kInvalidCut,
  kInvalidInstance,
  kInvalidTree,
  kGuardExceeded,
  kProtocol,
  kInvariantViolation,
  kConstruction,
  kDomain,
  kNotCliqueRespecting,
  kParse,
  kIo,
  kOverflow,
};

const char* ErrorCodeName(ErrorCode code);

// Base for every error raised by the library. Each carries a stable code so
// the C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input file. `line` is 1-based; 0 when the error is not tied to a
// particular line (e.g. an unreadable file or a missing record at EOF).
class ParseError : public Error {
 public:
  ParseError(std::string source, int line, const std::string& message)
      : Error(ErrorCode::kParse, Format(source, line, message)),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }

 private:
  static std::string Format(const std::string& source, int line,
                            const std::string& message) {
    if (line <= 0) return source + ": " + message;
    return source + ":" + std::to_string(line) + ": " + message;
  }

  std::string source_;
  int line_;
};

}  // namespace thintree
