// Copyright 2026 The longpath Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace longpath {

enum class ErrorCode {
  kInvalidEdge,
  kVertexOutOfRange,
  kEmptySet,
  kEmptyComplement,
  kOrderOutOfRange,
  kFormat,
  kNoPath,
  kNotOnPath,
  kOrderMismatch,
  kDisconnected,
  kWitnessFailure,
  kPrecondition,
  kPostAssertion,
  kNotAClaim,
  kInvalidConfig,
  kCheckpointCorrupt,
  kShardMismatch,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEdge: return "invalid-edge";
    case ErrorCode::kVertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::kEmptySet: return "empty-set";
    case ErrorCode::kEmptyComplement: return "empty-complement";
    case ErrorCode::kOrderOutOfRange: return "order-out-of-range";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kNoPath: return "no-path";
    case ErrorCode::kNotOnPath: return "not-on-path";
    case ErrorCode::kOrderMismatch: return "order-mismatch";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kWitnessFailure: return "witness-failure";
    case ErrorCode::kPrecondition: return "precondition-violation";
    case ErrorCode::kPostAssertion: return "post-assertion-failure";
    case ErrorCode::kNotAClaim: return "not-a-claim";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kCheckpointCorrupt: return "checkpoint-corrupt";
    case ErrorCode::kShardMismatch: return "shard-mismatch";
  }
  return "unknown";
}

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed graph6 / edge-list input. `offset` is the byte position of the
// offending character within the record (or line number for edge lists).
class FormatError : public Error {
 public:
  FormatError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::kFormat,
              message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace longpath
