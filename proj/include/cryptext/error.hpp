// Copyright 2026 The cryptext Authors. All Rights Reserved.
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
#include <string_view>

namespace cryptext {

// Stable error codes. The names double as the `code` field of service error
// bodies and the diagnostic printed by the CLI, so never rename one.
enum class ErrorCode {
  kEmptyToken,
  kLevelMismatch,
  kConfigMismatch,
  kUnsupportedVersion,
  kCorruptFile,
  kMalformedDocument,
  kEmptyWordlist,
  kEmptyCorpus,
  kRatioOutOfRange,
  kUnparseableTimestamp,
  kEmptyVariantSet,
  kInvalidConfig,
  kInvalidArgument,
  kIoError,
  kUnauthorized,
  kNotFound,
  kMethodNotAllowed,
  kPayloadTooLarge,
  kUnavailable,
  kScorerError,
  kInternal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cryptext
