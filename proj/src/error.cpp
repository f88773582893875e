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

#include "cryptext/error.hpp"

namespace cryptext {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyToken: return "EmptyToken";
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kConfigMismatch: return "ConfigMismatch";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kCorruptFile: return "CorruptFile";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kEmptyWordlist: return "EmptyWordlist";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kRatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::kUnparseableTimestamp: return "UnparseableTimestamp";
    case ErrorCode::kEmptyVariantSet: return "EmptyVariantSet";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUnauthorized: return "Unauthorized";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kMethodNotAllowed: return "MethodNotAllowed";
    case ErrorCode::kPayloadTooLarge: return "PayloadTooLarge";
    case ErrorCode::kUnavailable: return "Unavailable";
    case ErrorCode::kScorerError: return "ScorerError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Internal";
}

}  // namespace cryptext
