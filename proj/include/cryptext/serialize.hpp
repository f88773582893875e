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

#include <json.hpp>

#include "cryptext/analytics.hpp"
#include "cryptext/error.hpp"
#include "cryptext/index.hpp"
#include "cryptext/normalize.hpp"
#include "cryptext/perturb.hpp"
#include "cryptext/query.hpp"

// JSON wire forms shared by the CLI (--format json) and the HTTP service, so
// that both emit byte-identical bodies for the same result.
namespace cryptext::wire {

using Json = nlohmann::json;

Json to_json(const PerturbationSet& set);
Json to_json(const NormalizationResult& result);
Json to_json(const PerturbResult& result);
Json to_json(const ManifestRow& row);
Json to_json(const TimelineSeries& series);
Json to_json(const IndexStats& stats);
Json to_json(const IngestReport& report);
Json error_body(ErrorCode code, std::string_view message);
Json error_body(const Error& error);

// Compact single-line dump; invalid UTF-8 is replaced rather than thrown.
std::string dump(const Json& j);

}  // namespace cryptext::wire
