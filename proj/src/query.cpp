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

#include "cryptext/query.hpp"

#include <algorithm>

#include "cryptext/error.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {
namespace {

PerturbationSet run_lookup(const PhoneticIndex& index, std::string_view x,
                           const LookupParams& params, bool drop_case_variants) {
  if (params.k != index.level()) {
    throw Error(ErrorCode::kLevelMismatch,
                "lookup at k=" + std::to_string(params.k) + " on an index of level " +
                    std::to_string(index.level()));
  }
  if (params.min_count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "min_count must be >= 1");
  }
  PerturbationSet result;
  result.query = std::string(x);
  result.key = encode(x, params.k, index.encoder());

  const PhoneticIndex::Bucket* bucket = index.find_bucket(result.key.text);
  if (bucket == nullptr) return result;

  const CaseMode mode = params.case_sensitive ? CaseMode::kExact : CaseMode::kFold;
  std::u32string query = utf8::to_u32(x);
  if (mode == CaseMode::kFold) query = utf8::casefold(query);

  for (const auto& [raw, count] : *bucket) {
    if (count < params.min_count) continue;
    if (!params.include_query && raw == x) continue;
    std::u32string candidate = utf8::to_u32(raw);
    if (mode == CaseMode::kFold) candidate = utf8::casefold(candidate);
    if (drop_case_variants && mode == CaseMode::kFold && candidate == query) continue;
    if (auto dist = bounded_distance(query, candidate, params.d)) {
      result.members.push_back({raw, count, *dist});
    }
  }
  std::sort(result.members.begin(), result.members.end(),
            [](const Member& a, const Member& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.raw < b.raw;
            });
  return result;
}

}  // namespace

PerturbationSet lookup(const PhoneticIndex& index, std::string_view x,
                       const LookupParams& params) {
  return run_lookup(index, x, params, false);
}

PerturbationSet perturbations_only(const PhoneticIndex& index, std::string_view x,
                                   LookupParams params) {
  params.include_query = false;
  return run_lookup(index, x, params, true);
}

}  // namespace cryptext
