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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cryptext/index.hpp"
#include "cryptext/textcore.hpp"

namespace cryptext {

struct LookupParams {
  int k = 1;
  std::size_t d = 3;
  bool case_sensitive = false;
  bool include_query = true;
  std::uint64_t min_count = 1;
};

struct Member {
  std::string raw;
  std::uint64_t count = 0;
  std::size_t distance = 0;

  friend bool operator==(const Member&, const Member&) = default;
};

// Tokens sharing the query's phonetic key within edit distance d. Members are
// ordered by descending count, then ascending distance, then raw bytes.
struct PerturbationSet {
  std::string query;
  SoundexKey key;
  std::vector<Member> members;
};

// Throws kEmptyToken, kLevelMismatch (params.k != index.level()) or
// kInvalidArgument (min_count == 0).
PerturbationSet lookup(const PhoneticIndex& index, std::string_view x,
                       const LookupParams& params = {});

// lookup() without the query itself; in case-insensitive mode also without
// members that equal the query after case folding.
PerturbationSet perturbations_only(const PhoneticIndex& index, std::string_view x,
                                   LookupParams params = {});

}  // namespace cryptext
