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

#include <string>
#include <unordered_map>
#include <vector>

#include "cryptext/analytics.hpp"

namespace cryptext::detail {

struct MatchSet {
  std::vector<std::string> variants;  // sorted
  std::unordered_map<std::string, std::size_t> slot;
  bool fold = true;

  // Slot of the token if it is a variant, else -1.
  std::ptrdiff_t find(const std::string& raw) const;
};

// Validates the query and resolves the variant set by lookup.
MatchSet make_match_set(const PhoneticIndex& index, const TimelineQuery& q,
                        std::vector<std::string>& warnings);

// Mean token valence of a document over its word tokens.
double document_sentiment(const std::vector<TokenSpan>& tokens, const EncoderConfig& encoder,
                          const SentimentLexicon& lexicon);

// Contiguous bucket starts covering [from, to). Throws kInvalidArgument when
// more than kMaxTimelineBuckets would be needed.
std::vector<Timestamp> bucket_starts(Timestamp from, Timestamp to, Granularity g);

}  // namespace cryptext::detail
