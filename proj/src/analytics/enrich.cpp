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

#include <algorithm>
#include <unordered_set>

#include "cryptext/analytics.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {

std::map<std::string, std::vector<std::string>> keyword_enrich(
    const PhoneticIndex& index, std::span<const std::string> words,
    const LookupParams& params) {
  std::map<std::string, std::vector<std::string>> out;
  for (const std::string& word : words) {
    std::vector<std::string> variants{word};
    if (try_encode(word, params.k, index.encoder())) {
      for (const Member& m : perturbations_only(index, word, params).members) {
        if (std::find(variants.begin(), variants.end(), m.raw) == variants.end()) {
          variants.push_back(m.raw);
        }
      }
    }
    out[word] = std::move(variants);
  }
  return out;
}

std::vector<Document> CorpusSourceAdapter::fetch(std::span<const std::string> queries,
                                                 std::optional<Timestamp> from,
                                                 std::optional<Timestamp> to) {
  std::unordered_set<std::string> wanted;
  for (const auto& q : queries) wanted.insert(utf8::casefold(q));
  std::vector<Document> out;
  for (const Document& doc : corpus_) {
    if (from || to) {
      if (!doc.timestamp) continue;
      if (from && *doc.timestamp < *from) continue;
      if (to && *doc.timestamp >= *to) continue;
    }
    for (const TokenSpan& t : tokenize(doc.text)) {
      if (wanted.contains(utf8::casefold(t.raw))) {
        out.push_back(doc);
        break;
      }
    }
  }
  return out;
}

}  // namespace cryptext
