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
#include "cryptext/index.hpp"
#include "cryptext/utf8.hpp"
#include "levels.hpp"

namespace cryptext {

IngestResult ingest_serial(std::span<const Document> documents,
                           const std::set<int>& levels, const EncoderConfig& encoder,
                           const IngestOptions& options) {
  detail::check_levels(levels, options);
  IngestResult result;
  for (int k : levels) result.indexes.emplace(k, PhoneticIndex(k, encoder));

  for (const Document& doc : documents) {
    if (!utf8::is_valid(doc.text)) {
      ++result.report.malformed_documents;
      continue;
    }
    ++result.report.documents;
    for (const TokenSpan& span : tokenize(doc.text, encoder)) {
      if (!admissible(span, encoder, options)) {
        ++result.report.rejected_tokens;
        continue;
      }
      ++result.report.word_tokens;
      for (auto& [k, index] : result.indexes) {
        index.add_keyed(encode(span.raw, k, encoder).text, span.raw, 1);
      }
    }
  }
  for (auto& [k, index] : result.indexes) index.add_documents(result.report.documents);
  return result;
}

}  // namespace cryptext
