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

#include <omp.h>

#include <string>
#include <unordered_map>

#include "cryptext/error.hpp"
#include "cryptext/index.hpp"
#include "cryptext/utf8.hpp"
#include "levels.hpp"

namespace cryptext {
namespace detail {

void check_levels(const std::set<int>& levels, const IngestOptions& options) {
  if (levels.empty()) throw Error(ErrorCode::kInvalidArgument, "no levels requested");
  for (int k : levels) {
    if (k < 0 || k > options.max_level) {
      throw Error(ErrorCode::kInvalidArgument,
                  "level " + std::to_string(k) + " outside [0, " +
                      std::to_string(options.max_level) + "]");
    }
  }
}

}  // namespace detail

IngestResult ingest(std::span<const Document> documents, const std::set<int>& levels,
                    const EncoderConfig& encoder, const IngestOptions& options) {
  detail::check_levels(levels, options);
  using Counts = std::unordered_map<std::string, std::uint64_t>;

  const int threads = omp_get_max_threads();
  std::vector<Counts> partial(static_cast<std::size_t>(threads));
  std::vector<IngestReport> reports(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::int64_t>(documents.size());

#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    Counts& counts = partial[tid];
    IngestReport& report = reports[tid];
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
      const Document& doc = documents[static_cast<std::size_t>(i)];
      if (!utf8::is_valid(doc.text)) {
        ++report.malformed_documents;
        continue;
      }
      ++report.documents;
      for (const TokenSpan& span : tokenize(doc.text, encoder)) {
        if (admissible(span, encoder, options)) {
          ++counts[span.raw];
          ++report.word_tokens;
        } else {
          ++report.rejected_tokens;
        }
      }
    }
  }

  Counts total = std::move(partial[0]);
  IngestResult result;
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [raw, count] : partial[t]) total[raw] += count;
  }
  for (const IngestReport& r : reports) {
    result.report.documents += r.documents;
    result.report.malformed_documents += r.malformed_documents;
    result.report.word_tokens += r.word_tokens;
    result.report.rejected_tokens += r.rejected_tokens;
  }

  std::vector<std::pair<std::string, std::uint64_t>> distinct(total.begin(), total.end());
  const auto m = static_cast<std::int64_t>(distinct.size());
  for (int k : levels) {
    std::vector<std::string> keys(distinct.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) {
      keys[static_cast<std::size_t>(i)] =
          encode(distinct[static_cast<std::size_t>(i)].first, k, encoder).text;
    }
    PhoneticIndex index(k, encoder);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      index.add_keyed(keys[i], distinct[i].first, distinct[i].second);
    }
    index.add_documents(result.report.documents);
    result.indexes.emplace(k, std::move(index));
  }
  return result;
}

}  // namespace cryptext
