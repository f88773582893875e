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

#include "cryptext/error.hpp"
#include "cryptext/utf8.hpp"
#include "timeline_common.hpp"

namespace cryptext {

TimelineSeries build_timeline_serial(std::span<const Document> corpus,
                                     const PhoneticIndex& index, const TimelineQuery& q,
                                     const SentimentLexicon* lexicon) {
  TimelineSeries series;
  series.word = q.word;
  series.granularity = q.granularity;
  const detail::MatchSet set = detail::make_match_set(index, q, series.warnings);
  series.variants = set.variants;

  struct Match {
    Timestamp ts;
    std::map<std::string, std::uint64_t> counts;
    double sentiment;
  };
  std::vector<Match> matches;
  for (const Document& doc : corpus) {
    ++series.report.scanned;
    if (!doc.timestamp) {
      ++series.report.without_timestamp;
      if (doc.bad_timestamp) ++series.report.unparseable_timestamp;
      continue;
    }
    if (set.variants.empty() || !utf8::is_valid(doc.text)) continue;
    const auto tokens = tokenize(doc.text, index.encoder());
    Match m{*doc.timestamp, {}, 0.0};
    for (const TokenSpan& t : tokens) {
      if (!t.is_word) continue;
      const auto slot = set.find(t.raw);
      if (slot >= 0) ++m.counts[set.variants[static_cast<std::size_t>(slot)]];
    }
    if (m.counts.empty()) continue;
    if (lexicon) m.sentiment = detail::document_sentiment(tokens, index.encoder(), *lexicon);
    matches.push_back(std::move(m));
  }
  if (matches.empty() && !(q.from && q.to)) return series;

  Timestamp from = 0;
  Timestamp to = 0;
  if (!matches.empty()) {
    const auto [lo, hi] = std::minmax_element(
        matches.begin(), matches.end(), [](const Match& a, const Match& b) { return a.ts < b.ts; });
    from = lo->ts;
    to = hi->ts + 1;
  }
  from = q.from.value_or(from);
  to = q.to.value_or(to);
  if (from >= to) {
    series.report.out_of_range = matches.size();
    return series;
  }

  std::vector<double> sums;
  for (Timestamp s = bucket_start(from, q.granularity); s < to; s = next_bucket(s, q.granularity)) {
    TimelineBucket bucket;
    bucket.start = s;
    double sum = 0.0;
    for (const Match& m : matches) {
      if (m.ts < std::max(s, from) || m.ts >= std::min(next_bucket(s, q.granularity), to)) {
        continue;
      }
      ++bucket.document_total;
      for (const auto& [variant, c] : m.counts) {
        bucket.occurrences += c;
        if (q.split_variants) bucket.variant_counts[variant] += c;
      }
      sum += m.sentiment;
    }
    if (lexicon && bucket.document_total > 0) {
      bucket.mean_sentiment = sum / static_cast<double>(bucket.document_total);
    }
    series.report.matched += bucket.document_total;
    series.buckets.push_back(std::move(bucket));
    if (series.buckets.size() > kMaxTimelineBuckets) {
      throw Error(ErrorCode::kInvalidArgument, "timeline range needs too many buckets");
    }
  }
  series.report.out_of_range = matches.size() - series.report.matched;
  return series;
}

}  // namespace cryptext
