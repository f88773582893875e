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
#include <limits>

#include "cryptext/utf8.hpp"
#include "timeline_common.hpp"

namespace cryptext {
namespace {

struct DocHit {
  Timestamp ts = 0;
  double sentiment = 0.0;
  std::vector<std::pair<std::size_t, std::uint32_t>> counts;  // (slot, occurrences)
};

}  // namespace

TimelineSeries build_timeline(std::span<const Document> corpus, const PhoneticIndex& index,
                              const TimelineQuery& q, const SentimentLexicon* lexicon) {
  TimelineSeries series;
  series.word = q.word;
  series.granularity = q.granularity;
  const detail::MatchSet set = detail::make_match_set(index, q, series.warnings);
  series.variants = set.variants;

  const auto n = static_cast<std::int64_t>(corpus.size());
  std::vector<std::optional<DocHit>> hits(corpus.size());
  if (!set.variants.empty()) {
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i) {
      const Document& doc = corpus[static_cast<std::size_t>(i)];
      if (!doc.timestamp || !utf8::is_valid(doc.text)) continue;
      const auto tokens = tokenize(doc.text, index.encoder());
      DocHit hit;
      for (const TokenSpan& t : tokens) {
        if (!t.is_word) continue;
        const auto s = set.find(t.raw);
        if (s < 0) continue;
        const auto slot = static_cast<std::size_t>(s);
        auto it = std::find_if(hit.counts.begin(), hit.counts.end(),
                               [&](const auto& c) { return c.first == slot; });
        if (it == hit.counts.end()) {
          hit.counts.emplace_back(slot, 1);
        } else {
          ++it->second;
        }
      }
      if (hit.counts.empty()) continue;
      hit.ts = *doc.timestamp;
      if (lexicon) hit.sentiment = detail::document_sentiment(tokens, index.encoder(), *lexicon);
      hits[static_cast<std::size_t>(i)] = std::move(hit);
    }
  }

  TimelineReport& report = series.report;
  report.scanned = corpus.size();
  Timestamp lo = std::numeric_limits<Timestamp>::max();
  Timestamp hi = std::numeric_limits<Timestamp>::min();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus[i].timestamp) {
      ++report.without_timestamp;
      if (corpus[i].bad_timestamp) ++report.unparseable_timestamp;
    }
    if (hits[i]) {
      lo = std::min(lo, hits[i]->ts);
      hi = std::max(hi, hits[i]->ts);
    }
  }
  const bool any = lo <= hi;
  const Timestamp from = q.from.value_or(any ? lo : 0);
  const Timestamp to = q.to.value_or(any ? hi + 1 : 0);
  const std::vector<Timestamp> starts =
      (from < to && (any || (q.from && q.to))) ? detail::bucket_starts(from, to, q.granularity)
                                               : std::vector<Timestamp>{};

  series.buckets.resize(starts.size());
  std::vector<double> sentiment_sums(starts.size(), 0.0);
  for (std::size_t b = 0; b < starts.size(); ++b) series.buckets[b].start = starts[b];
  for (const auto& hit : hits) {
    if (!hit) continue;
    if (hit->ts < from || hit->ts >= to) {
      ++report.out_of_range;
      continue;
    }
    const auto b = static_cast<std::size_t>(
        std::upper_bound(starts.begin(), starts.end(), hit->ts) - starts.begin() - 1);
    TimelineBucket& bucket = series.buckets[b];
    ++bucket.document_total;
    ++report.matched;
    for (const auto& [slot, c] : hit->counts) {
      bucket.occurrences += c;
      if (q.split_variants) bucket.variant_counts[set.variants[slot]] += c;
    }
    sentiment_sums[b] += hit->sentiment;
  }
  if (lexicon) {
    for (std::size_t b = 0; b < starts.size(); ++b) {
      auto& bucket = series.buckets[b];
      if (bucket.document_total > 0) {
        bucket.mean_sentiment = sentiment_sums[b] / static_cast<double>(bucket.document_total);
      }
    }
  }
  return series;
}

}  // namespace cryptext
