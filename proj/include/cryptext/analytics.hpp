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
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cryptext/corpus.hpp"
#include "cryptext/index.hpp"
#include "cryptext/query.hpp"

namespace cryptext {

enum class Granularity { kDay, kWeek, kMonth };

std::optional<Granularity> parse_granularity(std::string_view name) noexcept;
std::string_view to_string(Granularity g) noexcept;

// Start of the day / ISO week (Monday) / calendar month containing ts, UTC.
Timestamp bucket_start(Timestamp ts, Granularity g);
Timestamp next_bucket(Timestamp start, Granularity g);

// word -> valence in [-1, 1]; unknown words are neutral. Keys are matched
// against canonical token forms, so "h@te" scores like "hate".
class SentimentLexicon {
 public:
  SentimentLexicon() = default;
  explicit SentimentLexicon(std::unordered_map<std::string, double> valences);

  // Lines "word<TAB>valence", '#' comments. Throws kInvalidConfig on values
  // that are not finite numbers in [-1, 1].
  static SentimentLexicon load(const std::filesystem::path& path);
  static SentimentLexicon parse(std::string_view text);

  double valence(std::string_view canonical_word) const;
  std::size_t size() const noexcept { return valences_.size(); }

 private:
  std::unordered_map<std::string, double> valences_;
};

struct TimelineQuery {
  std::string word;
  LookupParams lookup;
  std::optional<Timestamp> from;  // inclusive; defaults to the first match
  std::optional<Timestamp> to;    // exclusive; defaults to just after the last match
  Granularity granularity = Granularity::kDay;
  bool split_variants = true;
};

struct TimelineBucket {
  Timestamp start = 0;
  std::uint64_t document_total = 0;  // documents with at least one variant
  std::uint64_t occurrences = 0;     // variant occurrences, all variants
  std::map<std::string, std::uint64_t> variant_counts;  // empty unless split
  std::optional<double> mean_sentiment;

  friend bool operator==(const TimelineBucket&, const TimelineBucket&) = default;
};

struct TimelineReport {
  std::uint64_t scanned = 0;
  std::uint64_t matched = 0;
  std::uint64_t without_timestamp = 0;  // excluded, includes unparseable ones
  std::uint64_t unparseable_timestamp = 0;
  std::uint64_t out_of_range = 0;

  friend bool operator==(const TimelineReport&, const TimelineReport&) = default;
};

struct TimelineSeries {
  std::string word;
  Granularity granularity = Granularity::kDay;
  // Match set. Case-insensitive queries fold variants, so "The" and "the"
  // collapse into "the".
  std::vector<std::string> variants;
  std::vector<TimelineBucket> buckets;  // contiguous, ascending
  TimelineReport report;
  std::vector<std::string> warnings;
};

inline constexpr std::size_t kMaxTimelineBuckets = 100000;

// Buckets every timestamped document that contains a variant of q.word.
// A word without any indexed variant yields an empty series with a
// warning. Throws kEmptyToken, kLevelMismatch, kInvalidArgument (from > to,
// too many buckets).
TimelineSeries build_timeline(std::span<const Document> corpus, const PhoneticIndex& index,
                              const TimelineQuery& q,
                              const SentimentLexicon* lexicon = nullptr);

// Single-threaded reference implementation with the same contract.
TimelineSeries build_timeline_serial(std::span<const Document> corpus,
                                     const PhoneticIndex& index, const TimelineQuery& q,
                                     const SentimentLexicon* lexicon = nullptr);

// For each word: the word itself followed by its perturbations, deduplicated.
std::map<std::string, std::vector<std::string>> keyword_enrich(
    const PhoneticIndex& index, std::span<const std::string> words,
    const LookupParams& params = {});

// Where documents for social listening come from. Platform clients plug in
// here; the bundled adapter scans an in-memory corpus.
class SourceAdapter {
 public:
  virtual ~SourceAdapter() = default;
  virtual std::vector<Document> fetch(std::span<const std::string> queries,
                                      std::optional<Timestamp> from,
                                      std::optional<Timestamp> to) = 0;
};

class CorpusSourceAdapter final : public SourceAdapter {
 public:
  explicit CorpusSourceAdapter(std::vector<Document> corpus) : corpus_(std::move(corpus)) {}
  // Documents in [from, to) containing any query token (case-insensitive).
  std::vector<Document> fetch(std::span<const std::string> queries,
                              std::optional<Timestamp> from,
                              std::optional<Timestamp> to) override;

 private:
  std::vector<Document> corpus_;
};

}  // namespace cryptext
