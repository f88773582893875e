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

#include "timeline_common.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "cryptext/error.hpp"
#include "cryptext/utf8.hpp"
#include "io_util.hpp"

namespace cryptext {

std::optional<Granularity> parse_granularity(std::string_view name) noexcept {
  if (name == "day") return Granularity::kDay;
  if (name == "week") return Granularity::kWeek;
  if (name == "month") return Granularity::kMonth;
  return std::nullopt;
}

std::string_view to_string(Granularity g) noexcept {
  switch (g) {
    case Granularity::kDay: return "day";
    case Granularity::kWeek: return "week";
    case Granularity::kMonth: return "month";
  }
  return "day";
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a / b - ((a % b != 0) && ((a < 0) != (b < 0)));
}

}  // namespace

Timestamp bucket_start(Timestamp ts, Granularity g) {
  using namespace std::chrono;
  const std::int64_t day = floor_div(ts, 86400);
  switch (g) {
    case Granularity::kDay:
      return day * 86400;
    case Granularity::kWeek: {
      // 1970-01-01 was a Thursday; Monday-based weekday index is (day+3) mod 7.
      const std::int64_t weekday = (day + 3) - floor_div(day + 3, 7) * 7;
      return (day - weekday) * 86400;
    }
    case Granularity::kMonth: {
      const year_month_day ymd{sys_days{days{day}}};
      const sys_days first{ymd.year() / ymd.month() / 1};
      return static_cast<Timestamp>(first.time_since_epoch().count()) * 86400;
    }
  }
  return day * 86400;
}

Timestamp next_bucket(Timestamp start, Granularity g) {
  using namespace std::chrono;
  switch (g) {
    case Granularity::kDay: return start + 86400;
    case Granularity::kWeek: return start + 7 * 86400;
    case Granularity::kMonth: {
      const year_month_day ymd{sys_days{days{floor_div(start, 86400)}}};
      const sys_days next{(ymd.year() / ymd.month() / 1) + months{1}};
      return static_cast<Timestamp>(next.time_since_epoch().count()) * 86400;
    }
  }
  return start + 86400;
}

SentimentLexicon::SentimentLexicon(std::unordered_map<std::string, double> valences)
    : valences_(std::move(valences)) {
  for (const auto& [word, v] : valences_) {
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      throw Error(ErrorCode::kInvalidConfig, "valence of '" + word + "' outside [-1, 1]");
    }
  }
}

SentimentLexicon SentimentLexicon::parse(std::string_view text) {
  std::unordered_map<std::string, double> valences;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kInvalidConfig,
                  "lexicon line " + std::to_string(line_no) + ": expected word<TAB>valence");
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(line.substr(tab + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != line.size() - tab - 1) {
      throw Error(ErrorCode::kInvalidConfig,
                  "lexicon line " + std::to_string(line_no) + ": bad valence");
    }
    valences[canonicalize(line.substr(0, tab))] = v;
  }
  return SentimentLexicon(std::move(valences));
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
  return parse(detail::read_file(path));
}

double SentimentLexicon::valence(std::string_view canonical_word) const {
  auto it = valences_.find(std::string(canonical_word));
  return it == valences_.end() ? 0.0 : it->second;
}

namespace detail {

std::ptrdiff_t MatchSet::find(const std::string& raw) const {
  auto it = slot.find(fold ? utf8::casefold(raw) : raw);
  return it == slot.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

MatchSet make_match_set(const PhoneticIndex& index, const TimelineQuery& q,
                        std::vector<std::string>& warnings) {
  if (q.from && q.to && *q.from > *q.to) {
    throw Error(ErrorCode::kInvalidArgument, "timeline range has from > to");
  }
  MatchSet set;
  set.fold = !q.lookup.case_sensitive;
  const PerturbationSet found = lookup(index, q.word, q.lookup);
  for (const Member& m : found.members) {
    set.variants.push_back(set.fold ? utf8::casefold(m.raw) : m.raw);
  }
  std::sort(set.variants.begin(), set.variants.end());
  set.variants.erase(std::unique(set.variants.begin(), set.variants.end()), set.variants.end());
  for (std::size_t i = 0; i < set.variants.size(); ++i) set.slot.emplace(set.variants[i], i);
  if (set.variants.empty()) {
    warnings.push_back(std::string(to_string(ErrorCode::kEmptyVariantSet)) + ": '" + q.word +
                       "' has no indexed variants");
  }
  return set;
}

double document_sentiment(const std::vector<TokenSpan>& tokens, const EncoderConfig& encoder,
                          const SentimentLexicon& lexicon) {
  double sum = 0.0;
  std::size_t words = 0;
  for (const TokenSpan& t : tokens) {
    if (!t.is_word) continue;
    ++words;
    sum += lexicon.valence(canonicalize(t.raw, encoder));
  }
  return words == 0 ? 0.0 : sum / static_cast<double>(words);
}

std::vector<Timestamp> bucket_starts(Timestamp from, Timestamp to, Granularity g) {
  std::vector<Timestamp> starts;
  for (Timestamp s = bucket_start(from, g); s < to; s = next_bucket(s, g)) {
    if (starts.size() >= kMaxTimelineBuckets) {
      throw Error(ErrorCode::kInvalidArgument, "timeline range needs too many buckets");
    }
    starts.push_back(s);
  }
  return starts;
}

}  // namespace detail
}  // namespace cryptext
