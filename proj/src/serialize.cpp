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

#include "cryptext/serialize.hpp"

namespace cryptext::wire {

Json to_json(const PerturbationSet& set) {
  Json members = Json::array();
  for (const Member& m : set.members) {
    members.push_back({{"raw", m.raw}, {"count", m.count}, {"distance", m.distance}});
  }
  return {{"token", set.query}, {"key", set.key.text}, {"k", set.key.level}, {"members", members}};
}

Json to_json(const NormalizationResult& result) {
  Json annotations = Json::array();
  for (const TokenAnnotation& a : result.annotations) {
    Json candidates = Json::array();
    for (const Candidate& c : a.candidates) {
      candidates.push_back({{"word", c.word},
                            {"distance", c.distance},
                            {"coherency", c.coherency},
                            {"corpus_count", c.corpus_count}});
    }
    annotations.push_back({{"start", a.span.start},
                           {"end", a.span.end},
                           {"original", a.original},
                           {"replacement", a.replacement ? Json(*a.replacement) : Json(nullptr)},
                           {"status", std::string(to_string(a.status))},
                           {"candidates", candidates}});
  }
  return {{"output_text", result.output_text}, {"annotations", annotations}};
}

Json to_json(const PerturbResult& result) {
  Json replacements = Json::array();
  for (const Replacement& r : result.replacements) {
    replacements.push_back({{"start", r.start},
                            {"end", r.end},
                            {"original", r.original},
                            {"replacement", r.replacement},
                            {"bucket_size", r.bucket_size}});
  }
  return {{"output_text", result.output_text},
          {"words", result.words},
          {"requested", result.requested},
          {"eligible", result.eligible},
          {"achieved", result.achieved},
          {"rng", kGeneratorName},
          {"replacements", replacements}};
}

Json to_json(const ManifestRow& row) {
  Json replacements = Json::array();
  for (const Replacement& r : row.replacements) {
    replacements.push_back(Json::array({r.start, r.end, r.original, r.replacement}));
  }
  return {{"doc_id", row.doc_id},
          {"words", row.words},
          {"requested", row.requested},
          {"eligible", row.eligible},
          {"achieved", row.achieved},
          {"rng", kGeneratorName},
          {"replacements", replacements}};
}

Json to_json(const TimelineSeries& series) {
  Json buckets = Json::array();
  for (const TimelineBucket& b : series.buckets) {
    buckets.push_back({{"bucket_start", format_rfc3339(b.start)},
                       {"total", b.document_total},
                       {"occurrences", b.occurrences},
                       {"variants", b.variant_counts},
                       {"mean_sentiment",
                        b.mean_sentiment ? Json(*b.mean_sentiment) : Json(nullptr)}});
  }
  const TimelineReport& r = series.report;
  return {{"word", series.word},
          {"granularity", std::string(to_string(series.granularity))},
          {"variants", series.variants},
          {"buckets", buckets},
          {"report",
           {{"scanned", r.scanned},
            {"matched", r.matched},
            {"without_timestamp", r.without_timestamp},
            {"unparseable_timestamp", r.unparseable_timestamp},
            {"out_of_range", r.out_of_range}}},
          {"warnings", series.warnings}};
}

Json to_json(const IndexStats& stats) {
  return {{"token_count", stats.token_count},
          {"bucket_count", stats.bucket_count},
          {"document_count", stats.document_count}};
}

Json to_json(const IngestReport& report) {
  return {{"documents", report.documents},
          {"malformed_documents", report.malformed_documents},
          {"word_tokens", report.word_tokens},
          {"rejected_tokens", report.rejected_tokens}};
}

Json error_body(ErrorCode code, std::string_view message) {
  return {{"error", {{"code", std::string(to_string(code))}, {"message", std::string(message)}}}};
}

Json error_body(const Error& error) { return error_body(error.code(), error.what()); }

std::string dump(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace cryptext::wire
