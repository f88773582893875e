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
#include "cryptext/normalize.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {

std::string_view to_string(TokenStatus status) noexcept {
  switch (status) {
    case TokenStatus::kClean: return "clean";
    case TokenStatus::kNormalized: return "normalized";
    case TokenStatus::kUnknown: return "unknown";
  }
  return "unknown";
}

std::vector<Candidate> candidates_for(std::string_view token, const WordDictionary& dict,
                                      int k, std::size_t d) {
  if (!dict.has_level(k)) {
    throw Error(ErrorCode::kLevelMismatch,
                "dictionary has no level " + std::to_string(k));
  }
  const SoundexKey key = encode(token, k, dict.encoder());
  std::vector<Candidate> out;
  const auto* words = dict.bucket(k, key.text);
  if (words == nullptr) return out;
  const std::u32string folded = utf8::casefold(utf8::to_u32(token));
  for (const std::string& w : *words) {
    if (auto dist = bounded_distance(folded, utf8::to_u32(w), d)) {
      out.push_back({w, *dist, 0.0, 0});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.distance < b.distance;
  });
  return out;
}

std::string match_case(std::string_view original, std::string_view replacement) {
  std::size_t upper = 0;
  std::size_t lower = 0;
  bool first_upper = false;
  bool seen_letter = false;
  for (char c : original) {
    const bool is_up = c >= 'A' && c <= 'Z';
    const bool is_low = c >= 'a' && c <= 'z';
    if (!is_up && !is_low) continue;
    if (!seen_letter) first_upper = is_up;
    seen_letter = true;
    upper += is_up;
    lower += is_low;
  }
  std::string out(replacement);
  if (upper >= 2 && lower == 0) {
    for (char& c : out) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
  } else if (first_upper && upper == 1 && !out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

NormalizationResult normalize_text(std::string_view text, const WordDictionary& dict,
                                   const CoherencyScorer& scorer,
                                   const NormalizeParams& params) {
  if (!dict.has_level(params.k)) {
    throw Error(ErrorCode::kLevelMismatch,
                "dictionary has no level " + std::to_string(params.k));
  }
  const EncoderConfig& encoder = dict.encoder();
  NormalizationResult result;

  std::vector<TokenSpan> words;
  for (TokenSpan& span : tokenize(text, encoder)) {
    if (span.is_word) words.push_back(std::move(span));
  }

  // First pass: status and raw candidates; the provisional reading of each
  // token (its best candidate by spelling alone) becomes scoring context.
  std::vector<std::vector<Candidate>> pools(words.size());
  std::vector<std::string> context(words.size());
  result.annotations.resize(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    TokenAnnotation& ann = result.annotations[i];
    ann.span = words[i];
    ann.original = words[i].raw;
    const std::string folded = utf8::casefold(words[i].raw);
    if (dict.contains(folded)) {
      ann.status = TokenStatus::kClean;
      context[i] = folded;
      continue;
    }
    std::vector<Candidate> pool;
    if (try_encode(words[i].raw, params.k, encoder)) {
      pool = candidates_for(words[i].raw, dict, params.k, params.d);
    }
    for (Candidate& c : pool) c.corpus_count = scorer.frequency(c.word);
    if (pool.empty()) {
      ann.status = TokenStatus::kUnknown;
      context[i] = canonicalize(words[i].raw, encoder);
      continue;
    }
    const auto provisional = std::min_element(
        pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
          if (a.distance != b.distance) return a.distance < b.distance;
          if (a.corpus_count != b.corpus_count) return a.corpus_count > b.corpus_count;
          return a.word < b.word;
        });
    context[i] = provisional->word;
    ann.status = TokenStatus::kNormalized;
    pools[i] = std::move(pool);
  }

  for (std::size_t i = 0; i < words.size(); ++i) {
    TokenAnnotation& ann = result.annotations[i];
    if (ann.status != TokenStatus::kNormalized) continue;
    auto& pool = pools[i];
    const std::span<const std::string> left(context.data(), i);
    const std::span<const std::string> right(context.data() + i + 1, words.size() - i - 1);
    for (Candidate& c : pool) c.coherency = coherency(scorer, c.word, left, right);
    std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
      if (a.coherency != b.coherency) return a.coherency > b.coherency;
      if (a.distance != b.distance) return a.distance < b.distance;
      if (a.corpus_count != b.corpus_count) return a.corpus_count > b.corpus_count;
      return a.word < b.word;
    });
    ann.replacement = match_case(ann.original, pool.front().word);
    if (pool.size() > params.top_n) pool.resize(params.top_n);
    ann.candidates = std::move(pool);
  }

  std::size_t cursor = 0;
  for (const TokenAnnotation& ann : result.annotations) {
    if (!ann.replacement) continue;
    result.output_text.append(text.substr(cursor, ann.span.start - cursor));
    result.output_text += *ann.replacement;
    cursor = ann.span.end;
  }
  result.output_text.append(text.substr(cursor));
  return result;
}

}  // namespace cryptext
