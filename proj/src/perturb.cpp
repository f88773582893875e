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

#include "cryptext/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>

#include "cryptext/checksum.hpp"
#include "cryptext/error.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = gen();
    if (x >= threshold) return x % bound;
  }
}

std::size_t requested_count(double ratio, std::size_t words) {
  // Ratios arrive as decimals ("0.3"), so a product that lands a hair below
  // a half (0.3 * 5 = 1.4999...) still rounds up.
  const double exact = ratio * static_cast<double>(words);
  const auto n = static_cast<std::size_t>(std::floor(exact + 0.5 + 1e-9));
  return std::min(n, words);
}

PerturbResult perturb_text(std::string_view text, const PhoneticIndex& index,
                           const PerturbRequest& request) {
  if (!std::isfinite(request.ratio) || request.ratio < 0.0 || request.ratio > 1.0) {
    throw Error(ErrorCode::kRatioOutOfRange, "ratio must lie in [0, 1]");
  }
  if (request.lookup.k != index.level()) {
    throw Error(ErrorCode::kLevelMismatch,
                "perturbation at k=" + std::to_string(request.lookup.k) +
                    " on an index of level " + std::to_string(index.level()));
  }
  LookupParams params = request.lookup;
  params.case_sensitive = request.case_sensitive;

  std::vector<TokenSpan> words;
  for (TokenSpan& span : tokenize(text, index.encoder())) {
    if (span.is_word) words.push_back(std::move(span));
  }

  // One lookup per distinct spelling.
  std::unordered_map<std::string, std::vector<Member>> sets;
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto [it, fresh] = sets.try_emplace(words[i].raw);
    if (fresh && try_encode(words[i].raw, params.k, index.encoder())) {
      it->second = perturbations_only(index, words[i].raw, params).members;
    }
    if (!it->second.empty()) eligible.push_back(i);
  }

  PerturbResult result;
  result.words = words.size();
  result.requested = requested_count(request.ratio, words.size());
  result.eligible = eligible.size();
  result.achieved = std::min(result.requested, result.eligible);

  std::mt19937_64 gen(request.seed);
  for (std::size_t i = 0; i < result.achieved; ++i) {
    const std::size_t j = i + uniform_below(gen, eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
  }
  std::vector<std::size_t> targets(eligible.begin(),
                                   eligible.begin() + static_cast<std::ptrdiff_t>(result.achieved));
  std::sort(targets.begin(), targets.end());

  std::size_t cursor = 0;
  for (std::size_t t : targets) {
    const TokenSpan& span = words[t];
    const auto& members = sets.at(span.raw);
    const Member& pick = members[uniform_below(gen, members.size())];
    result.output_text.append(text.substr(cursor, span.start - cursor));
    result.output_text += pick.raw;
    cursor = span.end;
    result.replacements.push_back({span.start, span.end, span.raw, pick.raw, members.size()});
  }
  result.output_text.append(text.substr(cursor));
  return result;
}

std::uint64_t document_seed(std::uint64_t seed, std::string_view doc_id) noexcept {
  return seed ^ fnv1a64(doc_id);
}

CorpusPerturbation perturb_corpus(std::span<const Document> corpus,
                                  const PhoneticIndex& index,
                                  const PerturbRequest& request) {
  if (!std::isfinite(request.ratio) || request.ratio < 0.0 || request.ratio > 1.0) {
    throw Error(ErrorCode::kRatioOutOfRange, "ratio must lie in [0, 1]");
  }
  if (request.lookup.k != index.level()) {
    throw Error(ErrorCode::kLevelMismatch, "lookup level does not match the index");
  }
  std::vector<std::optional<PerturbResult>> results(corpus.size());
  const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const Document& doc = corpus[static_cast<std::size_t>(i)];
    if (!utf8::is_valid(doc.text)) continue;
    PerturbRequest req = request;
    req.seed = document_seed(request.seed, doc.id);
    results[static_cast<std::size_t>(i)] = perturb_text(doc.text, index, req);
  }

  CorpusPerturbation out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!results[i]) {
      ++out.malformed;
      continue;
    }
    PerturbResult& r = *results[i];
    Document doc = corpus[i];
    doc.text = std::move(r.output_text);
    out.documents.push_back(std::move(doc));
    out.manifest.push_back({corpus[i].id, r.words, r.requested, r.eligible, r.achieved,
                            std::move(r.replacements)});
    out.total_words += r.words;
    out.total_achieved += r.achieved;
  }
  return out;
}

}  // namespace cryptext
