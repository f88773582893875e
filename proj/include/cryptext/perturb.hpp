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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cryptext/corpus.hpp"
#include "cryptext/index.hpp"
#include "cryptext/query.hpp"

namespace cryptext {

// All sampling uses std::mt19937_64 (whose output sequence is fixed by the
// standard) and the rejection sampler below, so results are reproducible
// across platforms and standard libraries.
inline constexpr std::string_view kGeneratorName = "mt19937_64";

// Uniform integer in [0, bound), bound > 0, by rejecting the biased low range.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

struct PerturbRequest {
  double ratio = 0.25;
  std::uint64_t seed = 0;
  bool case_sensitive = false;  // overrides lookup.case_sensitive
  LookupParams lookup;
};

struct Replacement {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string original;
  std::string replacement;
  std::size_t bucket_size = 0;  // size of the perturbation set drawn from

  friend bool operator==(const Replacement&, const Replacement&) = default;
};

struct PerturbResult {
  std::string output_text;
  std::vector<Replacement> replacements;  // in text order
  std::size_t words = 0;
  std::size_t requested = 0;  // round_half_up(ratio * words)
  std::size_t eligible = 0;   // word tokens with at least one perturbation
  std::size_t achieved = 0;   // min(requested, eligible)
};

// round(ratio * words), halves rounding up.
std::size_t requested_count(double ratio, std::size_t words);

// Replaces a uniformly sampled subset of the eligible word tokens, each by a
// uniformly chosen member of its perturbations_only() set. Throws
// kRatioOutOfRange and kLevelMismatch.
PerturbResult perturb_text(std::string_view text, const PhoneticIndex& index,
                           const PerturbRequest& request);

struct ManifestRow {
  std::string doc_id;
  std::size_t words = 0;
  std::size_t requested = 0;
  std::size_t eligible = 0;
  std::size_t achieved = 0;
  std::vector<Replacement> replacements;
};

struct CorpusPerturbation {
  std::vector<Document> documents;  // perturbed copies, input order
  std::vector<ManifestRow> manifest;
  std::size_t malformed = 0;
  std::size_t total_words = 0;
  std::size_t total_achieved = 0;

  double achieved_ratio() const noexcept {
    return total_words == 0 ? 0.0
                            : static_cast<double>(total_achieved) /
                                  static_cast<double>(total_words);
  }
};

// Per-document seed: request.seed XOR fnv1a64(doc id). Documents are processed
// in parallel; output does not depend on the thread count.
std::uint64_t document_seed(std::uint64_t seed, std::string_view doc_id) noexcept;
CorpusPerturbation perturb_corpus(std::span<const Document> corpus,
                                  const PhoneticIndex& index,
                                  const PerturbRequest& request);

}  // namespace cryptext
