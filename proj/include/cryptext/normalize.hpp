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
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cryptext/corpus.hpp"
#include "cryptext/textcore.hpp"

namespace cryptext {

// Valid lowercase words, bucketed by phonetic key for each built level.
class WordDictionary {
 public:
  struct BuildReport {
    std::size_t accepted = 0;
    std::size_t duplicates = 0;
    std::size_t rejected = 0;
    std::vector<std::string> rejected_samples;
  };

  // Entries are case-folded and accent-folded ("Répub" -> "repub"); anything
  // that is not then a run of a..z fixed under canonicalize() is rejected.
  // Throws kEmptyWordlist when nothing is accepted.
  static WordDictionary build(std::span<const std::string> words,
                              const std::set<int>& levels,
                              const EncoderConfig& encoder = EncoderConfig::standard(),
                              BuildReport* report = nullptr,
                              std::string source = "memory");

  // One word per line, '#' comments.
  static WordDictionary load(const std::filesystem::path& path,
                             const std::set<int>& levels = {0, 1, 2},
                             const EncoderConfig& encoder = EncoderConfig::standard(),
                             BuildReport* report = nullptr);

  bool contains(std::string_view word) const;
  bool has_level(int k) const noexcept { return by_key_.contains(k); }
  // Sorted words under `key` at level k, or nullptr.
  const std::vector<std::string>* bucket(int k, std::string_view key) const;

  std::size_t size() const noexcept { return words_.size(); }
  const std::string& source() const noexcept { return source_; }
  const EncoderConfig& encoder() const noexcept { return encoder_; }
  std::set<int> levels() const;

 private:
  explicit WordDictionary(const EncoderConfig& encoder) : encoder_(encoder) {}

  EncoderConfig encoder_;
  std::string source_;
  std::unordered_set<std::string> words_;
  std::map<int, std::unordered_map<std::string, std::vector<std::string>>> by_key_;
};

// Context-fit score of a word placed between two token sequences. Higher is
// more coherent. Tokens are lowercase canonical forms; `left` ends right
// before the slot and `right` starts right after it, both possibly empty at
// the text edges.
class CoherencyScorer {
 public:
  virtual ~CoherencyScorer() = default;
  virtual double score(std::string_view word, std::span<const std::string> left,
                       std::span<const std::string> right) const = 0;
  // Corpus frequency used as a ranking tie-breaker; 0 when unknown.
  virtual std::uint64_t frequency(std::string_view /*word*/) const { return 0; }
};

// Scores every candidate equally, so ranking falls through to spelling
// distance and frequency. Used when no language model is configured.
class UniformScorer final : public CoherencyScorer {
 public:
  double score(std::string_view, std::span<const std::string>,
               std::span<const std::string>) const override {
    return 0.0;
  }
};

// Add-alpha smoothed n-gram model over lowercase canonical tokens. Sentences
// are padded with order-1 "<s>" symbols and terminated by "</s>". The outcome
// set of every conditional distribution is the training vocabulary (which
// includes "</s>") plus "<unk>".
class NGramModel final : public CoherencyScorer {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kUnk = "<unk>";

  NGramModel(int order, double alpha);

  int order() const noexcept { return order_; }
  double alpha() const noexcept { return alpha_; }

  void add_sentence(std::span<const std::string> tokens);

  // Vocabulary size plus one for "<unk>".
  std::size_t outcome_count() const noexcept { return vocabulary_.size() + 1; }
  std::vector<std::string> vocabulary() const;

  // P(word | context). Only the last order-1 context tokens are used; shorter
  // contexts are left-padded with "<s>". Unknown tokens map to "<unk>".
  double probability(std::span<const std::string> context, std::string_view word) const;

  // Sum of log P over every n-gram that covers the slot once `word` fills it.
  double score(std::string_view word, std::span<const std::string> left,
               std::span<const std::string> right) const override;
  std::uint64_t frequency(std::string_view word) const override;

  std::uint64_t count(int order, std::string_view context, std::string_view word) const;

  std::string serialize() const;
  static NGramModel deserialize(std::string_view bytes);
  void save(const std::filesystem::path& path) const;
  static NGramModel load(const std::filesystem::path& path);

  friend bool operator==(const NGramModel& a, const NGramModel& b);

 private:
  struct ContextCounts {
    std::uint64_t total = 0;
    std::unordered_map<std::string, std::uint64_t> next;

    friend bool operator==(const ContextCounts&, const ContextCounts&) = default;
  };

  void add_count(int order, const std::string& context, const std::string& word,
                 std::uint64_t n);
  std::string_view known(std::string_view token) const;

  int order_;
  double alpha_;
  // tables_[m-1]: context of m-1 space-joined tokens -> successor counts.
  std::vector<std::unordered_map<std::string, ContextCounts>> tables_;
  std::unordered_set<std::string> vocabulary_;
};

// Lowercase canonical forms of the word tokens of `text`.
std::vector<std::string> model_tokens(std::string_view text,
                                      const EncoderConfig& encoder = EncoderConfig::standard());

// Trains on every document; throws kInvalidArgument for order < 1 or
// alpha <= 0 and kEmptyCorpus when no word token is seen.
NGramModel train_ngram(std::span<const Document> corpus, int order = 3,
                       double alpha = 0.1,
                       const EncoderConfig& encoder = EncoderConfig::standard());

double coherency(const CoherencyScorer& scorer, std::string_view word,
                 std::span<const std::string> left, std::span<const std::string> right);

// Scores by talking to a long-running child process, one request per line:
// "candidate TAB left-context TAB right-context" (contexts space-joined), and
// the reply is one decimal score per line. Calls are serialized.
class ExternalProcessScorer final : public CoherencyScorer {
 public:
  explicit ExternalProcessScorer(const std::string& command);
  ~ExternalProcessScorer() override;
  ExternalProcessScorer(const ExternalProcessScorer&) = delete;
  ExternalProcessScorer& operator=(const ExternalProcessScorer&) = delete;

  double score(std::string_view word, std::span<const std::string> left,
               std::span<const std::string> right) const override;

 private:
  mutable std::mutex mu_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  mutable std::string pending_;
};

struct Candidate {
  std::string word;
  std::size_t distance = 0;
  double coherency = 0.0;
  std::uint64_t corpus_count = 0;
};

// Dictionary words sharing the token's key at level k within edit distance d
// of the case-folded token, ordered by distance then word. Coherency is left
// at 0. Throws kEmptyToken and kLevelMismatch.
std::vector<Candidate> candidates_for(std::string_view token, const WordDictionary& dict,
                                      int k, std::size_t d);

enum class TokenStatus { kClean, kNormalized, kUnknown };
std::string_view to_string(TokenStatus status) noexcept;

struct TokenAnnotation {
  TokenSpan span;
  std::string original;
  std::optional<std::string> replacement;
  std::vector<Candidate> candidates;  // best first, at most top_n
  TokenStatus status = TokenStatus::kClean;
};

struct NormalizationResult {
  std::string output_text;
  std::vector<TokenAnnotation> annotations;  // one per word token, in order
};

struct NormalizeParams {
  int k = 1;
  std::size_t d = 3;
  std::size_t top_n = 5;
};

// A word token is clean when its case-folded spelling is a dictionary word.
// Otherwise its candidates are ranked by coherency (desc), distance (asc),
// frequency (desc) and spelling, and the best one replaces it; with no
// candidate the token is unknown and left alone.
NormalizationResult normalize_text(std::string_view text, const WordDictionary& dict,
                                   const CoherencyScorer& scorer,
                                   const NormalizeParams& params = {});

// Applies the casing pattern of `original` (ALL CAPS or Initial cap) to a
// lowercase replacement; other patterns yield the replacement unchanged.
std::string match_case(std::string_view original, std::string_view replacement);

}  // namespace cryptext
