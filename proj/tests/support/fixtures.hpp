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
#include <random>
#include <string>
#include <vector>

#include "cryptext/corpus.hpp"

namespace cryptext::testing {

// Removes the directory tree on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);

std::vector<Document> documents(const std::vector<std::string>& texts);

// Three sentences mixing "the", "dirty" and "republicans" with variants.
std::vector<Document> sample_corpus();

// Lowercase consonant-vowel word of min_len..max_len letters.
std::string random_word(std::mt19937_64& rng, int min_len, int max_len);

// One or two letters swapped for default visual-map symbols that canonicalize
// back to the same letter. '!', '|' and '+' are only used inside the word
// because the tokenizer trims them at the edges. Empty if no letter qualifies.
std::string visual_variant(const std::string& word, std::mt19937_64& rng);

// One letter at position >= 2 written two or three times.
std::string repeat_variant(const std::string& word, std::mt19937_64& rng);

struct RoundTripFixture {
  std::vector<std::string> dictionary;
  std::vector<std::vector<std::string>> variants;  // per dictionary word
  std::vector<Document> training;      // clean sentences for the language model
  std::vector<Document> index_corpus;  // sentences with variants mixed in
  std::vector<std::string> held_out;   // clean sentences to perturb
  std::size_t min_distinct_contexts = 0;  // over all words, trigram histories
};

// Sentences are walks on a random successor graph in which every word has
// the same in-degree, so every word is seen after many distinct histories.
// No dictionary word is a perturbation of another (same k=1 key within edit
// distance 3), and no variant is a dictionary word.
RoundTripFixture make_round_trip_fixture(std::uint64_t seed, std::size_t words = 1000,
                                         std::size_t training_sentences = 30000,
                                         std::size_t held_out_sentences = 300);

// Documents spread over 2021 (a few without or with broken timestamps) that
// mention "republicans" or one of its variants with probability about 1/2.
std::vector<Document> make_timeline_corpus(std::uint64_t seed, std::size_t n);

}  // namespace cryptext::testing
