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

#include "fixtures.hpp"

#include <stdlib.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cryptext/textcore.hpp"

namespace cryptext::testing {

TempDir::TempDir() {
  std::string tmpl = (std::filesystem::temp_directory_path() / "cryptext-test-XXXXXX").string();
  if (mkdtemp(tmpl.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::vector<Document> documents(const std::vector<std::string>& texts) {
  std::vector<Document> docs;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Document d;
    d.id = "doc" + std::to_string(i);
    d.text = texts[i];
    docs.push_back(std::move(d));
  }
  return docs;
}

std::vector<Document> sample_corpus() {
  return documents(
      {"the dirrty republicans", "thee dirty repubLIEcans", "the dirty republic@@ns"});
}

std::string random_word(std::mt19937_64& rng, int min_len, int max_len) {
  static constexpr std::string_view kConsonants = "bcdfghjklmnprstvz";
  static constexpr std::string_view kVowels = "aeiou";
  std::uniform_int_distribution<int> len(min_len, max_len);
  const int n = len(rng);
  std::string w;
  const bool vowel_first = rng() % 4 == 0;
  for (int i = 0; i < n; ++i) {
    const bool vowel = (i % 2 == 0) == vowel_first;
    const auto& set = vowel ? kVowels : kConsonants;
    w += set[rng() % set.size()];
  }
  return w;
}

std::string visual_variant(const std::string& word, std::mt19937_64& rng) {
  static const std::map<char, std::string> kAnywhere = {
      {'a', "@4"}, {'e', "3"}, {'o', "0"}, {'s', "$5"}, {'t', "7"}, {'b', "8"}, {'l', "1"}};
  static const std::map<char, std::string> kInterior = {{'i', "!"}, {'l', "|"}, {'t', "+"}};
  std::vector<std::pair<std::size_t, std::string>> options;
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::string symbols;
    if (auto it = kAnywhere.find(word[i]); it != kAnywhere.end()) symbols += it->second;
    if (i > 0 && i + 1 < word.size()) {
      if (auto it = kInterior.find(word[i]); it != kInterior.end()) symbols += it->second;
    }
    if (!symbols.empty()) options.emplace_back(i, symbols);
  }
  if (options.empty()) return {};
  std::shuffle(options.begin(), options.end(), rng);
  const std::size_t n = std::min<std::size_t>(options.size(), 1 + rng() % 2);
  std::string out = word;
  // Replace from the back so earlier offsets stay valid.
  std::sort(options.begin(), options.begin() + static_cast<std::ptrdiff_t>(n),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [pos, symbols] = options[i];
    out.replace(pos, 1, 1, symbols[rng() % symbols.size()]);
  }
  return out;
}

std::string repeat_variant(const std::string& word, std::mt19937_64& rng) {
  if (word.size() < 3) return word + word.back();
  const std::size_t pos = 2 + rng() % (word.size() - 2);
  return word.substr(0, pos) + std::string(1 + rng() % 2, word[pos]) + word.substr(pos);
}

RoundTripFixture make_round_trip_fixture(std::uint64_t seed, std::size_t n_words,
                                         std::size_t training_sentences,
                                         std::size_t held_out_sentences) {
  std::mt19937_64 rng(seed);
  RoundTripFixture f;
  std::unordered_set<std::string> taken;
  std::unordered_map<std::string, std::vector<std::string>> by_key;
  while (f.dictionary.size() < n_words) {
    std::string w = random_word(rng, 5, 9);
    if (taken.contains(w)) continue;
    const std::string key = encode(w, 1).text;
    auto& bucket = by_key[key];
    const bool clash = std::any_of(bucket.begin(), bucket.end(), [&](const std::string& o) {
      return levenshtein(o, w) <= 3;
    });
    if (clash) continue;
    bucket.push_back(w);
    taken.insert(w);
    f.dictionary.push_back(std::move(w));
  }
  for (const std::string& w : f.dictionary) {
    std::vector<std::string> vs;
    for (int attempt = 0; attempt < 8 && vs.size() < 2; ++attempt) {
      std::string v = vs.empty() ? visual_variant(w, rng) : repeat_variant(w, rng);
      if (v.empty() || v == w || taken.contains(v)) continue;
      if (std::find(vs.begin(), vs.end(), v) != vs.end()) continue;
      vs.push_back(std::move(v));
    }
    f.variants.push_back(std::move(vs));
  }

  // Successor graph: column j is a permutation, so every in-degree is kFanOut.
  constexpr std::size_t kFanOut = 6;
  std::vector<std::array<std::size_t, kFanOut>> succ(n_words);
  for (std::size_t j = 0; j < kFanOut; ++j) {
    std::vector<std::size_t> perm(n_words);
    for (std::size_t i = 0; i < n_words; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n_words; ++i) succ[i][j] = perm[i];
  }
  const auto walk = [&](std::size_t length) {
    std::vector<std::size_t> ids;
    std::size_t cur = rng() % n_words;
    for (std::size_t i = 0; i < length; ++i) {
      ids.push_back(cur);
      cur = succ[cur][rng() % kFanOut];
    }
    return ids;
  };
  const auto join = [&](const std::vector<std::size_t>& ids, double variant_rate) {
    std::string s;
    std::bernoulli_distribution use_variant(variant_rate);
    for (std::size_t id : ids) {
      if (!s.empty()) s += ' ';
      const auto& vs = f.variants[id];
      if (!vs.empty() && use_variant(rng)) {
        s += vs[rng() % vs.size()];
      } else {
        s += f.dictionary[id];
      }
    }
    return s;
  };

  std::vector<std::set<std::pair<std::size_t, std::size_t>>> contexts(n_words);
  constexpr std::size_t kBos = static_cast<std::size_t>(-1);
  std::vector<std::string> training_texts;
  for (std::size_t s = 0; s < training_sentences; ++s) {
    const auto ids = walk(8 + rng() % 5);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      contexts[ids[i]].insert({i >= 2 ? ids[i - 2] : kBos, i >= 1 ? ids[i - 1] : kBos});
    }
    training_texts.push_back(join(ids, 0.0));
  }
  f.training = documents(training_texts);
  f.min_distinct_contexts = contexts.empty() ? 0 : contexts[0].size();
  for (const auto& c : contexts) f.min_distinct_contexts = std::min(f.min_distinct_contexts, c.size());

  std::vector<std::string> index_texts;
  for (std::size_t s = 0; s < training_sentences / 2; ++s) {
    index_texts.push_back(join(walk(8 + rng() % 5), 0.3));
  }
  f.index_corpus = documents(index_texts);
  for (std::size_t s = 0; s < held_out_sentences; ++s) {
    f.held_out.push_back(join(walk(8 + rng() % 5), 0.0));
  }
  return f;
}

std::vector<Document> make_timeline_corpus(std::uint64_t seed, std::size_t n) {
  static const std::vector<std::string> kVariants = {"republicans", "repubLIEcans",
                                                     "republic@@ns", "Republicans",
                                                     "republicanss"};
  static const std::vector<std::string> kFiller = {
      "the", "vote", "senate", "today", "news", "dirty", "thee", "tax", "bill", "hate",
      "love", "great", "policy", "state", "2021", "#politics"};
  std::mt19937_64 rng(seed);
  const Timestamp start = *parse_rfc3339("2021-01-01T00:00:00Z");
  const Timestamp span = 365 * 86400;
  std::vector<Document> docs;
  docs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Document d;
    d.id = "t" + std::to_string(i);
    const std::size_t len = 4 + rng() % 10;
    for (std::size_t w = 0; w < len; ++w) {
      if (!d.text.empty()) d.text += ' ';
      if (rng() % 8 == 0) {
        d.text += kVariants[rng() % kVariants.size()];
      } else {
        d.text += kFiller[rng() % kFiller.size()];
      }
    }
    const auto roll = rng() % 100;
    if (roll == 0) {
      // no timestamp
    } else if (roll == 1) {
      d.bad_timestamp = true;
    } else {
      d.timestamp = start + static_cast<Timestamp>(rng() % span);
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace cryptext::testing
