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
#include <sstream>

#include "cryptext/error.hpp"
#include "cryptext/normalize.hpp"
#include "cryptext/utf8.hpp"
#include "io_util.hpp"

namespace cryptext {
namespace {

// Case and accent folding only; visual symbols are left in place so that
// entries like "c4t" are rejected instead of silently becoming "cat".
std::string fold_entry(std::string_view entry) {
  std::string out;
  for (char32_t cp : utf8::to_u32(entry)) {
    if (utf8::is_combining_mark(cp)) continue;
    const char32_t lower = utf8::to_lower(cp);
    const std::string_view base = utf8::ascii_base(lower);
    if (!base.empty()) {
      out += base;
    } else {
      utf8::append(out, lower);
    }
  }
  return out;
}

bool is_plain_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

WordDictionary WordDictionary::build(std::span<const std::string> words,
                                     const std::set<int>& levels,
                                     const EncoderConfig& encoder, BuildReport* report,
                                     std::string source) {
  BuildReport local;
  BuildReport& rep = report ? *report : local;
  rep = {};
  if (levels.empty()) throw Error(ErrorCode::kInvalidArgument, "no dictionary levels");

  WordDictionary dict(encoder);
  dict.source_ = std::move(source);
  for (int k : levels) {
    if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative dictionary level");
    dict.by_key_[k];
  }
  for (const std::string& entry : words) {
    std::string word = fold_entry(entry);
    if (!is_plain_word(word) || canonicalize(word, encoder) != word) {
      ++rep.rejected;
      if (rep.rejected_samples.size() < 8) rep.rejected_samples.push_back(entry);
      continue;
    }
    if (!dict.words_.insert(word).second) {
      ++rep.duplicates;
      continue;
    }
    ++rep.accepted;
    for (auto& [k, buckets] : dict.by_key_) {
      buckets[encode(word, k, encoder).text].push_back(word);
    }
  }
  if (dict.words_.empty()) throw Error(ErrorCode::kEmptyWordlist, "wordlist has no usable words");
  for (auto& [k, buckets] : dict.by_key_) {
    for (auto& [key, list] : buckets) std::sort(list.begin(), list.end());
  }
  return dict;
}

WordDictionary WordDictionary::load(const std::filesystem::path& path,
                                    const std::set<int>& levels,
                                    const EncoderConfig& encoder, BuildReport* report) {
  std::istringstream in(detail::read_file(path));
  std::vector<std::string> words;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    words.push_back(line.substr(first));
  }
  return build(words, levels, encoder, report, path.filename().string());
}

bool WordDictionary::contains(std::string_view word) const {
  return words_.contains(std::string(word));
}

const std::vector<std::string>* WordDictionary::bucket(int k, std::string_view key) const {
  auto level = by_key_.find(k);
  if (level == by_key_.end()) return nullptr;
  auto it = level->second.find(std::string(key));
  return it == level->second.end() ? nullptr : &it->second;
}

std::set<int> WordDictionary::levels() const {
  std::set<int> out;
  for (const auto& [k, _] : by_key_) out.insert(k);
  return out;
}

}  // namespace cryptext
