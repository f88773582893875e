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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cryptext {

// Rules for visual canonicalization and phonetic digit assignment.
//
// Immutable after construction; every constructor validates that
//  * visual_map targets are lowercase ASCII letters and never sources,
//  * digit_groups and skip_set partition a..z,
//  * digits are '1'..'9'.
class EncoderConfig {
 public:
  using VisualMap = std::map<char32_t, char32_t>;
  using DigitGroups = std::map<char, char>;  // letter -> digit

  EncoderConfig(VisualMap visual_map, DigitGroups digit_groups,
                std::set<char> skip_set, std::set<char32_t> strip_chars,
                int min_digits = 3);

  // Classical Soundex grouping plus the leetspeak visual map.
  static const EncoderConfig& standard();

  // Parses the sectioned text format ([visual_map], [digit_groups], [skip],
  // [strip], optional [options] with min_digits=N). Throws kInvalidConfig.
  static EncoderConfig parse(std::string_view text);
  static EncoderConfig load(const std::filesystem::path& path);

  // Canonical text form; parse(serialize()) reproduces the config.
  std::string serialize() const;
  std::uint64_t hash() const noexcept { return hash_; }
  std::string hash_hex() const;

  const VisualMap& visual_map() const noexcept { return visual_map_; }
  const std::set<char32_t>& strip_chars() const noexcept { return strip_; }
  int min_digits() const noexcept { return min_digits_; }

  bool is_visual_symbol(char32_t cp) const noexcept {
    return visual_map_.contains(cp);
  }
  char32_t visual_target(char32_t cp) const noexcept;
  bool is_stripped(char32_t cp) const noexcept { return strip_.contains(cp); }
  // '1'..'9' for grouped letters, '0' for skip letters and non-letters.
  char digit_for(char32_t cp) const noexcept;

  friend bool operator==(const EncoderConfig& a, const EncoderConfig& b) {
    return a.hash_ == b.hash_ && a.serialize() == b.serialize();
  }

 private:
  VisualMap visual_map_;
  std::array<char, 26> digits_{};
  std::set<char32_t> strip_;
  int min_digits_;
  std::uint64_t hash_ = 0;
};

struct TokenSpan {
  std::string raw;
  std::size_t start = 0;  // byte offsets into the source, end exclusive
  std::size_t end = 0;
  bool is_word = false;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

struct SoundexKey {
  int level = 0;
  std::string text;

  friend auto operator<=>(const SoundexKey&, const SoundexKey&) = default;
};

// A token is a maximal run of letters, digits, combining marks, visual-map
// symbols, hyphens and apostrophes, with hyphens, apostrophes and the
// sentence-punctuation symbols ! | + trimmed from both ends. Invalid UTF-8
// bytes always separate tokens.
std::vector<TokenSpan> tokenize(
    std::string_view text, const EncoderConfig& config = EncoderConfig::standard());

// Lowercases, folds precomposed Latin letters to ASCII, maps visual symbols
// to the letters they imitate and removes strip characters and combining
// marks. Idempotent.
std::string canonicalize(std::string_view raw,
                         const EncoderConfig& config = EncoderConfig::standard());

// Phonetic key at level k: k+1 literal characters of the canonical form
// (uppercased, '0'-padded when short) followed by the collapsed digit code,
// right-padded to min_digits and never truncated. Throws kEmptyToken when the
// canonical form contains no letter.
SoundexKey encode(std::string_view raw, int k,
                  const EncoderConfig& config = EncoderConfig::standard());

std::optional<SoundexKey> try_encode(
    std::string_view raw, int k,
    const EncoderConfig& config = EncoderConfig::standard()) noexcept;

enum class CaseMode { kFold, kExact };

// Full two-row dynamic program over code points.
std::size_t levenshtein(std::string_view a, std::string_view b,
                        CaseMode mode = CaseMode::kFold);
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

// levenshtein(a, b) <= d, decided with a diagonal band of width 2d+1 that
// stops as soon as every cell in a row exceeds d.
bool within_distance(std::string_view a, std::string_view b, std::size_t d,
                     CaseMode mode = CaseMode::kFold);
bool within_distance(std::u32string_view a, std::u32string_view b,
                     std::size_t d);

// Distance if it is at most d, otherwise nullopt. Same band as above.
std::optional<std::size_t> bounded_distance(std::u32string_view a,
                                            std::u32string_view b,
                                            std::size_t d);

}  // namespace cryptext
