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

#include "cryptext/error.hpp"
#include "cryptext/textcore.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {
namespace {

void append_canonical(std::u32string& out, char32_t cp, const EncoderConfig& config) {
  if (utf8::is_combining_mark(cp) || config.is_stripped(cp)) return;
  if (config.is_visual_symbol(cp)) {
    out.push_back(config.visual_target(cp));
    return;
  }
  const char32_t lower = utf8::to_lower(cp);
  if (config.is_stripped(lower)) return;
  const std::string_view base = utf8::ascii_base(lower);
  if (base.empty()) {
    out.push_back(config.visual_target(lower));
    return;
  }
  for (char c : base) out.push_back(config.visual_target(static_cast<char32_t>(c)));
}

std::u32string canonical_u32(std::string_view raw, const EncoderConfig& config) {
  std::u32string out;
  out.reserve(raw.size());
  std::size_t pos = 0;
  while (pos < raw.size()) {
    auto d = utf8::decode(raw, pos);
    if (!d) {
      ++pos;  // invalid bytes carry no letter information
      continue;
    }
    append_canonical(out, d->cp, config);
    pos += d->length;
  }
  return out;
}

}  // namespace

std::string canonicalize(std::string_view raw, const EncoderConfig& config) {
  return utf8::from_u32(canonical_u32(raw, config));
}

std::optional<SoundexKey> try_encode(std::string_view raw, int k,
                                     const EncoderConfig& config) noexcept {
  if (k < 0) return std::nullopt;
  const std::u32string canon = canonical_u32(raw, config);
  bool has_letter = false;
  for (char32_t cp : canon) {
    if (utf8::is_letter(cp)) {
      has_letter = true;
      break;
    }
  }
  if (!has_letter) return std::nullopt;

  const std::size_t prefix_len = static_cast<std::size_t>(k) + 1;
  SoundexKey key{k, {}};
  std::string& text = key.text;
  for (std::size_t i = 0; i < prefix_len; ++i) {
    if (i >= canon.size()) {
      text.push_back('0');
    } else if (canon[i] >= 'a' && canon[i] <= 'z') {
      text.push_back(static_cast<char>(canon[i] - 'a' + 'A'));
    } else {
      utf8::append(text, canon[i]);
    }
  }

  std::size_t digit_count = 0;
  char last = '\0';
  for (std::size_t i = prefix_len; i < canon.size(); ++i) {
    const char digit = config.digit_for(canon[i]);
    if (digit != last && digit != '0') {
      text.push_back(digit);
      ++digit_count;
    }
    last = digit;
  }
  for (; digit_count < static_cast<std::size_t>(config.min_digits()); ++digit_count) {
    text.push_back('0');
  }
  return key;
}

SoundexKey encode(std::string_view raw, int k, const EncoderConfig& config) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "phonetic level must be >= 0");
  auto key = try_encode(raw, k, config);
  if (!key) {
    throw Error(ErrorCode::kEmptyToken,
                "token has no letters after canonicalization: '" + std::string(raw) + "'");
  }
  return *std::move(key);
}

}  // namespace cryptext
